/*
   Copyright 2026 The kbracket Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "kbracket/bivariate.hpp"

namespace kbracket {

BivariatePoly::BivariatePoly(const Polynomial& c) : coeffs_{c} { normalize(); }

BivariatePoly::BivariatePoly(std::initializer_list<Polynomial> coeffs) : coeffs_(coeffs) {
    normalize();
}

BivariatePoly::BivariatePoly(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

BivariatePoly BivariatePoly::variable() { return BivariatePoly{Polynomial{}, Polynomial{1}}; }

void BivariatePoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial BivariatePoly::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Polynomial{};
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& rhs) {
    *this = *this * rhs;
    return *this;
}

BivariatePoly BivariatePoly::pow(unsigned n) const {
    BivariatePoly result = Polynomial{1};
    for (unsigned i = 0; i < n; ++i) result *= *this;
    return result;
}

BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }

BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const auto& a = lhs.coefficients();
    const auto& b = rhs.coefficients();
    std::vector<Polynomial> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return BivariatePoly(std::move(out));
}

std::string BivariatePoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[k].to_string() + ")";
        if (k >= 1) s += std::string(var);
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

}  // namespace kbracket
