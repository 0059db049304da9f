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

#include "kbracket/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kbracket {

Polynomial::Polynomial(int c) : coeffs_{BigInt(c)} { normalize(); }

Polynomial::Polynomial(const BigInt& c) : coeffs_{c} { normalize(); }

Polynomial::Polynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const auto& a = lhs.coefficients();
    const auto& b = rhs.coefficients();
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    // leading product of two nonzero integers is nonzero, so this is canonical
    return Polynomial(std::move(out));
}

BigInt Polynomial::evaluate(const BigInt& v) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = 1;
    Polynomial base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

Polynomial Polynomial::exact_divide(const BigInt& d) const {
    if (d.is_zero()) throw std::domain_error("division of polynomial by zero");
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        BigInt q, r;
        boost::multiprecision::divide_qr(coeffs_[i], d, q, r);
        if (!r.is_zero()) {
            throw std::domain_error("coefficient " + coeffs_[i].str() + " of " + to_string() +
                                    " is not divisible by " + d.str());
        }
        out[i] = std::move(q);
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (negative)
            s += '-';
        else if (!s.empty())
            s += '+';
        if (k == 0 || mag != 1) s += mag.str();
        if (k >= 1) s += 'x';
        if (k >= 2) s += '^' + std::to_string(k);
    }
    return s;
}

Polynomial Polynomial::parse(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty polynomial");

    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
    };

    std::vector<BigInt> coeffs;
    std::size_t i = 0;
    bool first = true;
    while (i < t.size()) {
        bool negative = false;
        if (t[i] == '+' || t[i] == '-') {
            negative = t[i] == '-';
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        std::size_t start = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        const bool has_digits = i > start;
        BigInt c = has_digits ? BigInt(t.substr(start, i - start)) : BigInt(1);

        std::size_t power = 0;
        if (i < t.size() && t[i] == 'x') {
            ++i;
            power = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                std::size_t ps = i;
                while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
                if (i == ps) fail("missing exponent");
                power = std::stoul(t.substr(ps, i - ps));
            }
        } else if (!has_digits) {
            fail("expected a term");
        }
        if (i < t.size() && t[i] != '+' && t[i] != '-') fail(std::string("unexpected '") + t[i] + "'");

        if (coeffs.size() <= power) coeffs.resize(power + 1);
        coeffs[power] += negative ? BigInt(-c) : c;
    }
    return Polynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace kbracket
