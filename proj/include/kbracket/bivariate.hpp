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

#ifndef KBRACKET_BIVARIATE_HPP
#define KBRACKET_BIVARIATE_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "kbracket/polynomial.hpp"

namespace kbracket {

/// Polynomial in an outer variable (lambda for characteristic polynomials,
/// y for generating functions) whose coefficients are Polynomials in x.
/// Canonical like Polynomial: no trailing zero coefficients.
class BivariatePoly {
   public:
    BivariatePoly() = default;
    BivariatePoly(const Polynomial& c);  // NOLINT: constants in the outer variable
    BivariatePoly(std::initializer_list<Polynomial> coeffs);
    explicit BivariatePoly(std::vector<Polynomial> coeffs);

    /// The outer variable itself.
    static BivariatePoly variable();

    const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }
    Polynomial coefficient(std::size_t k) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    BivariatePoly operator-() const;
    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly& operator-=(const BivariatePoly& rhs);
    BivariatePoly& operator*=(const BivariatePoly& rhs);
    BivariatePoly pow(unsigned n) const;

    /// e.g. "-(1)L^5+(2x+3)L^4" style; zero renders as "0".
    std::string to_string(std::string_view var = "L") const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

   private:
    void normalize();
    std::vector<Polynomial> coeffs_;
};

BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs);
BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs);
BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);

}  // namespace kbracket

#endif  // KBRACKET_BIVARIATE_HPP
