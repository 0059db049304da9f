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

#ifndef KBRACKET_POLYNOMIAL_HPP
#define KBRACKET_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kbracket {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over the integers in the variable x.
///
/// Coefficients are stored lowest power first and are always kept in
/// canonical form: the last stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all. Values are immutable once built
/// apart from the compound-assignment operators.
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(int c);  // NOLINT: integers promote to constants
    Polynomial(const BigInt& c);  // NOLINT
    Polynomial(std::initializer_list<BigInt> coeffs);
    explicit Polynomial(std::vector<BigInt> coeffs);

    /// c * x^k
    static Polynomial monomial(const BigInt& c, std::size_t k);
    /// The polynomial x.
    static Polynomial x() { return monomial(1, 1); }

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero past the degree.
    BigInt coefficient(std::size_t k) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    BigInt evaluate(const BigInt& v) const;
    Polynomial pow(unsigned n) const;

    /// Divides every coefficient by d. Throws std::domain_error if any
    /// coefficient is not a multiple of d.
    Polynomial exact_divide(const BigInt& d) const;

    /// Descending powers, e.g. "3x^3+8x^2+5x", "-x+1", "0".
    std::string to_string() const;
    /// Inverse of to_string. Accepts whitespace, repeated powers and any
    /// term order. Throws std::invalid_argument on malformed input.
    static Polynomial parse(std::string_view text);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace kbracket

#endif  // KBRACKET_POLYNOMIAL_HPP
