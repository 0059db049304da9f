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

#ifndef KBRACKET_SERIES_HPP
#define KBRACKET_SERIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kbracket/bivariate.hpp"
#include "kbracket/bracket.hpp"
#include "kbracket/generators.hpp"

// Generating functions sum_n <closure(B^n)> y^n and the coefficient
// triangles s(n, k) read off from them.
namespace kbracket::series {

/// numerator / denominator, both polynomials in y over Z[x].
struct RationalTerm {
    BivariatePoly numerator;
    BivariatePoly denominator;

    friend bool operator==(const RationalTerm&, const RationalTerm&) = default;
};

/// quadratic: x(2 - p y) / (1 - p y + m y^2),  m = (p^2 - q^2)/4
/// geometric: x(x^2 - 2) / (1 - a y)
struct RationalGF {
    RationalTerm quadratic;
    RationalTerm geometric;

    std::string to_string() const;
};

/// Throws std::domain_error if p^2 - q^2 is not divisible by 4.
RationalGF gf_from_tuple(const BracketVector& v);

/// The general two-term form with the factor x missing from the first term:
///   (p y - 2) / (c2 y^2 + p y - 1) + x(x^2 - 2)/(1 - a y)
/// with c2 = (de-bc)x^2 + (-ac-ab)x + (-d-a)e - ad + bc - a^2.
/// Kept to document that it disagrees with the closure brackets at n = 0.
RationalGF uncorrected_general_gf(const BracketVector& v);

/// The y^2 coefficient c2 above, term by term. Equals -(p^2 - q^2)/4.
Polynomial uncorrected_y2_coefficient(const BracketVector& v);

/// First n_max + 1 series coefficients, from the recurrence that the
/// denominator imposes. The denominator's constant term must be +1 or -1.
std::vector<Polynomial> expand(const RationalTerm& term, unsigned n_max);
std::vector<Polynomial> expand(const RationalGF& gf, unsigned n_max);

/// Rows s(n, 0..deg) of the closure brackets.
struct CoefficientTriangle {
    std::vector<std::vector<BigInt>> rows;

    /// s(n, k) for every row n (zero where k exceeds the row degree).
    std::vector<BigInt> column(std::size_t k) const;
    /// Rows concatenated, k ascending.
    std::vector<BigInt> flatten() const;

    friend bool operator==(const CoefficientTriangle&, const CoefficientTriangle&) = default;
};

CoefficientTriangle triangle_from_series(const std::vector<Polynomial>& brackets);
CoefficientTriangle coefficient_table(const BracketVector& v, unsigned n_max);
CoefficientTriangle coefficient_table(generators::Generator g, unsigned n_max);

/// One row per line, entries comma-separated.
std::string to_csv(const CoefficientTriangle& t);

/// OEIS b-file lines "index value", indices starting at offset.
std::string to_bfile(const std::vector<BigInt>& values, long offset = 0);

/// Parses "index value" lines; blank lines and '#' comments are skipped.
/// Throws std::invalid_argument on anything else.
std::vector<std::pair<long, BigInt>> parse_bfile(std::string_view text);

struct BfileComparison {
    bool match = false;
    std::size_t compared = 0;
    std::optional<long> first_mismatch;  // b-file index
    std::string message;
};

/// Compares values (indexed from offset) against every entry of the
/// reference b-file that falls inside the computed range. A reference that
/// does not overlap the computed range counts as a mismatch.
BfileComparison compare_bfile(const std::vector<BigInt>& values, long offset,
                              const std::vector<std::pair<long, BigInt>>& reference);

}  // namespace kbracket::series

#endif  // KBRACKET_SERIES_HPP
