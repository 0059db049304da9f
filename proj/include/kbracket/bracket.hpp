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

#ifndef KBRACKET_BRACKET_HPP
#define KBRACKET_BRACKET_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kbracket/bivariate.hpp"
#include "kbracket/polynomial.hpp"
#include "kbracket/tl3.hpp"

namespace kbracket {

/// Bracket of a 3-tangle written in the diagram-monoid basis:
///   <B> = a<1_3> + b<U1> + c<U2> + d<r> + e<s>.
/// Slots are indexed by tl3::Element.
struct BracketVector {
    std::array<Polynomial, 5> slots{};

    BracketVector() = default;
    BracketVector(Polynomial a, Polynomial b, Polynomial c, Polynomial d, Polynomial e)
        : slots{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e)} {}

    /// [1,0,0,0,0], the bracket of the trivial tangle.
    static BracketVector unit() { return basis(tl3::Element::ID3); }
    static BracketVector basis(tl3::Element e);

    const Polynomial& a() const noexcept { return slots[0]; }
    const Polynomial& b() const noexcept { return slots[1]; }
    const Polynomial& c() const noexcept { return slots[2]; }
    const Polynomial& d() const noexcept { return slots[3]; }
    const Polynomial& e() const noexcept { return slots[4]; }

    Polynomial& operator[](tl3::Element el) noexcept { return slots[tl3::index(el)]; }
    const Polynomial& operator[](tl3::Element el) const noexcept { return slots[tl3::index(el)]; }

    BracketVector& operator+=(const BracketVector& rhs);

    /// "[1,x+3,x+3,1,2x+4]"
    std::string to_string() const;

    friend bool operator==(const BracketVector&, const BracketVector&) = default;
};

BracketVector operator+(BracketVector lhs, const BracketVector& rhs);
BracketVector operator*(const Polynomial& scalar, BracketVector v);

/// Top-bottom reflection: swaps b<->c and d<->e.
BracketVector mirror(const BracketVector& v);
/// Swaps only the r and s labels (d<->e). This is left-right reflection,
/// which reverses products: compose(v, w) = relabel_rs(compose(relabel_rs(w), relabel_rs(v))).
BracketVector relabel_rs(const BracketVector& v);

/// 5x5 polynomial matrix, rows and columns in (a,b,c,d,e) order.
struct StatesMatrix {
    std::array<std::array<Polynomial, 5>, 5> entries{};

    static StatesMatrix identity();

    const Polynomial& operator()(std::size_t row, std::size_t col) const { return entries[row][col]; }
    Polynomial& operator()(std::size_t row, std::size_t col) { return entries[row][col]; }

    BracketVector apply(const BracketVector& v) const;

    friend bool operator==(const StatesMatrix&, const StatesMatrix&) = default;
};

StatesMatrix operator*(const StatesMatrix& lhs, const StatesMatrix& rhs);

/// Conjugation by the d<->e permutation.
StatesMatrix relabel_rs(const StatesMatrix& m);

/// p and q^2 of a bracket tuple; q itself is never formed.
struct PQInvariants {
    Polynomial p;
    Polynomial qsq;

    /// (p^2 - q^2)/4, the product of the two non-trivial eigenvalues.
    /// Throws std::domain_error when p^2 - q^2 is not divisible by 4.
    Polynomial eigen_product() const;
};

/// Bracket of the product tangle vw (v on the left), obtained by
/// multiplying out the 25 basis products in the monoid and turning every
/// extracted circle into a factor of x.
BracketVector compose(const BracketVector& v, const BracketVector& w);

/// The states matrix of v: column j is compose(basis_j, v), so that
/// <B_{n+1}> = M <B_n> with B_{n+1} = B_n B.
StatesMatrix states_matrix(const BracketVector& v);

/// Matrix of w -> compose(v, w). Equals relabel_rs(states_matrix(relabel_rs(v))).
StatesMatrix left_states_matrix(const BracketVector& v);

/// Bracket of v^n; unit() for n = 0.
BracketVector power(const BracketVector& v, unsigned n);

/// x^3 a + x^2 (b + c) + x (d + e)
Polynomial closure(const BracketVector& v);

PQInvariants pq_invariants(const BracketVector& v);

/// Closure bracket of v^n from a^n and the two-term eigenvalue recurrence
///   u_0 = 2x, u_1 = p x, u_{k+1} = p u_k - m u_{k-1},  m = (p^2 - q^2)/4,
/// returning x a^n (x^2 - 2) + u_n.
Polynomial closed_form_bracket(const BracketVector& v, unsigned n);

/// det(lambda I - A) for a square matrix over Z[x], by Berkowitz's
/// division-free algorithm.
BivariatePoly berkowitz_charpoly(const std::vector<std::vector<Polynomial>>& a);

/// det(M - lambda I).
BivariatePoly charpoly(const StatesMatrix& m);

/// -(lambda - a)(lambda^2 - p lambda + m)^2 built from v's invariants.
BivariatePoly factored_charpoly(const BracketVector& v);

}  // namespace kbracket

#endif  // KBRACKET_BRACKET_HPP
