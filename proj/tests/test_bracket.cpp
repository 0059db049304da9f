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

#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

#include "kbracket/bracket.hpp"

using namespace kbracket;
using kbracket::testing::P;
using kbracket::testing::random_tuple;

namespace {

const BracketVector kT{P("1"), P("1"), P("1"), P("0"), P("1")};
const BracketVector kC{P("x+2"), P("x+2"), P("1"), P("0"), P("1")};
const BracketVector kE{P("x^2+4x+4"), P("x+2"), P("x+2"), P("0"), P("1")};

StatesMatrix matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
    StatesMatrix m;
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* entry : row) m(i, j++) = P(entry);
        ++i;
    }
    return m;
}

// Product formula for <BD> written out slot by slot.
BracketVector product_formula(const BracketVector& B, const BracketVector& D) {
    const Polynomial x = Polynomial::x();
    const auto& [aB, bB, cB, dB, eB] = B.slots;
    const auto& [aD, bD, cD, dD, eD] = D.slots;
    return {aB * aD,
            bB * aD + (aB + bB * x + dB) * bD + (dB * x + bB) * eD,
            cB * aD + (aB + cB * x + eB) * cD + (cB + eB * x) * dD,
            dB * aD + (dB * x + bB) * cD + (aB + bB * x + dB) * dD,
            eB * aD + (cB + eB * x) * bD + (aB + cB * x + eB) * eD};
}

// Cofactor expansion along the first row.
BivariatePoly laplace_det(const std::vector<std::vector<BivariatePoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return BivariatePoly(Polynomial(1));
    if (n == 1) return m[0][0];
    BivariatePoly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<BivariatePoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BivariatePoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const BivariatePoly term = m[0][j] * laplace_det(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

BivariatePoly reference_charpoly(const StatesMatrix& m) {
    std::vector<std::vector<BivariatePoly>> rows(5, std::vector<BivariatePoly>(5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            rows[i][j] = BivariatePoly(m(i, j));
            if (i == j) rows[i][j] -= BivariatePoly::variable();
        }
    return laplace_det(rows);
}

StatesMatrix matrix_power(const StatesMatrix& m, unsigned n) {
    StatesMatrix r = StatesMatrix::identity();
    for (unsigned k = 0; k < n; ++k) r = m * r;
    return r;
}

}  // namespace

TEST_CASE("compose examples") {
    CHECK(compose(BracketVector::unit(), kT) == kT);
    CHECK(compose(kT, BracketVector::unit()) == kT);
    CHECK(compose(kT, kT) == BracketVector(P("1"), P("x+3"), P("x+3"), P("1"), P("2x+4")));
    const auto U1 = BracketVector::basis(tl3::Element::U1);
    const auto U2 = BracketVector::basis(tl3::Element::U2);
    CHECK(compose(U1, U1) == P("x") * U1);
    CHECK(compose(U2, U1) == BracketVector::basis(tl3::Element::R));
    CHECK(compose(U1, U2) == BracketVector::basis(tl3::Element::S));
}

TEST_CASE("basis products reproduce the monoid table") {
    for (auto a : tl3::all_elements)
        for (auto b : tl3::all_elements) {
            const auto prod = tl3::multiply(a, b);
            CHECK(compose(BracketVector::basis(a), BracketVector::basis(b)) ==
                  Polynomial::monomial(1, prod.loops) * BracketVector::basis(prod.element));
        }
}

TEST_CASE("compose is associative, unital and bilinear") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> scalar(-4, 4);
    for (int trial = 0; trial < 500; ++trial) {
        const auto u = random_tuple(rng, 2, 3);
        const auto v = random_tuple(rng, 2, 3);
        const auto w = random_tuple(rng, 2, 3);
        CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
        CHECK(compose(BracketVector::unit(), u) == u);
        CHECK(compose(u, BracketVector::unit()) == u);
        const Polynomial k(scalar(rng));
        CHECK(compose(u + k * v, w) == compose(u, w) + k * compose(v, w));
        CHECK(compose(u, v + k * w) == compose(u, v) + k * compose(u, w));
    }
}

TEST_CASE("power is a monoid homomorphism") {
    for (const auto& v : {kT, kC, kE}) {
        CHECK(power(v, 0) == BracketVector::unit());
        CHECK(power(v, 1) == v);
        for (unsigned m = 0; m <= 8; ++m)
            for (unsigned n = 0; m + n <= 8; ++n) CHECK(power(v, m + n) == compose(power(v, m), power(v, n)));
        for (unsigned n = 0; n <= 8; ++n) CHECK(power(v, n).a() == v.a().pow(n));
    }
}

TEST_CASE("closure") {
    CHECK(closure(BracketVector::unit()) == P("x^3"));
    CHECK(closure(kT) == P("x^3+2x^2+x"));
    CHECK(closure(power(kT, 2)) == P("3x^3+8x^2+5x"));
    CHECK(closure(BracketVector::basis(tl3::Element::R)) == P("x"));
}

TEST_CASE("closure is a trace and mirror invariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = random_tuple(rng, 2, 3);
        const auto w = random_tuple(rng, 2, 3);
        CHECK(closure(compose(v, w)) == closure(compose(w, v)));
        CHECK(closure(mirror(v)) == closure(v));
        CHECK(mirror(compose(v, w)) == compose(mirror(v), mirror(w)));
        CHECK(relabel_rs(compose(v, w)) == compose(relabel_rs(w), relabel_rs(v)));
    }
    for (const auto& v : {kT, kC, kE})
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(closure(power(mirror(v), n)) == closure(power(v, n)));
            CHECK(closure(power(relabel_rs(v), n)) == closure(power(v, n)));
        }
}

TEST_CASE("components satisfy the cubic recurrence") {
    std::mt19937 rng(11);
    std::vector<BracketVector> tuples{kT, kC, kE};
    for (int i = 0; i < 20; ++i) tuples.push_back(random_tuple(rng, 1, 3));
    for (const auto& v : tuples) {
        const auto inv = pq_invariants(v);
        const Polynomial m = inv.eigen_product();
        const Polynomial& a = v.a();
        const Polynomial c2 = a + inv.p;
        const Polynomial c1 = a * inv.p + m;
        const Polynomial c0 = a * m;
        std::vector<BracketVector> pw;
        for (unsigned n = 0; n <= 10; ++n) pw.push_back(power(v, n));
        for (unsigned n = 0; n + 3 <= 10; ++n)
            for (std::size_t s = 0; s < 5; ++s)
                CHECK(pw[n + 3].slots[s] ==
                      c2 * pw[n + 2].slots[s] - c1 * pw[n + 1].slots[s] + c0 * pw[n].slots[s]);
    }
}

TEST_CASE("pq invariants") {
    const auto t = pq_invariants(kT);
    CHECK(t.p == P("2x+3"));
    CHECK(t.qsq == P("4x+5"));
    CHECK(t.eigen_product() == P("x^2+2x+1"));
    const auto c = pq_invariants(kC);
    CHECK(c.p == P("x^2+5x+5"));
    CHECK(c.qsq == P("x^4+2x^3+3x^2+10x+9"));
    CHECK(c.p * c.p - c.qsq == P("4") * P("2x^3+8x^2+10x+4"));
    CHECK(c.eigen_product() == P("2x^3+8x^2+10x+4"));
    const auto e = pq_invariants(kE);
    CHECK(e.p == P("4x^2+12x+9"));
    CHECK(e.qsq == P("8x^2+24x+17"));
    CHECK(e.eigen_product() == P("4x^4+24x^3+52x^2+48x+16"));
}

TEST_CASE("eigen product matches its expanded form") {
    std::mt19937 rng(3);
    const Polynomial x = Polynomial::x();
    for (int i = 0; i < 200; ++i) {
        const auto v = random_tuple(rng, 2, 4);
        const auto& [a, b, c, d, e] = v.slots;
        const Polynomial expected = (b * c - d * e) * x * x + a * (b + c) * x + a * a + a * (d + e) + d * e - b * c;
        CHECK(pq_invariants(v).eigen_product() == expected);
        CHECK(pq_invariants(v).p == (b + c) * x + P("2") * a + d + e);
    }
}

TEST_CASE("closed form agrees with closure of powers") {
    std::mt19937 rng(5);
    std::vector<BracketVector> tuples{kT, kC, kE};
    for (int i = 0; i < 20; ++i) tuples.push_back(random_tuple(rng, 1, 3));
    for (const auto& v : tuples)
        for (unsigned n = 0; n <= 12; ++n) CHECK(closed_form_bracket(v, n) == closure(power(v, n)));
    CHECK(closed_form_bracket(kT, 0) == P("x^3"));
    CHECK(closed_form_bracket(kT, 1) == P("x^3+2x^2+x"));
    CHECK(closed_form_bracket(kT, 2) == P("3x^3+8x^2+5x"));
}

TEST_CASE("eigen product rejects non-divisible input") {
    PQInvariants bad{P("1"), P("0")};
    CHECK_THROWS_AS(bad.eigen_product(), std::domain_error);
}

TEST_CASE("states matrices match the reference ones") {
    CHECK(states_matrix(kT) == matrix({{"1", "0", "0", "0", "0"},
                                       {"1", "x+1", "0", "0", "1"},
                                       {"1", "0", "x+2", "x+1", "0"},
                                       {"0", "0", "1", "x+1", "0"},
                                       {"1", "x+1", "0", "0", "x+2"}}));
    CHECK(states_matrix(kC) == matrix({{"x+2", "0", "0", "0", "0"},
                                       {"x+2", "x^2+3x+2", "0", "0", "x+2"},
                                       {"1", "0", "2x+3", "x+1", "0"},
                                       {"0", "0", "x+2", "x^2+3x+2", "0"},
                                       {"1", "x+1", "0", "0", "2x+3"}}));
    CHECK(states_matrix(kE) == matrix({{"x^2+4x+4", "0", "0", "0", "0"},
                                       {"x+2", "2x^2+6x+4", "0", "0", "x+2"},
                                       {"x+2", "0", "2x^2+6x+5", "2x+2", "0"},
                                       {"0", "0", "x+2", "2x^2+6x+4", "0"},
                                       {"1", "2x+2", "0", "0", "2x^2+6x+5"}}));
}

TEST_CASE("states matrices generate powers") {
    std::mt19937 rng(13);
    std::vector<BracketVector> tuples{kT, kC, kE};
    for (int i = 0; i < 10; ++i) tuples.push_back(random_tuple(rng, 1, 3));
    for (const auto& v : tuples) {
        const auto right = states_matrix(v);
        const auto left = left_states_matrix(v);
        CHECK(left == relabel_rs(states_matrix(relabel_rs(v))));
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(matrix_power(right, n).apply(BracketVector::unit()) == power(v, n));
            CHECK(matrix_power(left, n).apply(BracketVector::unit()) == power(v, n));
        }
        const auto w = random_tuple(rng, 1, 3);
        CHECK(right.apply(w) == compose(w, v));
        CHECK(left.apply(w) == compose(v, w));
    }
}

TEST_CASE("written-out product formula") {
    std::mt19937 rng(17);
    for (int i = 0; i < 300; ++i) {
        const auto B = random_tuple(rng, 2, 3);
        const auto D = random_tuple(rng, 2, 3);
        // the slotwise formula is the product with the factors swapped
        CHECK(product_formula(B, D) == compose(D, B));
        CHECK(product_formula(B, D) == relabel_rs(compose(relabel_rs(B), relabel_rs(D))));
    }
}

TEST_CASE("characteristic polynomial") {
    const auto lambda = BivariatePoly::variable();
    CHECK(charpoly(StatesMatrix::identity()) ==
          -(lambda - BivariatePoly(P("1"))).pow(5));
    std::mt19937 rng(19);
    std::vector<BracketVector> tuples{kT, kC, kE};
    for (int i = 0; i < 20; ++i) tuples.push_back(random_tuple(rng, 1, 3));
    for (const auto& v : tuples) {
        const auto m = states_matrix(v);
        const auto reference = reference_charpoly(m);
        CHECK(charpoly(m) == reference);
        CHECK(charpoly(left_states_matrix(v)) == reference);
        CHECK(factored_charpoly(v) == reference);
    }
    const auto inv = pq_invariants(kT);
    const auto quad = lambda * lambda - BivariatePoly(inv.p) * lambda + BivariatePoly(inv.eigen_product());
    CHECK(charpoly(states_matrix(kT)) == -(lambda - BivariatePoly(P("1"))) * quad * quad);
}

TEST_CASE("berkowitz on small matrices") {
    const Polynomial x = Polynomial::x();
    // [[x,1],[2,3]] -> l^2 - (x+3) l + 3x - 2
    const auto cp = berkowitz_charpoly({{x, P("1")}, {P("2"), P("3")}});
    CHECK(cp == BivariatePoly{P("3x-2"), -P("x+3"), P("1")});
    CHECK(berkowitz_charpoly({{P("5")}}) == BivariatePoly{P("-5"), P("1")});
}

TEST_CASE("text form") {
    CHECK(kT.to_string() == "[1,1,1,0,1]");
    CHECK(power(kT, 2).to_string() == "[1,x+3,x+3,1,2x+4]");
}
