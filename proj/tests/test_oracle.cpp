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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "test_support.hpp"

#include "kbracket/bracket.hpp"
#include "kbracket/oracle.hpp"

using namespace kbracket;
using namespace kbracket::oracle;
using kbracket::testing::P;
using BP = BoundaryPoint;

namespace {

const BracketVector kT{P("1"), P("1"), P("1"), P("0"), P("1")};

Pairing pairing_of(std::initializer_list<std::pair<BP, BP>> pairs) {
    Pairing p{};
    for (auto [u, v] : pairs) {
        p[static_cast<std::size_t>(u)] = v;
        p[static_cast<std::size_t>(v)] = u;
    }
    return p;
}

TangleWord random_word(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    TangleWord w(len(rng));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    return w;
}

BracketVector algebraic(const TangleWord& w) {
    BracketVector v = BracketVector::unit();
    for (Letter l : w) v = compose(v, letter_bracket(l));
    return v;
}

BigInt total_at_one(const BracketVector& v) {
    BigInt s = 0;
    for (const auto& p : v.slots) s += p.evaluate(1);
    return s;
}

// Same diagram with crossings reordered, each tuple rotated and edges renamed.
ShadowDiagram scramble(const ShadowDiagram& d, std::mt19937& rng) {
    std::vector<EdgeId> rename(d.edge_count());
    std::iota(rename.begin(), rename.end(), EdgeId{0});
    std::shuffle(rename.begin(), rename.end(), rng);
    ShadowDiagram out = d;
    std::shuffle(out.crossings.begin(), out.crossings.end(), rng);
    std::uniform_int_distribution<int> rot(0, 3);
    for (auto& c : out.crossings) {
        std::rotate(c.begin(), c.begin() + rot(rng), c.end());
        for (auto& e : c) e = rename[e];
    }
    if (out.boundary)
        for (auto& e : *out.boundary) e = rename[e];
    return out;
}

}  // namespace

TEST_CASE("compile_word") {
    const auto id = compile_word({});
    CHECK(id.crossing_count() == 0);
    CHECK(enumerate_tangle(id) == BracketVector::unit());
    CHECK(compile_word({Letter::X1, Letter::X2}).crossing_count() == 2);
    CHECK(enumerate_tangle(compile_word({Letter::X1})) == BracketVector(P("1"), P("1"), P("0"), P("0"), P("0")));
    CHECK(compile_word(parse_word("X1 U2 X2 U1")).crossing_count() == 2);
    for (auto l : {Letter::X1, Letter::X2, Letter::U1, Letter::U2})
        CHECK(enumerate_tangle(compile_word({l})) == letter_bracket(l));
}

TEST_CASE("words") {
    CHECK(parse_word("X1 X2  U1\tU2") == TangleWord{Letter::X1, Letter::X2, Letter::U1, Letter::U2});
    CHECK(parse_word("U1CAP U2CAP") == TangleWord{Letter::U1, Letter::U2});
    CHECK(parse_word("").empty());
    CHECK(to_string(parse_word("X1 X2")) == "X1 X2");
    CHECK_THROWS_AS(parse_word("X3"), std::invalid_argument);
    CHECK(letter_bracket(Letter::X2) == BracketVector(P("1"), P("0"), P("1"), P("0"), P("0")));
}

TEST_CASE("smooth examples") {
    const auto x1 = compile_word({Letter::X1});
    const auto s0 = smooth(x1, {false});
    CHECK(s0.loops == 0);
    REQUIRE(s0.pairing);
    CHECK(to_string(*s0.pairing) == "{L1R1,L2R2,L3R3}");
    const auto s1 = smooth(x1, {true});
    CHECK(s1.loops == 0);
    CHECK(classify_boundary(*s1.pairing) == tl3::Element::U1);

    const auto t2 = compile_word(parse_word("X1 X2 X1 X2"));
    const auto s = smooth(t2, {true, false, true, false});
    CHECK(s.loops == 1);
    CHECK(classify_boundary(*s.pairing) == tl3::Element::U1);

    CHECK_THROWS_AS(smooth(x1, {true, false}), std::invalid_argument);
}

TEST_CASE("classify_boundary") {
    using tl3::Element;
    CHECK(classify_boundary(pairing_of({{BP::L1, BP::R1}, {BP::L2, BP::R2}, {BP::L3, BP::R3}})) == Element::ID3);
    CHECK(classify_boundary(pairing_of({{BP::L1, BP::L2}, {BP::R1, BP::R2}, {BP::L3, BP::R3}})) == Element::U1);
    CHECK(classify_boundary(pairing_of({{BP::L2, BP::L3}, {BP::R2, BP::R3}, {BP::L1, BP::R1}})) == Element::U2);
    CHECK(classify_boundary(pairing_of({{BP::L2, BP::L3}, {BP::L1, BP::R3}, {BP::R1, BP::R2}})) == Element::R);
    CHECK(classify_boundary(pairing_of({{BP::L1, BP::L2}, {BP::L3, BP::R1}, {BP::R2, BP::R3}})) == Element::S);
    // crossed matching
    CHECK_THROWS_AS(classify_boundary(pairing_of({{BP::L1, BP::R2}, {BP::L2, BP::R1}, {BP::L3, BP::R3}})),
                    std::invalid_argument);
}

TEST_CASE("enumeration examples") {
    CHECK(enumerate_tangle(compile_word({Letter::X1, Letter::X2})) == kT);
    CHECK(enumerate_closed(ShadowDiagram{{}, std::nullopt, 1}) == P("x"));
    CHECK(enumerate_closed(ShadowDiagram{}) == P("1"));
    CHECK(enumerate_closed(close(compile_word(parse_word("X1 X2 X1 X2")))) == P("3x^3+8x^2+5x"));
    CHECK(enumerate_closed(close(compile_word({}))) == P("x^3"));
    CHECK_THROWS_AS(enumerate_tangle(close(compile_word({Letter::X1}))), std::invalid_argument);
    const auto sum = enumerate_states(close(compile_word({Letter::X1})));
    REQUIRE(std::holds_alternative<Polynomial>(sum));
    CHECK(std::get<Polynomial>(sum) == P("x^3+x^2"));
}

TEST_CASE("oracle agrees with the algebra on random words") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 250; ++trial) {
        const auto w = random_word(rng, 8);
        const auto d = compile_word(w);
        const auto v = enumerate_tangle(d);
        CAPTURE(to_string(w));
        CHECK(v == algebraic(w));
        CHECK(enumerate_closed(close(d)) == closure(v));
    }
}

TEST_CASE("powers of T") {
    const auto t = compile_word({Letter::X1, Letter::X2});
    for (unsigned n = 0; n <= 5; ++n) {
        const auto d = power_diagram(t, n);
        CHECK(d.crossing_count() == 2 * n);
        const auto v = enumerate_tangle(d);
        CHECK(v == power(kT, n));
        CHECK(total_at_one(v) == BigInt(1) << (2 * n));
        CHECK(enumerate_closed(close(d)) == closure(power(kT, n)));
    }
}

TEST_CASE("state count is 2^c") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = compile_word(random_word(rng, 10));
        CHECK(total_at_one(enumerate_tangle(d)) == BigInt(1) << d.crossing_count());
        CHECK(enumerate_closed(close(d)).evaluate(1) == BigInt(1) << d.crossing_count());
    }
}

TEST_CASE("concatenate matches compose") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto u = compile_word(random_word(rng, 5));
        const auto w = compile_word(random_word(rng, 5));
        CHECK(enumerate_tangle(concatenate(u, w)) == compose(enumerate_tangle(u), enumerate_tangle(w)));
    }
}

TEST_CASE("result does not depend on crossing order or edge names") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = compile_word(random_word(rng, 8));
        const auto expected = enumerate_tangle(d);
        const auto closed_expected = enumerate_closed(close(d));
        for (int k = 0; k < 3; ++k) {
            CHECK(enumerate_tangle(scramble(d, rng)) == expected);
            CHECK(enumerate_closed(scramble(close(d), rng)) == closed_expected);
        }
    }
}

TEST_CASE("parallel enumeration is identical to sequential") {
    const auto d = power_diagram(compile_word({Letter::X1, Letter::X2}), 7);
    const auto seq = enumerate_tangle(d, {24, 1});
    CHECK(enumerate_tangle(d, {24, 4}) == seq);
    CHECK(enumerate_tangle(d, {24, 3}) == seq);
    CHECK(seq == power(kT, 7));
    CHECK(enumerate_closed(close(d), {24, 4}) == enumerate_closed(close(d), {24, 1}));
}

TEST_CASE("malformed diagrams and limits") {
    ShadowDiagram bad;
    bad.crossings = {{0, 1, 2, 3}};
    bad.boundary = std::array<EdgeId, 6>{0, 1, 2, 4, 5, 6};
    CHECK_THROWS_AS(bad.validate(), MalformedDiagram);
    CHECK_THROWS_AS(enumerate_tangle(bad), MalformedDiagram);
    ShadowDiagram triple{{{0, 0, 0, 1}}, std::nullopt, 0};
    CHECK_THROWS_AS(enumerate_closed(triple), MalformedDiagram);

    const auto d = power_diagram(compile_word({Letter::X1, Letter::X2}), 3);
    CHECK_THROWS_AS(enumerate_tangle(d, {5, 1}), CrossingLimitExceeded);
    CHECK_NOTHROW(enumerate_tangle(d, {6, 1}));
}

TEST_CASE("diagram invariants of builders") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = compile_word(random_word(rng, 8));
        CHECK_NOTHROW(d.validate());
        CHECK(d.edge_count() == 2 * d.crossing_count() + 3);
        CHECK(close(d).is_closed());
    }
}
