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

#include "doctest.h"

#include "kbracket/oracle.hpp"
#include "kbracket/tl3.hpp"

using namespace kbracket;
using tl3::Element;
using tl3::ScaledElement;

TEST_CASE("multiply examples") {
    CHECK(tl3::multiply(Element::ID3, Element::R) == ScaledElement{0, Element::R});
    CHECK(tl3::multiply(Element::U1, Element::U1) == ScaledElement{1, Element::U1});
    CHECK(tl3::multiply(Element::U1, Element::U2) == ScaledElement{0, Element::S});
    CHECK(tl3::multiply(Element::U2, Element::U1) == ScaledElement{0, Element::R});
}

TEST_CASE("closure loops") {
    CHECK(tl3::closure_loops(Element::ID3) == 3);
    CHECK(tl3::closure_loops(Element::U1) == 2);
    CHECK(tl3::closure_loops(Element::U2) == 2);
    CHECK(tl3::closure_loops(Element::R) == 1);
    CHECK(tl3::closure_loops(Element::S) == 1);
}

TEST_CASE("loop-scaled associativity over all 125 triples") {
    for (Element a : tl3::all_elements)
        for (Element b : tl3::all_elements)
            for (Element c : tl3::all_elements) {
                const auto left = tl3::multiply(tl3::multiply(ScaledElement{0, a}, ScaledElement{0, b}), ScaledElement{0, c});
                const auto right = tl3::multiply(ScaledElement{0, a}, tl3::multiply(ScaledElement{0, b}, ScaledElement{0, c}));
                CAPTURE(tl3::name(a));
                CAPTURE(tl3::name(b));
                CAPTURE(tl3::name(c));
                CHECK(left == right);
            }
}

TEST_CASE("identity, idempotents, loops at most one") {
    for (Element e : tl3::all_elements) {
        CHECK(tl3::multiply(Element::ID3, e) == ScaledElement{0, e});
        CHECK(tl3::multiply(e, Element::ID3) == ScaledElement{0, e});
        for (Element f : tl3::all_elements) CHECK(tl3::multiply(e, f).loops <= 1);
    }
    CHECK(tl3::multiply(Element::U1, Element::U1) == ScaledElement{1, Element::U1});
    CHECK(tl3::multiply(Element::U2, Element::U2) == ScaledElement{1, Element::U2});
    CHECK(tl3::multiply(Element::R, Element::R) == ScaledElement{0, Element::R});
    CHECK(tl3::multiply(Element::S, Element::S) == ScaledElement{0, Element::S});
}

TEST_CASE("top-bottom mirror is an automorphism") {
    for (Element a : tl3::all_elements)
        for (Element b : tl3::all_elements) {
            const auto ab = tl3::multiply(a, b);
            const auto mirrored = tl3::multiply(tl3::mirror(a), tl3::mirror(b));
            CHECK(mirrored == ScaledElement{ab.loops, tl3::mirror(ab.element)});
        }
}

TEST_CASE("r/s relabeling reverses products") {
    // left-right reflection fixes U1, U2 and swaps r, s
    auto flip = [](Element e) {
        return e == Element::R ? Element::S : e == Element::S ? Element::R : e;
    };
    for (Element a : tl3::all_elements)
        for (Element b : tl3::all_elements) {
            const auto ab = tl3::multiply(a, b);
            const auto reversed = tl3::multiply(flip(b), flip(a));
            CHECK(reversed == ScaledElement{ab.loops, flip(ab.element)});
        }
}

TEST_CASE("table agrees with gluing the crossingless diagrams") {
    using oracle::Letter;
    auto word = [](Element e) -> oracle::TangleWord {
        switch (e) {
            case Element::ID3: return {};
            case Element::U1: return {Letter::U1};
            case Element::U2: return {Letter::U2};
            case Element::R: return {Letter::U2, Letter::U1};
            case Element::S: return {Letter::U1, Letter::U2};
        }
        return {};
    };
    for (Element a : tl3::all_elements)
        for (Element b : tl3::all_elements) {
            auto w = word(a);
            const auto wb = word(b);
            w.insert(w.end(), wb.begin(), wb.end());
            const auto sum = oracle::enumerate_tangle(oracle::compile_word(w));
            const auto expected = tl3::multiply(a, b);
            BracketVector v;
            v[expected.element] = Polynomial::monomial(1, expected.loops);
            CAPTURE(tl3::name(a));
            CAPTURE(tl3::name(b));
            CHECK(sum == v);
        }
}

TEST_CASE("closure loops agree with closing the diagrams") {
    const oracle::TangleWord words[5] = {{}, {oracle::Letter::U1}, {oracle::Letter::U2},
                                         {oracle::Letter::U2, oracle::Letter::U1},
                                         {oracle::Letter::U1, oracle::Letter::U2}};
    for (Element e : tl3::all_elements) {
        const auto closed = oracle::close(oracle::compile_word(words[tl3::index(e)]));
        CHECK(oracle::enumerate_closed(closed) == Polynomial::monomial(1, tl3::closure_loops(e)));
    }
}

TEST_CASE("names") {
    for (Element e : tl3::all_elements) CHECK(tl3::parse_element(tl3::name(e)) == e);
    CHECK(tl3::name(Element::ID3) == "1_3");
    CHECK_THROWS_AS(tl3::parse_element("t"), std::invalid_argument);
}
