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

#ifndef KBRACKET_TL3_HPP
#define KBRACKET_TL3_HPP

#include <array>
#include <cstdint>
#include <string_view>

// The 3-strand diagram monoid: the five crossingless 3-tangles
// {1_3, U1, U2, r, s} with r := U2*U1 and s := U1*U2, where a product AB
// glues the right boundary of A to the left boundary of B.
namespace kbracket::tl3 {

enum class Element : std::uint8_t { ID3 = 0, U1 = 1, U2 = 2, R = 3, S = 4 };

inline constexpr std::array<Element, 5> all_elements{Element::ID3, Element::U1, Element::U2,
                                                     Element::R, Element::S};

inline constexpr std::size_t index(Element e) noexcept { return static_cast<std::size_t>(e); }

/// circle^loops disjoint-union element
struct ScaledElement {
    unsigned loops = 0;
    Element element = Element::ID3;

    friend constexpr bool operator==(const ScaledElement&, const ScaledElement&) = default;
};

namespace detail {
using enum Element;
// row = left factor, column = right factor
inline constexpr ScaledElement table[5][5] = {
    /* 1_3 */ {{0, ID3}, {0, U1}, {0, U2}, {0, R}, {0, S}},
    /* U1  */ {{0, U1}, {1, U1}, {0, S}, {0, U1}, {1, S}},
    /* U2  */ {{0, U2}, {0, R}, {1, U2}, {1, R}, {0, U2}},
    /* r   */ {{0, R}, {1, R}, {0, U2}, {0, R}, {1, U2}},
    /* s   */ {{0, S}, {0, U1}, {1, S}, {1, U1}, {0, S}},
};
}  // namespace detail

constexpr ScaledElement multiply(Element left, Element right) noexcept {
    return detail::table[index(left)][index(right)];
}

/// Multiply scaled elements, accumulating loop counts.
constexpr ScaledElement multiply(ScaledElement left, ScaledElement right) noexcept {
    ScaledElement r = multiply(left.element, right.element);
    r.loops += left.loops + right.loops;
    return r;
}

/// Loops left after joining left endpoint i to right endpoint i.
constexpr unsigned closure_loops(Element e) noexcept {
    constexpr unsigned loops[5] = {3, 2, 2, 1, 1};
    return loops[index(e)];
}

/// Top-bottom reflection: swaps U1 <-> U2 and r <-> s. A monoid automorphism.
constexpr Element mirror(Element e) noexcept {
    using enum Element;
    switch (e) {
        case U1: return U2;
        case U2: return U1;
        case R: return S;
        case S: return R;
        default: return ID3;
    }
}

/// "1_3", "U1", "U2", "r", "s"
std::string_view name(Element e) noexcept;
/// Inverse of name(); throws std::invalid_argument.
Element parse_element(std::string_view text);

}  // namespace kbracket::tl3

#endif  // KBRACKET_TL3_HPP
