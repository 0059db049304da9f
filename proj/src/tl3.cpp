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

#include "kbracket/tl3.hpp"

#include <stdexcept>
#include <string>

namespace kbracket::tl3 {

namespace {
constexpr std::string_view names[5] = {"1_3", "U1", "U2", "r", "s"};
}

std::string_view name(Element e) noexcept { return names[index(e)]; }

Element parse_element(std::string_view text) {
    for (Element e : all_elements)
        if (names[index(e)] == text) return e;
    throw std::invalid_argument("unknown diagram monoid element '" + std::string(text) + "'");
}

}  // namespace kbracket::tl3
