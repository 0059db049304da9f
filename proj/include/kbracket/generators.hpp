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

#ifndef KBRACKET_GENERATORS_HPP
#define KBRACKET_GENERATORS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kbracket/bracket.hpp"
#include "kbracket/oracle.hpp"

// The three flat Turk's-head generators: T (three-lead Turk's head),
// C (chain sinnet) and E (figure-eight chain).
namespace kbracket::generators {

enum class Generator { T, C, E };

inline constexpr Generator all_generators[3] = {Generator::T, Generator::C, Generator::E};

std::string_view name(Generator g) noexcept;
/// "T", "C" or "E"; throws std::invalid_argument otherwise.
Generator parse_generator(std::string_view text);

/// T = [1,1,1,0,1], C = [x+2,x+2,1,0,1], E = [x^2+4x+4,x+2,x+2,0,1].
BracketVector generator_tuple(Generator g);

/// 2, 3 and 4.
unsigned crossings(Generator g);

/// Builder recipe of the stored diagram, e.g. "X1 . clasp2".
std::string presentation(Generator g);

/// A shadow whose state sum is generator_tuple(g). The diagrams are checked
/// against the tuples with the brute-force oracle on first use; a mismatch
/// throws std::logic_error.
const oracle::ShadowDiagram& generator_diagram(Generator g);

/// Reference coefficient triangle s(n,k): 11 rows for T, 7 for C, 6 for E.
const std::vector<std::vector<BigInt>>& reference_table(Generator g);

}  // namespace kbracket::generators

#endif  // KBRACKET_GENERATORS_HPP
