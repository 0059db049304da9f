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

#include "kbracket/generators.hpp"

#include <stdexcept>

namespace kbracket::generators {

namespace {

std::size_t idx(Generator g) { return static_cast<std::size_t>(g); }

oracle::ShadowDiagram build_diagram(Generator g) {
    oracle::TangleBuilder b;
    switch (g) {
        case Generator::T: b.crossing(1).crossing(2); break;
        case Generator::C: b.crossing(1).clasp(2); break;
        case Generator::E: b.clasp(1).clasp(2); break;
    }
    return b.build();
}

struct CheckedDiagrams {
    oracle::ShadowDiagram diagrams[3];

    CheckedDiagrams() {
        for (Generator g : all_generators) {
            diagrams[idx(g)] = build_diagram(g);
            const BracketVector got = oracle::enumerate_tangle(diagrams[idx(g)]);
            if (got != generator_tuple(g) || diagrams[idx(g)].crossing_count() != crossings(g)) {
                throw std::logic_error("generator " + std::string(name(g)) +
                                       " diagram self-check failed: state sum " + got.to_string());
            }
        }
    }
};

std::vector<std::vector<BigInt>> rows(std::initializer_list<std::initializer_list<long>> data) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& r : data) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace

std::string_view name(Generator g) noexcept {
    constexpr std::string_view names[3] = {"T", "C", "E"};
    return names[idx(g)];
}

Generator parse_generator(std::string_view text) {
    for (Generator g : all_generators)
        if (name(g) == text) return g;
    throw std::invalid_argument("unknown generator '" + std::string(text) + "' (expected T, C or E)");
}

BracketVector generator_tuple(Generator g) {
    const Polynomial x = Polynomial::x();
    switch (g) {
        case Generator::T: return {1, 1, 1, 0, 1};
        case Generator::C: return {x + 2, x + 2, 1, 0, 1};
        case Generator::E: return {x * x + 4 * x + 4, x + 2, x + 2, 0, 1};
    }
    return {};
}

unsigned crossings(Generator g) {
    constexpr unsigned c[3] = {2, 3, 4};
    return c[idx(g)];
}

std::string presentation(Generator g) {
    switch (g) {
        case Generator::T: return "X1 . X2";
        case Generator::C: return "X1 . clasp2";
        case Generator::E: return "clasp1 . clasp2";
    }
    return {};
}

const oracle::ShadowDiagram& generator_diagram(Generator g) {
    static const CheckedDiagrams checked;
    return checked.diagrams[idx(g)];
}

const std::vector<std::vector<BigInt>>& reference_table(Generator g) {
    static const std::vector<std::vector<BigInt>> tables[3] = {
        rows({
            {0, 0, 0, 1},
            {0, 1, 2, 1},
            {0, 5, 8, 3},
            {0, 16, 30, 16, 2},
            {0, 45, 104, 81, 24, 2},
            {0, 121, 340, 356, 170, 35, 2},
            {0, 320, 1068, 1411, 932, 315, 48, 2},
            {0, 841, 3262, 5209, 4396, 2079, 532, 63, 2},
            {0, 2205, 9760, 18281, 18784, 11440, 4144, 840, 80, 2},
            {0, 5776, 28746, 61786, 74838, 55809, 26226, 7602, 1260, 99, 2},
            {0, 15125, 83620, 202841, 282980, 249815, 144488, 54690, 13080, 1815, 120, 2},
        }),
        rows({
            {0, 0, 0, 1},
            {0, 1, 3, 3, 1},
            {0, 9, 22, 21, 10, 2},
            {0, 49, 141, 164, 105, 42, 10, 1},
            {0, 225, 796, 1186, 1008, 569, 232, 67, 12, 1},
            {0, 961, 4115, 7677, 8400, 6205, 3393, 1435, 461, 105, 15, 1},
            {0, 3969, 20106, 45481, 61630, 57078, 39298, 21239, 9198, 3151, 822, 153, 18, 1},
        }),
        rows({
            {0, 0, 0, 1},
            {0, 1, 4, 6, 4, 1},
            {0, 17, 56, 80, 64, 30, 8, 1},
            {0, 169, 660, 1120, 1096, 684, 280, 74, 12, 1},
            {0, 1377, 6640, 14112, 17504, 14128, 7808, 3008, 800, 142, 16, 1},
            {0, 10201, 59660, 156624, 244280, 252460, 182544, 94960, 35904, 9800, 1880, 242, 20, 1},
        }),
    };
    return tables[idx(g)];
}

}  // namespace kbracket::generators
