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

#ifndef KBRACKET_ORACLE_HPP
#define KBRACKET_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kbracket/bracket.hpp"
#include "kbracket/polynomial.hpp"
#include "kbracket/tl3.hpp"

// Brute-force state sums over flat (shadow) diagrams. Everything here is
// independent of the monoid algebra in bracket.hpp apart from the final
// BracketVector container, so it can serve as ground truth for it.
namespace kbracket::oracle {

using EdgeId = std::uint32_t;

/// Boundary positions of a 3-tangle: left side top to bottom, then right
/// side top to bottom.
enum class BoundaryPoint : std::uint8_t { L1 = 0, L2, L3, R1, R2, R3 };

std::string_view name(BoundaryPoint p) noexcept;

class MalformedDiagram : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class CrossingLimitExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A planar 4-valent shadow. Each crossing lists its four incident edges in
/// cyclic order, so edges 0 and 2 (and 1 and 3) are opposite. Edge ids are
/// 0..edge_count()-1 and every id occurs exactly twice across crossings and
/// boundary. A closed diagram has no boundary.
struct ShadowDiagram {
    std::vector<std::array<EdgeId, 4>> crossings;
    std::optional<std::array<EdgeId, 6>> boundary;  // indexed by BoundaryPoint
    unsigned free_loops = 0;

    bool is_closed() const noexcept { return !boundary.has_value(); }
    std::size_t crossing_count() const noexcept { return crossings.size(); }
    std::size_t edge_count() const noexcept;

    /// Throws MalformedDiagram if the edge-id invariant is violated.
    void validate() const;

    friend bool operator==(const ShadowDiagram&, const ShadowDiagram&) = default;
};

/// Letters of a 3-strand tangle word: X1/X2 cross strands (i, i+1); U1/U2
/// insert the crossingless cup-cap element U_i.
enum class Letter : std::uint8_t { X1, X2, U1, U2 };

using TangleWord = std::vector<Letter>;

/// Whitespace-separated letters, e.g. "X1 X2 U1". "U1CAP"/"U2CAP" are
/// accepted as aliases. Throws std::invalid_argument.
TangleWord parse_word(std::string_view text);
std::string to_string(const TangleWord& word);

/// The single-letter bracket tuple: [1,1,0,0,0] for X1, [0,1,0,0,0] for U1, ...
BracketVector letter_bracket(Letter letter);

/// Glues 3-strand fragments left to right into a ShadowDiagram.
class TangleBuilder {
   public:
    TangleBuilder();

    /// Flat crossing of strands (i, i+1), i in {1, 2}.
    TangleBuilder& crossing(int i);
    /// Cap joining strands (i, i+1) followed by a fresh cup.
    TangleBuilder& cup_cap(int i);
    /// Two-crossing clasp of strands (i, i+1) turned a quarter turn from the
    /// horizontal twist crossing(i).crossing(i); its bracket is (x+2)<1> + <U_i>.
    TangleBuilder& clasp(int i);
    TangleBuilder& letter(Letter l);

    ShadowDiagram build() const;

   private:
    EdgeId fresh() { return next_id_++; }
    std::size_t row(int i) const;

    std::vector<std::array<EdgeId, 4>> crossings_;
    std::vector<std::pair<EdgeId, EdgeId>> glued_;
    std::array<EdgeId, 3> frontier_{};
    EdgeId next_id_ = 0;
};

/// Left-to-right gluing of the letters; the empty word is the identity tangle.
ShadowDiagram compile_word(const TangleWord& word);

/// Joins L_i to R_i for each i without new crossings.
ShadowDiagram close(const ShadowDiagram& tangle);

/// Tangle product: the right boundary of left is glued to the left boundary
/// of right.
ShadowDiagram concatenate(const ShadowDiagram& left, const ShadowDiagram& right);

/// n-fold concatenation; the crossingless identity tangle for n = 0.
ShadowDiagram power_diagram(const ShadowDiagram& tangle, unsigned n);

/// Partner of each boundary point in a smoothed state.
using Pairing = std::array<BoundaryPoint, 6>;

/// "{L1R1,L2R2,L3R3}", each pair listed once, ordered by its first point.
std::string to_string(const Pairing& pairing);

struct SmoothingResult {
    unsigned loops = 0;
    std::optional<Pairing> pairing;  // empty for closed diagrams
};

/// Applies one smoothing per crossing: choice 0 joins edges (0,1),(2,3) of the
/// crossing tuple, choice 1 joins (1,2),(3,0).
SmoothingResult smooth(const ShadowDiagram& d, const std::vector<bool>& choices);

/// The five planar matchings of {L1..R3} are exactly the monoid elements.
/// Throws std::invalid_argument for any other (non-planar) matching.
tl3::Element classify_boundary(const Pairing& pairing);

struct EnumerationOptions {
    unsigned max_crossings = 24;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// Sum over all 2^c states of x^loops, sorted into the slot of the residual
/// monoid element. Throws std::invalid_argument for closed diagrams.
BracketVector enumerate_tangle(const ShadowDiagram& d, const EnumerationOptions& opts = {});

/// Sum over all states of x^loops for a closed diagram; the empty diagram is 1.
Polynomial enumerate_closed(const ShadowDiagram& d, const EnumerationOptions& opts = {});

using StateSum = std::variant<BracketVector, Polynomial>;

StateSum enumerate_states(const ShadowDiagram& d, const EnumerationOptions& opts = {});

}  // namespace kbracket::oracle

#endif  // KBRACKET_ORACLE_HPP
