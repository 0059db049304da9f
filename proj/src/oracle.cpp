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

#include "kbracket/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace kbracket::oracle {

namespace {

constexpr std::string_view point_names[6] = {"L1", "L2", "L3", "R1", "R2", "R3"};

class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n) { reset(); }

    void reset() { std::iota(parent_.begin(), parent_.end(), EdgeId{0}); }

    EdgeId find(EdgeId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    /// true if two components were merged
    bool unite(EdgeId a, EdgeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

   private:
    std::vector<EdgeId> parent_;
};

// Applies glue relations, turns curves without endpoints into free loops and
// renumbers the surviving edges densely in order of first appearance.
ShadowDiagram canonicalize(std::vector<std::array<EdgeId, 4>> crossings,
                           std::optional<std::array<EdgeId, 6>> boundary,
                           const std::vector<std::pair<EdgeId, EdgeId>>& glued, unsigned free_loops,
                           std::size_t id_count) {
    UnionFind uf(id_count);
    for (auto [a, b] : glued) uf.unite(a, b);

    std::vector<bool> used(id_count, false);
    for (auto& c : crossings)
        for (auto& e : c) used[e = uf.find(e)] = true;
    if (boundary)
        for (auto& e : *boundary) used[e = uf.find(e)] = true;

    for (EdgeId v = 0; v < id_count; ++v)
        if (uf.find(v) == v && !used[v]) ++free_loops;

    std::vector<EdgeId> dense(id_count, EdgeId(-1));
    EdgeId next = 0;
    auto renumber = [&](EdgeId& e) {
        if (dense[e] == EdgeId(-1)) dense[e] = next++;
        e = dense[e];
    };
    for (auto& c : crossings)
        for (auto& e : c) renumber(e);
    if (boundary)
        for (auto& e : *boundary) renumber(e);

    ShadowDiagram d{std::move(crossings), boundary, free_loops};
    d.validate();
    return d;
}

// Per-state loop counting over a validated diagram. One instance per thread.
class StateEvaluator {
   public:
    explicit StateEvaluator(const ShadowDiagram& d) : d_(d), uf_(d.edge_count()) {}

    /// Components of the smoothed diagram that touch no boundary point.
    unsigned evaluate(std::uint64_t mask, Pairing* pairing) {
        uf_.reset();
        std::size_t components = d_.edge_count();
        for (std::size_t i = 0; i < d_.crossings.size(); ++i) {
            const auto& c = d_.crossings[i];
            if ((mask >> i) & 1u) {
                components -= uf_.unite(c[1], c[2]);
                components -= uf_.unite(c[3], c[0]);
            } else {
                components -= uf_.unite(c[0], c[1]);
                components -= uf_.unite(c[2], c[3]);
            }
        }
        if (!d_.boundary) return static_cast<unsigned>(components) + d_.free_loops;

        std::array<EdgeId, 6> roots{};
        for (std::size_t p = 0; p < 6; ++p) roots[p] = uf_.find((*d_.boundary)[p]);
        for (std::size_t p = 0; p < 6; ++p) {
            int partner = -1;
            for (std::size_t q = 0; q < 6; ++q) {
                if (q == p || roots[q] != roots[p]) continue;
                if (partner != -1) throw MalformedDiagram("boundary component with more than two endpoints");
                partner = static_cast<int>(q);
            }
            if (partner == -1) throw MalformedDiagram("boundary point without a partner");
            if (pairing) (*pairing)[p] = static_cast<BoundaryPoint>(partner);
        }
        // a smoothed tangle always has exactly three arcs ending on the boundary
        return static_cast<unsigned>(components - 3) + d_.free_loops;
    }

   private:
    const ShadowDiagram& d_;
    UnionFind uf_;
};

void check_limit(const ShadowDiagram& d, const EnumerationOptions& opts) {
    const std::size_t c = d.crossing_count();
    if (c > opts.max_crossings || c > 62) {
        throw CrossingLimitExceeded("diagram has " + std::to_string(c) +
                                    " crossings, above the enumeration limit of " +
                                    std::to_string(std::min(opts.max_crossings, 62u)));
    }
}

// histogram[slot][loops] over a contiguous range of states
using Histogram = std::vector<std::vector<std::uint64_t>>;

Histogram enumerate_histogram(const ShadowDiagram& d, const EnumerationOptions& opts) {
    d.validate();
    check_limit(d, opts);
    const std::size_t slots = d.is_closed() ? 1 : 5;
    const std::size_t max_loops = d.edge_count() + d.free_loops + 1;
    const std::uint64_t total = std::uint64_t{1} << d.crossing_count();

    auto run = [&](std::uint64_t begin, std::uint64_t end, Histogram& h) {
        h.assign(slots, std::vector<std::uint64_t>(max_loops, 0));
        StateEvaluator eval(d);
        Pairing pairing{};
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const unsigned loops = eval.evaluate(mask, d.is_closed() ? nullptr : &pairing);
            const std::size_t slot = d.is_closed() ? 0 : tl3::index(classify_boundary(pairing));
            ++h[slot][loops];
        }
    };

    unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    if (d.crossing_count() < 12) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    std::vector<Histogram> partial(workers);
    if (workers == 1) {
        run(0, total, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = w + 1 == workers ? total : begin + chunk;
            pool.emplace_back(run, begin, end, std::ref(partial[w]));
        }
        for (auto& t : pool) t.join();
    }

    Histogram sum = std::move(partial[0]);
    for (unsigned w = 1; w < workers; ++w)
        for (std::size_t s = 0; s < slots; ++s)
            for (std::size_t k = 0; k < max_loops; ++k) sum[s][k] += partial[w][s][k];
    return sum;
}

Polynomial to_polynomial(const std::vector<std::uint64_t>& counts) {
    std::vector<BigInt> coeffs(counts.begin(), counts.end());
    return Polynomial(std::move(coeffs));
}

}  // namespace

std::string_view name(BoundaryPoint p) noexcept { return point_names[static_cast<std::size_t>(p)]; }

std::size_t ShadowDiagram::edge_count() const noexcept {
    return (4 * crossings.size() + (boundary ? 6 : 0)) / 2;
}

void ShadowDiagram::validate() const {
    const std::size_t endpoints = 4 * crossings.size() + (boundary ? 6 : 0);
    const std::size_t n = endpoints / 2;
    std::vector<unsigned> seen(n, 0);
    auto count = [&](EdgeId e) {
        if (e >= n) {
            throw MalformedDiagram("edge id " + std::to_string(e) + " out of range; ids must be 0.." +
                                   std::to_string(n ? n - 1 : 0));
        }
        ++seen[e];
    };
    for (const auto& c : crossings)
        for (EdgeId e : c) count(e);
    if (boundary)
        for (EdgeId e : *boundary) count(e);
    for (std::size_t e = 0; e < n; ++e) {
        if (seen[e] != 2) {
            throw MalformedDiagram("edge " + std::to_string(e) + " has " + std::to_string(seen[e]) +
                                   " endpoints, expected 2");
        }
    }
}

TangleWord parse_word(std::string_view text) {
    TangleWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "X1")
            w.push_back(Letter::X1);
        else if (tok == "X2")
            w.push_back(Letter::X2);
        else if (tok == "U1" || tok == "U1CAP")
            w.push_back(Letter::U1);
        else if (tok == "U2" || tok == "U2CAP")
            w.push_back(Letter::U2);
        else
            throw std::invalid_argument("unknown tangle letter '" + tok + "' (expected X1, X2, U1 or U2)");
    }
    return w;
}

std::string to_string(const TangleWord& word) {
    static constexpr std::string_view names[4] = {"X1", "X2", "U1", "U2"};
    std::string s;
    for (Letter l : word) {
        if (!s.empty()) s += ' ';
        s += names[static_cast<std::size_t>(l)];
    }
    return s;
}

BracketVector letter_bracket(Letter letter) {
    switch (letter) {
        case Letter::X1: return {1, 1, 0, 0, 0};
        case Letter::X2: return {1, 0, 1, 0, 0};
        case Letter::U1: return BracketVector::basis(tl3::Element::U1);
        case Letter::U2: return BracketVector::basis(tl3::Element::U2);
    }
    return {};
}

TangleBuilder::TangleBuilder() {
    for (auto& e : frontier_) e = fresh();
}

std::size_t TangleBuilder::row(int i) const {
    if (i != 1 && i != 2) throw std::invalid_argument("strand index must be 1 or 2, got " + std::to_string(i));
    return static_cast<std::size_t>(i - 1);
}

TangleBuilder& TangleBuilder::crossing(int i) {
    const std::size_t r = row(i);
    const EdgeId nw = frontier_[r], sw = frontier_[r + 1];
    const EdgeId ne = fresh(), se = fresh();
    // clockwise from north-west; choice 0 is the horizontal smoothing
    crossings_.push_back({nw, ne, se, sw});
    frontier_[r] = ne;
    frontier_[r + 1] = se;
    return *this;
}

TangleBuilder& TangleBuilder::cup_cap(int i) {
    const std::size_t r = row(i);
    glued_.emplace_back(frontier_[r], frontier_[r + 1]);
    const EdgeId cup = fresh();
    frontier_[r] = cup;
    frontier_[r + 1] = cup;
    return *this;
}

TangleBuilder& TangleBuilder::clasp(int i) {
    const std::size_t r = row(i);
    const EdgeId in_top = frontier_[r], in_bottom = frontier_[r + 1];
    const EdgeId out_top = fresh(), out_bottom = fresh();
    const EdgeId mid_top = fresh(), mid_bottom = fresh();
    // horizontal twist {(a, m_t, m_b, b), (m_t, c, d, m_b)} with its four
    // boundary edges rotated one place clockwise
    crossings_.push_back({out_top, mid_top, mid_bottom, in_top});
    crossings_.push_back({mid_top, out_bottom, in_bottom, mid_bottom});
    frontier_[r] = out_top;
    frontier_[r + 1] = out_bottom;
    return *this;
}

TangleBuilder& TangleBuilder::letter(Letter l) {
    switch (l) {
        case Letter::X1: return crossing(1);
        case Letter::X2: return crossing(2);
        case Letter::U1: return cup_cap(1);
        case Letter::U2: return cup_cap(2);
    }
    return *this;
}

ShadowDiagram TangleBuilder::build() const {
    // left boundary edges are ids 0, 1, 2
    std::array<EdgeId, 6> boundary{0, 1, 2, frontier_[0], frontier_[1], frontier_[2]};
    return canonicalize(crossings_, boundary, glued_, 0, next_id_);
}

ShadowDiagram compile_word(const TangleWord& word) {
    TangleBuilder b;
    for (Letter l : word) b.letter(l);
    return b.build();
}

ShadowDiagram close(const ShadowDiagram& tangle) {
    if (tangle.is_closed()) throw std::invalid_argument("close: diagram is already closed");
    tangle.validate();
    const auto& bd = *tangle.boundary;
    std::vector<std::pair<EdgeId, EdgeId>> glued{{bd[0], bd[3]}, {bd[1], bd[4]}, {bd[2], bd[5]}};
    return canonicalize(tangle.crossings, std::nullopt, glued, tangle.free_loops, tangle.edge_count());
}

ShadowDiagram concatenate(const ShadowDiagram& left, const ShadowDiagram& right) {
    if (left.is_closed() || right.is_closed()) throw std::invalid_argument("concatenate: both diagrams need a boundary");
    left.validate();
    right.validate();
    const auto shift = static_cast<EdgeId>(left.edge_count());
    auto crossings = left.crossings;
    for (auto c : right.crossings) {
        for (auto& e : c) e += shift;
        crossings.push_back(c);
    }
    const auto& lb = *left.boundary;
    const auto& rb = *right.boundary;
    std::vector<std::pair<EdgeId, EdgeId>> glued;
    for (std::size_t i = 0; i < 3; ++i) glued.emplace_back(lb[i + 3], rb[i] + shift);
    std::array<EdgeId, 6> boundary{lb[0], lb[1], lb[2], rb[3] + shift, rb[4] + shift, rb[5] + shift};
    return canonicalize(std::move(crossings), boundary, glued, left.free_loops + right.free_loops,
                        left.edge_count() + right.edge_count());
}

ShadowDiagram power_diagram(const ShadowDiagram& tangle, unsigned n) {
    ShadowDiagram result = compile_word({});
    for (unsigned i = 0; i < n; ++i) result = concatenate(result, tangle);
    return result;
}

std::string to_string(const Pairing& pairing) {
    std::string s = "{";
    for (std::size_t p = 0; p < 6; ++p) {
        const auto q = static_cast<std::size_t>(pairing[p]);
        if (q < p) continue;
        if (s.size() > 1) s += ',';
        s += std::string(point_names[p]) + std::string(point_names[q]);
    }
    return s + "}";
}

SmoothingResult smooth(const ShadowDiagram& d, const std::vector<bool>& choices) {
    d.validate();
    if (choices.size() != d.crossing_count()) {
        throw std::invalid_argument("smooth: expected " + std::to_string(d.crossing_count()) +
                                    " choices, got " + std::to_string(choices.size()));
    }
    if (d.crossing_count() > 64) throw CrossingLimitExceeded("smooth: more than 64 crossings");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < choices.size(); ++i)
        if (choices[i]) mask |= std::uint64_t{1} << i;

    StateEvaluator eval(d);
    SmoothingResult r;
    if (d.is_closed()) {
        r.loops = eval.evaluate(mask, nullptr);
    } else {
        Pairing p{};
        r.loops = eval.evaluate(mask, &p);
        r.pairing = p;
    }
    return r;
}

tl3::Element classify_boundary(const Pairing& pairing) {
    using P = BoundaryPoint;
    using E = tl3::Element;
    struct Known {
        E element;
        std::array<P, 6> partner;  // partner of L1, L2, L3, R1, R2, R3
    };
    static constexpr Known known[5] = {
        {E::ID3, {P::R1, P::R2, P::R3, P::L1, P::L2, P::L3}},
        {E::U1, {P::L2, P::L1, P::R3, P::R2, P::R1, P::L3}},
        {E::U2, {P::R1, P::L3, P::L2, P::L1, P::R3, P::R2}},
        {E::R, {P::R3, P::L3, P::L2, P::R2, P::R1, P::L1}},
        {E::S, {P::L2, P::L1, P::R1, P::L3, P::R3, P::R2}},
    };
    for (const auto& k : known)
        if (k.partner == pairing) return k.element;
    throw std::invalid_argument("boundary pairing " + to_string(pairing) + " is not a planar 3-tangle matching");
}

BracketVector enumerate_tangle(const ShadowDiagram& d, const EnumerationOptions& opts) {
    if (d.is_closed()) throw std::invalid_argument("enumerate_tangle: diagram has no boundary");
    const Histogram h = enumerate_histogram(d, opts);
    BracketVector v;
    for (std::size_t s = 0; s < 5; ++s) v.slots[s] = to_polynomial(h[s]);
    return v;
}

Polynomial enumerate_closed(const ShadowDiagram& d, const EnumerationOptions& opts) {
    if (!d.is_closed()) throw std::invalid_argument("enumerate_closed: diagram has a boundary");
    return to_polynomial(enumerate_histogram(d, opts)[0]);
}

StateSum enumerate_states(const ShadowDiagram& d, const EnumerationOptions& opts) {
    if (d.is_closed()) return enumerate_closed(d, opts);
    return enumerate_tangle(d, opts);
}

}  // namespace kbracket::oracle
