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

#include "kbracket/verify.hpp"

#include <algorithm>

#include "kbracket/series.hpp"

namespace kbracket::verify {

namespace {

std::string join(const std::vector<BigInt>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + "]";
}

}  // namespace

Report tables(generators::Generator g, unsigned n_max) {
    Report r{"tables " + std::string(generators::name(g))};
    const auto& reference = generators::reference_table(g);
    const unsigned last = std::min<unsigned>(n_max, static_cast<unsigned>(reference.size() - 1));
    const auto computed = series::coefficient_table(g, last);
    for (unsigned n = 0; n <= last; ++n) {
        ++r.checks;
        if (computed.rows[n] != reference[n]) {
            r.failure = "row " + std::to_string(n) + ": computed " + join(computed.rows[n]) + ", expected " +
                        join(reference[n]);
            return r;
        }
    }
    return r;
}

Report oracle_powers(const oracle::ShadowDiagram& d, unsigned max_n, const oracle::EnumerationOptions& opts) {
    Report r{"oracle"};
    const BracketVector tuple = oracle::enumerate_tangle(d, opts);
    oracle::ShadowDiagram current = oracle::compile_word({});
    for (unsigned n = 0; n <= max_n; ++n) {
        if (n) current = oracle::concatenate(current, d);
        const BracketVector algebra = power(tuple, n);
        const BracketVector brute = oracle::enumerate_tangle(current, opts);
        ++r.checks;
        if (brute != algebra) {
            r.failure = "n=" + std::to_string(n) + " tangle: state sum " + brute.to_string() + ", algebra " +
                        algebra.to_string();
            return r;
        }
        const Polynomial closed = oracle::enumerate_closed(oracle::close(current), opts);
        ++r.checks;
        if (closed != closure(algebra)) {
            r.failure = "n=" + std::to_string(n) + " closure: state sum " + closed.to_string() + ", algebra " +
                        closure(algebra).to_string();
            return r;
        }
    }
    return r;
}

Report oracle_powers(generators::Generator g, unsigned max_n, const oracle::EnumerationOptions& opts) {
    Report r = oracle_powers(generators::generator_diagram(g), max_n, opts);
    r.suite = "oracle " + std::string(generators::name(g));
    if (r.passed()) {
        ++r.checks;
        const BracketVector brute = oracle::enumerate_tangle(generators::generator_diagram(g), opts);
        if (brute != generators::generator_tuple(g))
            r.failure = "generator diagram state sum " + brute.to_string() + " differs from its tuple";
    }
    return r;
}

Report charpoly(const BracketVector& v) {
    Report r{"charpoly"};
    const BivariatePoly expected = factored_charpoly(v);
    ++r.checks;
    const BivariatePoly right = kbracket::charpoly(states_matrix(v));
    if (right != expected) {
        r.failure = "det(M - L I) = " + right.to_string() + ", factored form " + expected.to_string();
        return r;
    }
    ++r.checks;
    const BivariatePoly left = kbracket::charpoly(left_states_matrix(v));
    if (left != expected) r.failure = "left-action matrix: det = " + left.to_string() + ", factored " + expected.to_string();
    return r;
}

Report recurrence(const BracketVector& v, unsigned max_n) {
    Report r{"recurrence"};
    const PQInvariants pq = pq_invariants(v);
    const Polynomial m = pq.eigen_product();
    const auto series_terms = series::expand(series::gf_from_tuple(v), max_n);

    std::vector<BracketVector> powers;
    for (unsigned n = 0; n <= max_n; ++n) {
        powers.push_back(power(v, n));
        const Polynomial direct = closure(powers.back());
        const Polynomial closed = closed_form_bracket(v, n);
        ++r.checks;
        if (direct != closed || direct != series_terms[n]) {
            r.failure = "n=" + std::to_string(n) + ": closure " + direct.to_string() + ", closed form " +
                        closed.to_string() + ", series " + series_terms[n].to_string();
            return r;
        }
    }
    // t_{n+3} = (a+p) t_{n+2} - (a p + m) t_{n+1} + a m t_n in every slot
    const Polynomial c2 = v.a() + pq.p, c1 = v.a() * pq.p + m, c0 = v.a() * m;
    for (unsigned n = 0; n + 3 <= max_n; ++n) {
        for (std::size_t s = 0; s < 5; ++s) {
            ++r.checks;
            const Polynomial rhs =
                c2 * powers[n + 2].slots[s] - c1 * powers[n + 1].slots[s] + c0 * powers[n].slots[s];
            if (rhs != powers[n + 3].slots[s]) {
                r.failure = "component recurrence fails at n=" + std::to_string(n + 3) + ", slot " +
                            std::string(tl3::name(static_cast<tl3::Element>(s)));
                return r;
            }
        }
    }
    return r;
}

}  // namespace kbracket::verify
