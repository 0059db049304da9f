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

#ifndef KBRACKET_VERIFY_HPP
#define KBRACKET_VERIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kbracket/bracket.hpp"
#include "kbracket/generators.hpp"
#include "kbracket/oracle.hpp"

// Self-checks behind `kbracket verify`. Each suite stops at the first failing
// identity and names it.
namespace kbracket::verify {

struct Report {
    explicit Report(std::string name) : suite(std::move(name)) {}

    std::string suite;
    std::size_t checks = 0;
    std::optional<std::string> failure;

    bool passed() const noexcept { return !failure; }
};

/// coefficient_table against the reference triangle, rows 0..min(n_max, last reference row).
Report tables(generators::Generator g, unsigned n_max);

/// Brute-force state sums of the glued diagram g^n (tangle and closure)
/// against power() and closure(), n = 0..max_n.
Report oracle_powers(generators::Generator g, unsigned max_n, const oracle::EnumerationOptions& opts = {});

/// Same check for an arbitrary tangle diagram.
Report oracle_powers(const oracle::ShadowDiagram& d, unsigned max_n, const oracle::EnumerationOptions& opts = {});

/// charpoly(states_matrix(v)) against -(l-a)(l^2-pl+m)^2, for both the
/// right and left action matrices.
Report charpoly(const BracketVector& v);

/// closure(power(v,n)) = closed_form_bracket(v,n) = series coefficient n,
/// and the cubic component recurrence of power(v,n), for n = 0..max_n.
Report recurrence(const BracketVector& v, unsigned max_n);

}  // namespace kbracket::verify

#endif  // KBRACKET_VERIFY_HPP
