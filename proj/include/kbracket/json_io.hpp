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

#ifndef KBRACKET_JSON_IO_HPP
#define KBRACKET_JSON_IO_HPP

#include "json.hpp"

#include "kbracket/bivariate.hpp"
#include "kbracket/bracket.hpp"
#include "kbracket/oracle.hpp"
#include "kbracket/polynomial.hpp"
#include "kbracket/series.hpp"

// JSON forms used by the CLI. Integers that fit in 64 bits are written as
// JSON numbers, larger ones as decimal strings; readers accept both.
// Malformed input raises std::invalid_argument.
namespace kbracket::json_io {

using nlohmann::json;

json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

/// [c0, c1, ...], index = power of x
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"a": [...], "b": [...], "c": [...], "d": [...], "e": [...]}
json to_json(const BracketVector& v);
BracketVector bracket_from_json(const json& j);

/// {"crossings": [[e,e,e,e], ...], "boundary": {"L": [e,e,e], "R": [e,e,e]} | null,
///  "free_loops": n}; edge ids are strings (integers are accepted on input).
json to_json(const oracle::ShadowDiagram& d);
oracle::ShadowDiagram diagram_from_json(const json& j);

/// Array of Polynomial arrays, index = power of the outer variable.
json to_json(const BivariatePoly& p);
BivariatePoly bivariate_from_json(const json& j);

/// 5x5 array of Polynomial arrays.
json to_json(const StatesMatrix& m);

json to_json(const series::CoefficientTriangle& t);
json to_json(const series::RationalGF& gf);

}  // namespace kbracket::json_io

#endif  // KBRACKET_JSON_IO_HPP
