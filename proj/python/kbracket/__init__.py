# Copyright 2026 The kbracket Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Kauffman bracket of 3-tangle shadows.

Polynomials in x are lists of ints, constant term first. A bracket tuple
[a, b, c, d, e] is a list of five such polynomials; the names "T", "C" and
"E" may be used wherever a tuple is expected.
"""

from kbracket._core import (
    CrossingLimitExceeded,
    charpoly,
    closed_form_bracket,
    closure,
    coefficient_table,
    compose,
    enumerate_word,
    expand_gf,
    generator_crossings,
    generator_tuple,
    parse_poly,
    poly_to_string,
    power,
    pq_invariants,
    run_cli,
    states_matrix,
)

__all__ = [
    "CrossingLimitExceeded",
    "charpoly",
    "closed_form_bracket",
    "closure",
    "coefficient_table",
    "compose",
    "enumerate_word",
    "expand_gf",
    "generator_crossings",
    "generator_tuple",
    "parse_poly",
    "poly_to_string",
    "power",
    "pq_invariants",
    "run_cli",
    "states_matrix",
]
