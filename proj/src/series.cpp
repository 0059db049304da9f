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

#include "kbracket/series.hpp"

#include <sstream>
#include <stdexcept>

namespace kbracket::series {

namespace {

std::string term_string(const RationalTerm& t) {
    return "(" + t.numerator.to_string("y") + ") / (" + t.denominator.to_string("y") + ")";
}

}  // namespace

std::string RationalGF::to_string() const {
    return term_string(quadratic) + " + " + term_string(geometric);
}

RationalGF gf_from_tuple(const BracketVector& v) {
    const Polynomial x = Polynomial::x();
    const PQInvariants pq = pq_invariants(v);
    const Polynomial m = pq.eigen_product();
    RationalGF gf;
    gf.quadratic.numerator = BivariatePoly{2 * x, -(pq.p * x)};
    gf.quadratic.denominator = BivariatePoly{1, -pq.p, m};
    gf.geometric.numerator = BivariatePoly{x * (x * x - 2)};
    gf.geometric.denominator = BivariatePoly{1, -v.a()};
    return gf;
}

Polynomial uncorrected_y2_coefficient(const BracketVector& v) {
    const Polynomial x = Polynomial::x();
    const Polynomial &a = v.a(), &b = v.b(), &c = v.c(), &d = v.d(), &e = v.e();
    return (d * e - b * c) * x * x + (-(a * c) - a * b) * x + (-d - a) * e - a * d + b * c - a * a;
}

RationalGF uncorrected_general_gf(const BracketVector& v) {
    const Polynomial x = Polynomial::x();
    const Polynomial p = pq_invariants(v).p;
    RationalGF gf;
    gf.quadratic.numerator = BivariatePoly{-2, p};
    gf.quadratic.denominator = BivariatePoly{-1, p, uncorrected_y2_coefficient(v)};
    gf.geometric.numerator = BivariatePoly{x * (x * x - 2)};
    gf.geometric.denominator = BivariatePoly{1, -v.a()};
    return gf;
}

std::vector<Polynomial> expand(const RationalTerm& term, unsigned n_max) {
    const Polynomial lead = term.denominator.coefficient(0);
    if (lead != Polynomial{1} && lead != Polynomial{-1}) {
        throw std::domain_error("series expansion needs a denominator with constant term +-1, got " +
                                lead.to_string());
    }
    const auto& den = term.denominator.coefficients();
    std::vector<Polynomial> c(n_max + 1);
    // den * c = num, solved for c_n one index at a time
    for (unsigned n = 0; n <= n_max; ++n) {
        Polynomial acc = term.numerator.coefficient(n);
        for (std::size_t k = 1; k < den.size() && k <= n; ++k) acc -= den[k] * c[n - k];
        c[n] = lead * acc;  // lead is its own inverse
    }
    return c;
}

std::vector<Polynomial> expand(const RationalGF& gf, unsigned n_max) {
    auto out = expand(gf.quadratic, n_max);
    const auto geo = expand(gf.geometric, n_max);
    for (unsigned n = 0; n <= n_max; ++n) out[n] += geo[n];
    return out;
}

std::vector<BigInt> CoefficientTriangle::column(std::size_t k) const {
    std::vector<BigInt> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(k < r.size() ? r[k] : BigInt(0));
    return out;
}

std::vector<BigInt> CoefficientTriangle::flatten() const {
    std::vector<BigInt> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

CoefficientTriangle triangle_from_series(const std::vector<Polynomial>& brackets) {
    CoefficientTriangle t;
    for (const auto& p : brackets) t.rows.push_back(p.coefficients());
    return t;
}

CoefficientTriangle coefficient_table(const BracketVector& v, unsigned n_max) {
    return triangle_from_series(expand(gf_from_tuple(v), n_max));
}

CoefficientTriangle coefficient_table(generators::Generator g, unsigned n_max) {
    return coefficient_table(generators::generator_tuple(g), n_max);
}

std::string to_csv(const CoefficientTriangle& t) {
    std::string s;
    for (const auto& r : t.rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k) s += ',';
            s += r[k].str();
        }
        s += '\n';
    }
    return s;
}

std::string to_bfile(const std::vector<BigInt>& values, long offset) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += std::to_string(offset + static_cast<long>(i)) + ' ' + values[i].str() + '\n';
    return s;
}

std::vector<std::pair<long, BigInt>> parse_bfile(std::string_view text) {
    std::vector<std::pair<long, BigInt>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long index = 0;
        std::string value, extra;
        if (!(ls >> index >> value) || (ls >> extra)) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": expected 'index value'");
        }
        try {
            out.emplace_back(index, BigInt(value));
        } catch (const std::exception&) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": bad integer '" + value + "'");
        }
    }
    return out;
}

BfileComparison compare_bfile(const std::vector<BigInt>& values, long offset,
                              const std::vector<std::pair<long, BigInt>>& reference) {
    BfileComparison r;
    for (const auto& [index, expected] : reference) {
        const long pos = index - offset;
        if (pos < 0 || pos >= static_cast<long>(values.size())) continue;
        ++r.compared;
        if (values[static_cast<std::size_t>(pos)] != expected) {
            r.first_mismatch = index;
            r.message = "index " + std::to_string(index) + ": computed " +
                        values[static_cast<std::size_t>(pos)].str() + ", reference " + expected.str();
            return r;
        }
    }
    if (r.compared == 0) {
        r.message = "reference b-file does not overlap the computed range";
        return r;
    }
    r.match = true;
    r.message = "matched " + std::to_string(r.compared) + " terms";
    return r;
}

}  // namespace kbracket::series
