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

#include "kbracket/json_io.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace kbracket::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("JSON: " + what); }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            fail("bad integer string '" + s + "'");
        return BigInt(s);
    }
    fail("expected an integer, got " + j.dump());
}

json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
    return arr;
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) fail("polynomial must be an array of integers, got " + j.dump());
    std::vector<BigInt> coeffs;
    for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
    return Polynomial(std::move(coeffs));
}

json to_json(const BracketVector& v) {
    return json{{"a", to_json(v.a())}, {"b", to_json(v.b())}, {"c", to_json(v.c())},
                {"d", to_json(v.d())}, {"e", to_json(v.e())}};
}

BracketVector bracket_from_json(const json& j) {
    return {polynomial_from_json(member(j, "a")), polynomial_from_json(member(j, "b")),
            polynomial_from_json(member(j, "c")), polynomial_from_json(member(j, "d")),
            polynomial_from_json(member(j, "e"))};
}

json to_json(const oracle::ShadowDiagram& d) {
    json crossings = json::array();
    for (const auto& c : d.crossings) {
        json row = json::array();
        for (auto e : c) row.push_back(std::to_string(e));
        crossings.push_back(row);
    }
    json boundary = nullptr;
    if (d.boundary) {
        json left = json::array(), right = json::array();
        for (std::size_t i = 0; i < 3; ++i) {
            left.push_back(std::to_string((*d.boundary)[i]));
            right.push_back(std::to_string((*d.boundary)[i + 3]));
        }
        boundary = json{{"L", left}, {"R", right}};
    }
    return json{{"crossings", crossings}, {"boundary", boundary}, {"free_loops", d.free_loops}};
}

oracle::ShadowDiagram diagram_from_json(const json& j) {
    std::map<std::string, oracle::EdgeId> ids;
    auto edge = [&](const json& e) -> oracle::EdgeId {
        std::string key;
        if (e.is_string())
            key = e.get<std::string>();
        else if (e.is_number_integer())
            key = std::to_string(e.get<std::int64_t>());
        else
            fail("edge identifier must be a string, got " + e.dump());
        auto [it, inserted] = ids.emplace(key, static_cast<oracle::EdgeId>(ids.size()));
        return it->second;
    };

    oracle::ShadowDiagram d;
    const json& crossings = member(j, "crossings");
    if (!crossings.is_array()) fail("'crossings' must be an array");
    for (const auto& c : crossings) {
        if (!c.is_array() || c.size() != 4) fail("each crossing needs exactly 4 edges, got " + c.dump());
        d.crossings.push_back({edge(c[0]), edge(c[1]), edge(c[2]), edge(c[3])});
    }
    if (j.contains("boundary") && !j.at("boundary").is_null()) {
        const json& b = j.at("boundary");
        const json& left = member(b, "L");
        const json& right = member(b, "R");
        if (!left.is_array() || !right.is_array() || left.size() != 3 || right.size() != 3)
            fail("boundary needs 3 left and 3 right edges");
        d.boundary = std::array<oracle::EdgeId, 6>{edge(left[0]),  edge(left[1]),  edge(left[2]),
                                                   edge(right[0]), edge(right[1]), edge(right[2])};
    }
    if (j.contains("free_loops")) {
        const json& fl = j.at("free_loops");
        if (!fl.is_number_integer() || fl.get<std::int64_t>() < 0) fail("'free_loops' must be a nonnegative integer");
        d.free_loops = fl.get<unsigned>();
    }
    d.validate();
    return d;
}

json to_json(const BivariatePoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
    return arr;
}

BivariatePoly bivariate_from_json(const json& j) {
    if (!j.is_array()) fail("expected an array of polynomials");
    std::vector<Polynomial> coeffs;
    for (const auto& c : j) coeffs.push_back(polynomial_from_json(c));
    return BivariatePoly(std::move(coeffs));
}

json to_json(const StatesMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.entries) {
        json row = json::array();
        for (const auto& e : r) row.push_back(to_json(e));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const series::CoefficientTriangle& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = json::array();
        for (const auto& v : r) row.push_back(to_json(v));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const series::RationalGF& gf) {
    auto term = [](const series::RationalTerm& t) {
        return json{{"numerator", to_json(t.numerator)}, {"denominator", to_json(t.denominator)}};
    };
    return json{{"quadratic", term(gf.quadratic)}, {"geometric", term(gf.geometric)}};
}

}  // namespace kbracket::json_io
