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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "kbracket/bracket.hpp"
#include "kbracket/cli.hpp"
#include "kbracket/generators.hpp"
#include "kbracket/oracle.hpp"
#include "kbracket/series.hpp"

namespace py = pybind11;
using namespace kbracket;

// Polynomials cross the boundary as coefficient lists of Python ints
// (constant term first); big integers go through their decimal text.
namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

BigInt from_py(const py::handle& h) { return BigInt(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::list to_py(const Polynomial& p) {
    py::list out;
    for (const auto& c : p.coefficients()) out.append(to_py(c));
    return out;
}

Polynomial poly_from_py(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return Polynomial::parse(h.cast<std::string>());
    if (py::isinstance<py::int_>(h)) return Polynomial(from_py(h));
    std::vector<BigInt> coeffs;
    for (const auto& c : h) coeffs.push_back(from_py(c));
    return Polynomial(std::move(coeffs));
}

py::list to_py(const BracketVector& v) {
    py::list out;
    for (const auto& s : v.slots) out.append(to_py(s));
    return out;
}

BracketVector tuple_from_py(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return generators::generator_tuple(generators::parse_generator(h.cast<std::string>()));
    const auto seq = py::reinterpret_borrow<py::sequence>(h);
    if (seq.size() != 5) throw py::value_error("a bracket tuple has exactly five entries");
    BracketVector v;
    for (std::size_t i = 0; i < 5; ++i) v.slots[i] = poly_from_py(seq[i]);
    return v;
}

py::list to_py(const std::vector<std::vector<BigInt>>& rows) {
    py::list out;
    for (const auto& r : rows) {
        py::list row;
        for (const auto& c : r) row.append(to_py(c));
        out.append(row);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kauffman bracket of 3-tangle shadows (C++ core)";

    py::register_exception<oracle::CrossingLimitExceeded>(m, "CrossingLimitExceeded", PyExc_RuntimeError);

    m.def("poly_to_string", [](const py::object& p) { return poly_from_py(p).to_string(); });
    m.def("parse_poly", [](const std::string& s) { return to_py(Polynomial::parse(s)); });

    m.def("generator_tuple", [](const std::string& name) {
        return to_py(generators::generator_tuple(generators::parse_generator(name)));
    });
    m.def("generator_crossings", [](const std::string& name) {
        return generators::crossings(generators::parse_generator(name));
    });

    m.def("compose", [](const py::object& v, const py::object& w) {
        return to_py(compose(tuple_from_py(v), tuple_from_py(w)));
    });
    m.def("power", [](const py::object& v, unsigned n) { return to_py(power(tuple_from_py(v), n)); },
          py::arg("v"), py::arg("n"));
    m.def("closure", [](const py::object& v) { return to_py(closure(tuple_from_py(v))); });
    m.def("closed_form_bracket", [](const py::object& v, unsigned n) {
        return to_py(closed_form_bracket(tuple_from_py(v), n));
    });
    m.def("pq_invariants", [](const py::object& v) {
        const auto inv = pq_invariants(tuple_from_py(v));
        py::dict d;
        d["p"] = to_py(inv.p);
        d["qsq"] = to_py(inv.qsq);
        d["m"] = to_py(inv.eigen_product());
        return d;
    });
    m.def("states_matrix", [](const py::object& v) {
        const auto mat = states_matrix(tuple_from_py(v));
        py::list rows;
        for (const auto& r : mat.entries) {
            py::list row;
            for (const auto& e : r) row.append(to_py(e));
            rows.append(row);
        }
        return rows;
    });
    m.def("charpoly", [](const py::object& v) {
        const auto cp = charpoly(states_matrix(tuple_from_py(v)));
        py::list out;
        for (const auto& c : cp.coefficients()) out.append(to_py(c));
        return out;
    }, "Coefficients of det(M - lambda I), lambda^0 first.");

    m.def("expand_gf", [](const py::object& v, unsigned n) {
        py::list out;
        for (const auto& p : series::expand(series::gf_from_tuple(tuple_from_py(v)), n)) out.append(to_py(p));
        return out;
    });
    m.def("coefficient_table", [](const py::object& v, unsigned n) {
        return to_py(series::coefficient_table(tuple_from_py(v), n).rows);
    }, py::arg("v"), py::arg("rows"));

    m.def("enumerate_word", [](const std::string& word, unsigned power, bool closed, unsigned max_crossings) -> py::object {
        const auto d = oracle::power_diagram(oracle::compile_word(oracle::parse_word(word)), power);
        const oracle::EnumerationOptions opts{max_crossings, 0};
        if (closed) return to_py(oracle::enumerate_closed(oracle::close(d), opts));
        return to_py(oracle::enumerate_tangle(d, opts));
    }, py::arg("word"), py::arg("power") = 1, py::arg("closed") = false, py::arg("max_crossings") = 24,
       "Brute-force state sum of the word's diagram raised to a power.");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
