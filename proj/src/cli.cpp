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

#include "kbracket/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "kbracket/bracket.hpp"
#include "kbracket/generators.hpp"
#include "kbracket/json_io.hpp"
#include "kbracket/oracle.hpp"
#include "kbracket/series.hpp"
#include "kbracket/verify.hpp"

namespace kbracket::cli {

namespace {

using generators::Generator;
using json_io::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string generator;
    std::string word;
    std::string pd;
    unsigned n = 1;
    std::optional<unsigned> rows;
    unsigned terms = 5;
    bool closure = false;
    std::string format = "text";
    unsigned max_crossings = 24;
    std::string out_file;

    // verify
    bool tables = false;
    bool oracle = false;
    bool charpoly = false;
    bool recurrence = false;
    unsigned max_n = 4;

    // export
    std::optional<unsigned> column;
    long offset = 0;
    std::string compare_file;
};

// One parsed input source: a named generator, a tangle (word or PD file) or
// a closed PD diagram.
struct Input {
    std::optional<Generator> generator;
    std::optional<oracle::ShadowDiagram> diagram;
    std::optional<BracketVector> tuple;
    std::optional<Polynomial> closed;
    std::string label;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

oracle::EnumerationOptions enum_opts(const Options& o) {
    oracle::EnumerationOptions e;
    e.max_crossings = o.max_crossings;
    return e;
}

Input resolve_input(const Options& o, bool required = true) {
    const int sources = !o.generator.empty() + !o.word.empty() + !o.pd.empty();
    if (sources > 1) throw UsageError("give exactly one of --generator, --word, --pd");
    if (sources == 0) {
        if (required) throw UsageError("an input is required: --generator, --word or --pd");
        return {};
    }

    Input in;
    if (!o.generator.empty()) {
        in.generator = generators::parse_generator(o.generator);
        in.tuple = generators::generator_tuple(*in.generator);
        in.label = o.generator;
        return in;
    }
    if (!o.word.empty()) {
        in.diagram = oracle::compile_word(oracle::parse_word(o.word));
        in.label = "word '" + o.word + "'";
    } else {
        json j;
        try {
            j = json::parse(read_file(o.pd));
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(o.pd + ": " + e.what());
        }
        in.diagram = json_io::diagram_from_json(j);
        in.label = o.pd;
    }
    const oracle::StateSum sum = oracle::enumerate_states(*in.diagram, enum_opts(o));
    if (const auto* v = std::get_if<BracketVector>(&sum))
        in.tuple = *v;
    else
        in.closed = std::get<Polynomial>(sum);
    return in;
}

const BracketVector& require_tuple(const Input& in) {
    if (!in.tuple) throw UsageError(in.label + " is a closed diagram; this command needs a 3-tangle");
    return *in.tuple;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.out_file + "'");
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_table(const series::CoefficientTriangle& t) {
    std::size_t cols = 0;
    for (const auto& r : t.rows) cols = std::max(cols, r.size());
    std::vector<std::size_t> width(cols, 1);
    for (const auto& r : t.rows)
        for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].str().size());
    for (std::size_t k = 0; k < cols; ++k) width[k] = std::max(width[k], std::to_string(k).size());
    const std::size_t nwidth = std::max<std::size_t>(3, std::to_string(t.rows.size()).size());

    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
    std::string s = pad("n\\k", nwidth) + " |";
    for (std::size_t k = 0; k < cols; ++k) s += " " + pad(std::to_string(k), width[k]);
    s += "\n" + std::string(s.size() - 1, '-') + "\n";
    for (std::size_t n = 0; n < t.rows.size(); ++n) {
        s += pad(std::to_string(n), nwidth) + " |";
        for (std::size_t k = 0; k < t.rows[n].size(); ++k) s += " " + pad(t.rows[n][k].str(), width[k]);
        s += "\n";
    }
    return s;
}

int cmd_bracket(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    if (in.closed) {
        if (o.n != 1) throw UsageError("--n applies to tangles only; " + in.label + " is closed");
        emit(o, o.format == "json" ? dump(json_io::to_json(*in.closed)) : in.closed->to_string() + "\n", out);
        return kSuccess;
    }
    const BracketVector v = power(require_tuple(in), o.n);
    if (o.closure) {
        const Polynomial p = closure(v);
        emit(o, o.format == "json" ? dump(json_io::to_json(p)) : p.to_string() + "\n", out);
    } else {
        emit(o, o.format == "json" ? dump(json_io::to_json(v)) : v.to_string() + "\n", out);
    }
    return kSuccess;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const auto t = series::coefficient_table(require_tuple(in), o.rows.value_or(10));
    if (o.format == "csv")
        emit(o, series::to_csv(t), out);
    else if (o.format == "json")
        emit(o, dump(json_io::to_json(t)), out);
    else if (o.format == "bfile")
        emit(o, series::to_bfile(t.flatten(), o.offset), out);
    else
        emit(o, format_table(t), out);
    return kSuccess;
}

int cmd_gf(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const BracketVector& v = require_tuple(in);
    const auto gf = series::gf_from_tuple(v);
    const auto terms = series::expand(gf, o.terms);
    if (o.format == "json") {
        json series_json = json::array();
        for (const auto& p : terms) series_json.push_back(json_io::to_json(p));
        emit(o, dump(json{{"gf", json_io::to_json(gf)}, {"series", series_json}}), out);
        return kSuccess;
    }
    std::string s = "B(x;y) = " + gf.to_string() + "\n";
    for (std::size_t n = 0; n < terms.size(); ++n) s += "[y^" + std::to_string(n) + "] " + terms[n].to_string() + "\n";
    emit(o, s, out);
    return kSuccess;
}

int cmd_charpoly(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const BracketVector& v = require_tuple(in);
    const StatesMatrix m = states_matrix(v);
    const BivariatePoly chi = charpoly(m);
    const PQInvariants pq = pq_invariants(v);
    const bool factors = chi == factored_charpoly(v);
    if (o.format == "json") {
        emit(o,
             dump(json{{"states_matrix", json_io::to_json(m)},
                       {"charpoly", json_io::to_json(chi)},
                       {"p", json_io::to_json(pq.p)},
                       {"qsq", json_io::to_json(pq.qsq)},
                       {"eigen_product", json_io::to_json(pq.eigen_product())},
                       {"factorization_holds", factors}}),
             out);
    } else {
        std::string s = "states matrix:\n";
        for (const auto& row : m.entries) {
            s += "  [";
            for (std::size_t j = 0; j < 5; ++j) s += (j ? ", " : "") + row[j].to_string();
            s += "]\n";
        }
        s += "det(M - L I) = " + chi.to_string() + "\n";
        s += "p = " + pq.p.to_string() + "\n";
        s += "q^2 = " + pq.qsq.to_string() + "\n";
        s += "(p^2 - q^2)/4 = " + pq.eigen_product().to_string() + "\n";
        s += std::string("factorization -(L-a)(L^2-pL+(p^2-q^2)/4)^2: ") + (factors ? "holds" : "FAILS") + "\n";
        emit(o, s, out);
    }
    return factors ? kSuccess : kVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o, false);
    const bool all = !(o.tables || o.oracle || o.charpoly || o.recurrence);
    std::vector<verify::Report> reports;

    std::vector<Generator> gens;
    if (in.generator)
        gens.push_back(*in.generator);
    else if (!in.tuple && !in.closed)
        gens.assign(std::begin(generators::all_generators), std::end(generators::all_generators));

    if (in.closed) throw UsageError("verify needs a 3-tangle, " + in.label + " is closed");
    if ((o.tables) && gens.empty()) throw UsageError("--tables needs --generator (or no input for all three)");

    const unsigned rec_n = o.rows.value_or(10);
    for (Generator g : gens) {
        const auto v = generators::generator_tuple(g);
        if (all || o.tables) reports.push_back(verify::tables(g, o.rows.value_or(10)));
        if (all || o.oracle) reports.push_back(verify::oracle_powers(g, o.max_n, enum_opts(o)));
        if (all || o.charpoly) {
            reports.push_back(verify::charpoly(v));
            reports.back().suite += " " + std::string(generators::name(g));
        }
        if (all || o.recurrence) {
            reports.push_back(verify::recurrence(v, rec_n));
            reports.back().suite += " " + std::string(generators::name(g));
        }
    }
    if (gens.empty()) {
        const BracketVector& v = *in.tuple;
        if (all || o.oracle) reports.push_back(verify::oracle_powers(*in.diagram, o.max_n, enum_opts(o)));
        if (all || o.charpoly) reports.push_back(verify::charpoly(v));
        if (all || o.recurrence) reports.push_back(verify::recurrence(v, rec_n));
        for (auto& r : reports) r.suite += " " + in.label;
    }

    bool ok = true;
    std::string s;
    for (const auto& r : reports) {
        if (r.passed()) {
            s += "PASS " + r.suite + " (" + std::to_string(r.checks) + " checks)\n";
        } else {
            s += "FAIL " + r.suite + ": " + *r.failure + "\n";
            ok = false;
        }
    }
    s += ok ? "PASS\n" : "FAIL\n";
    emit(o, s, out);
    return ok ? kSuccess : kVerificationFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
    const Input in = resolve_input(o);
    const auto t = series::coefficient_table(require_tuple(in), o.rows.value_or(10));
    const std::vector<BigInt> values = o.column ? t.column(*o.column) : t.flatten();

    if (!o.compare_file.empty()) {
        const auto reference = series::parse_bfile(read_file(o.compare_file));
        const auto cmp = series::compare_bfile(values, o.offset, reference);
        out << (cmp.match ? "PASS " : "FAIL ") << cmp.message << "\n";
        if (!o.out_file.empty()) emit(o, series::to_bfile(values, o.offset), out);
        return cmp.match ? kSuccess : kVerificationFailed;
    }
    if (o.format == "csv") {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].str();
        emit(o, s + "\n", out);
    } else if (o.format == "json") {
        json arr = json::array();
        for (const auto& v : values) arr.push_back(json_io::to_json(v));
        emit(o, dump(arr), out);
    } else {
        emit(o, series::to_bfile(values, o.offset), out);
    }
    return kSuccess;
}

void add_input(CLI::App* app, Options& o) {
    app->add_option("--generator", o.generator, "Built-in generator")->check(CLI::IsMember({"T", "C", "E"}));
    app->add_option("--word", o.word, "Tangle word, e.g. \"X1 X2 U1\"");
    app->add_option("--pd", o.pd, "Shadow diagram JSON file")->check(CLI::ExistingFile);
    app->add_option("--max-crossings", o.max_crossings, "Brute-force enumeration limit")->capture_default_str();
    app->add_option("--out", o.out_file, "Write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Kauffman bracket of 3-tangle shadows and their closures", "kbracket"};
    app.require_subcommand(1);

    auto* bracket = app.add_subcommand("bracket", "Bracket tuple of B^n, or the closure bracket with --closure");
    add_input(bracket, o);
    bracket->add_option("--n", o.n, "Power of the tangle")->capture_default_str();
    bracket->add_flag("--closure", o.closure, "Print the closure bracket");
    bracket->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* table = app.add_subcommand("table", "Coefficient triangle s(n,k) for n = 0..rows");
    add_input(table, o);
    table->add_option("--rows", o.rows, "Last row index (default 10)");
    table->add_option("--offset", o.offset, "First index for --format bfile")->capture_default_str();
    table->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv", "bfile"}))->capture_default_str();

    auto* gf = app.add_subcommand("gf", "Generating function and its first terms");
    add_input(gf, o);
    gf->add_option("--terms", o.terms, "Last series index")->capture_default_str();
    gf->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run self-checks; exit 1 on the first mismatch");
    add_input(verify, o);
    verify->add_flag("--tables", o.tables, "Compare against the reference triangles");
    verify->add_flag("--oracle", o.oracle, "Brute-force state sums of B^n");
    verify->add_flag("--charpoly", o.charpoly, "Characteristic polynomial factorization");
    verify->add_flag("--recurrence", o.recurrence, "Closed form, series and component recurrence");
    verify->add_option("--rows", o.rows, "Rows for --tables / terms for --recurrence (default 10)");
    verify->add_option("--max-n", o.max_n, "Largest power for --oracle")->capture_default_str();

    auto* charpoly = app.add_subcommand("charpoly", "States matrix, det(M - L I) and its factorization");
    add_input(charpoly, o);
    charpoly->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* exp = app.add_subcommand("export", "Export a triangle or column reading as a b-file");
    add_input(exp, o);
    exp->add_option("--rows", o.rows, "Last row index (default 10)");
    exp->add_option("--column", o.column, "Export column k instead of the row-by-row reading");
    exp->add_option("--offset", o.offset, "Index of the first term")->capture_default_str();
    exp->add_flag("--bfile", [&o](std::int64_t) { o.format = "bfile"; }, "Same as --format bfile");
    exp->add_option("--compare", o.compare_file, "Compare against a reference b-file")->check(CLI::ExistingFile);
    exp->add_option("--format", o.format)->check(CLI::IsMember({"text", "bfile", "csv", "json"}))->capture_default_str();

    std::vector<const char*> argv{"kbracket"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (bracket->parsed()) return cmd_bracket(o, out);
        if (table->parsed()) return cmd_table(o, out);
        if (gf->parsed()) return cmd_gf(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (charpoly->parsed()) return cmd_charpoly(o, out);
        if (exp->parsed()) return cmd_export(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const oracle::CrossingLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace kbracket::cli
