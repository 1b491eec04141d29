// Copyright 2026 The localroots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "localroots/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "localroots/parse.hpp"
#include "localroots/report.hpp"
#include "localroots/svg.hpp"

namespace localroots {

namespace {

struct Options {
    std::optional<std::int64_t> p;
    std::string mode = "padic";
    int rdeg = 1;
    bool json = false;
    std::uint64_t budget = kDefaultBudget;
    std::string in_file;
    int family = 0;
    std::string poly_text;
    std::string svg_file;
    int precision = 10;
    int n = 0;
};

FieldContext make_field(const Options& o, const Json* input) {
    if (input && input->contains("field")) return field_from_json((*input)["field"]);
    if (!o.p) throw Error(ErrorCode::InvalidField, "a prime is required (--p)");
    return field_from_json(Json{{"p", *o.p}, {"mode", o.mode}, {"f", o.rdeg}});
}

Poly load_poly(const Options& o, FieldContext& field) {
    std::optional<Json> input;
    if (!o.in_file.empty()) {
        std::ifstream in(o.in_file);
        if (!in) throw Error(ErrorCode::SyntaxError, "cannot read input file", o.in_file);
        try {
            input = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::SyntaxError, "input file is not valid JSON", e.what());
        }
    }
    field = make_field(o, input ? &*input : nullptr);
    if (o.family > 0) return sharp_family(o.family, field);
    if (input) return poly_from_json(*input, field);
    if (o.poly_text.empty())
        throw Error(ErrorCode::SyntaxError, "no polynomial given (argument, --in or --family)");
    return parse_poly(o.poly_text, field);
}

std::string point_text(const Json& pt) {
    return "(" + pt[0].dump() + ", " + pt[1].dump() + ")";
}

std::string edge_text(const Json& e) {
    return point_text(e["left"]) + " -- " + point_text(e["right"]) + "  slope " +
           e["slope"].get<std::string>() + ", length " + e["length"].dump() + ", root valuation " +
           e["root_valuation"].get<std::string>() + ", support points " +
           std::to_string(e["support_on_edge"].size());
}

void render_text(const std::string& command, const Json& r, std::ostream& out) {
    out << "f = " << r["poly"]["text"].get<std::string>() << " over "
        << r["poly"]["field"]["name"].get<std::string>() << "\n";
    if (command == "polygon") {
        const Json& np = r["polygon"];
        out << "support:";
        for (const auto& pt : np["support"]) out << ' ' << point_text(pt);
        out << "\nlower vertices:";
        for (const auto& pt : np["lower_vertices"]) out << ' ' << point_text(pt);
        out << "\nlower edges: " << np["lower_edges"].size() << "\n";
        for (const auto& e : np["lower_edges"]) out << "  " << edge_text(e) << "\n";
        if (r.contains("svg")) out << "svg written to " << r["svg"].get<std::string>() << "\n";
    } else if (command == "regular") {
        const Json& rep = r["regularity"];
        out << "regular: " << (rep["regular"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& e : rep["edges"])
            out << "  " << edge_text(e) << "  [" << e["failure"].get<std::string>() << "]\n";
    } else if (command == "count") {
        const Json& c = r["count"];
        out << "nonzero roots in K: " << c["total_nonzero"] << " (edge bound " << c["bound"] << ")\n"
            << "zero root multiplicity: " << c["zero_root_multiplicity"] << "\n";
        for (const auto& s : c["per_slope"])
            out << "  valuation " << s["root_valuation"].get<std::string>() << ": " << s["count"] << "\n";
    } else if (command == "roots") {
        const Json& rs = r["roots"];
        out << "zero root multiplicity: " << rs["zero_root_multiplicity"] << "\n"
            << "nonzero roots: " << rs["roots"].size() << "\n";
        for (const auto& x : rs["roots"])
            out << "  valuation " << x["valuation"] << "  digits " << x["digits"].get<std::string>()
                << "  (v(f) = " << x["residual_valuation"].get<std::string>() << ")\n";
    } else if (command == "disc") {
        const Json& d = r["discriminant"];
        out << "discriminant: " << d["discriminant"].get<std::string>() << "\n"
            << "Res(f, f'): " << d["resultant_f_fprime"].get<std::string>() << "\n"
            << "r = " << d["r"] << "\n";
    } else if (command == "verify") {
        out << "oracle count: " << r["oracle_count"] << "\n"
            << "pipeline count: " << r["pipeline_count"] << "\n"
            << "lifted roots: " << r["lifted_count"] << "\n"
            << "equivalence agreement: " << (r["equivalence_agreement"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& c : r["bounds"]["checks"])
            out << "  N=" << c["N"] << "  " << c["name"].get<std::string>() << ": "
                << c["observed"].get<std::string>() << " vs " << c["limit"].get<std::string>()
                << (c["passed"].get<bool>() ? "  ok" : "  FAILED") << "\n";
        if (r.contains("residues"))
            out << "N=" << r["residues"]["N"] << ": " << r["residues"]["residue_roots"]
                << " residue roots in " << r["residues"]["classes"] << " classes\n";
        out << "verdict: " << (r["agree"].get<bool>() ? "agree" : "DISAGREE") << "\n";
    }
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
    FieldContext field = FieldContext::padic(2);
    const Poly f = load_poly(o, field);
    Json r{{"command", command}, {"poly", poly_json(f)}};
    int code = 0;

    if (command == "polygon") {
        r["polygon"] = polygon_json(f);
        if (!o.svg_file.empty()) {
            std::ofstream svg(o.svg_file);
            if (!svg) throw Error(ErrorCode::SyntaxError, "cannot write svg file", o.svg_file);
            svg << newton_svg(newton_polygon(f));
            r["svg"] = o.svg_file;
        }
    } else if (command == "regular") {
        r["regularity"] = regularity_json(is_regular(f));
    } else if (command == "count") {
        r["count"] = count_json(count_roots(f));
    } else if (command == "roots") {
        r["precision"] = o.precision;
        r["roots"] = roots_json(find_roots(f, o.precision, o.budget), field);
    } else if (command == "disc") {
        r["discriminant"] = discriminant_json(f);
    } else if (command == "verify") {
        const std::int64_t oracle = count_roots_oracle(f, o.budget);
        const RootCount rc = count_roots(f);
        const RootSet rs = find_roots(f, std::max(o.precision, 1), o.budget);
        const BoundsReport bounds = check_bounds(f, o.budget);
        const bool eq = equivalence_agreement(f, o.budget);
        const std::int64_t zero = rc.zero_root_multiplicity > 0 ? 1 : 0;
        const std::int64_t pipeline = rc.total_nonzero + zero;
        const std::int64_t lifted = static_cast<std::int64_t>(rs.roots.size()) + zero;
        const bool agree = oracle == pipeline && pipeline == lifted && bounds.all_passed && eq;
        r["oracle_count"] = oracle;
        r["pipeline_count"] = pipeline;
        r["lifted_count"] = lifted;
        r["count"] = count_json(rc);
        r["bounds"] = bounds_json(bounds);
        r["equivalence_agreement"] = eq;
        if (o.n > 0) {
            const ResidueRootSet s = roots_mod(f, o.n, o.budget);
            r["residues"] = {{"N", o.n},
                             {"residue_roots", s.roots.size()},
                             {"classes", partition(s, Relation::Approx).classes.size()}};
        }
        r["agree"] = agree;
        code = agree ? 0 : 2;
    }

    if (o.json)
        out << r.dump(2) << "\n";
    else
        render_text(command, r, out);
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Roots of polynomials over Q_p and F_q((t))", "localroots"};
    app.require_subcommand(1);
    app.fallthrough();
    std::int64_t p = 0;
    auto* p_opt = app.add_option("--p", p, "residue characteristic (a prime)");
    app.add_option("--mode", o.mode, "padic or laurent")->check(CLI::IsMember({"padic", "laurent"}));
    app.add_option("--rdeg", o.rdeg, "residue degree f (laurent only)");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--budget", o.budget, "maximum residue evaluations");
    app.add_option("--in", o.in_file, "read the polynomial (and field) from a JSON file");
    app.add_option("--family", o.family, "use the t-th member of the sharp family")->check(CLI::PositiveNumber);

    const char* names[][2] = {
        {"polygon", "Newton polygon and lower edges"},
        {"regular", "regularity verdict per lower edge"},
        {"count", "number of roots in K^* per slope"},
        {"roots", "roots in K to a given precision"},
        {"disc", "discriminant and its valuation r"},
        {"verify", "compare the counts against exhaustive enumeration"},
    };
    std::string command;
    for (const auto& [name, help] : names) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("poly", o.poly_text, "polynomial in x");
        const std::string n = name;
        if (n == "polygon") sub->add_option("--svg", o.svg_file, "write an SVG drawing");
        if (n == "roots" || n == "verify")
            sub->add_option("--precision", o.precision, "significant digits per root")
                ->check(CLI::Range(1, 100000));
        if (n == "verify") sub->add_option("--n", o.n, "also report S_N at this precision");
        sub->callback([&command, n] { command = n; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        out << Json{{"code", "UsageError"}, {"message", e.what()}, {"detail", ""}}.dump() << "\n";
        err << app.help();
        return 1;
    }
    if (p_opt->count()) o.p = p;

    try {
        return dispatch(command, o, out);
    } catch (const Error& e) {
        out << error_json(e).dump(o.json ? 2 : -1) << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << Json{{"code", "InternalError"}, {"message", e.what()}, {"detail", ""}}.dump() << "\n";
        return 1;
    }
}

}  // namespace localroots
