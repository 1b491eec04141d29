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

#include "localroots/report.hpp"

#include <set>

#include "localroots/parse.hpp"

namespace localroots {

namespace {

Json point_json(const LatticePoint& pt) { return Json::array({pt.x, pt.y}); }

Json edge_json(const LowerEdge& e) {
    Json support = Json::array();
    for (const auto& pt : e.support_on_edge) support.push_back(point_json(pt));
    return {{"left", point_json(e.left)},
            {"right", point_json(e.right)},
            {"slope", e.slope.get_str()},
            {"length", e.length},
            {"root_valuation", edge_root_data(e).root_valuation.get_str()},
            {"support_on_edge", std::move(support)}};
}

}  // namespace

Json field_json(const FieldContext& field) {
    Json j{{"p", field.p()},
           {"mode", field.mode() == Characteristic::Mixed ? "padic" : "laurent"},
           {"f", field.residue_degree()},
           {"q", field.q()},
           {"name", field.describe()}};
    return j;
}

FieldContext field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer())
        throw Error(ErrorCode::InvalidField, "field needs an integer \"p\"");
    const auto p = j["p"].get<std::int64_t>();
    const std::string mode = j.value("mode", "padic");
    const auto f = j.value("f", std::int64_t{1});
    if (p < 2 || p > 0x7fffffff || f < 1 || f > 64)
        throw Error(ErrorCode::InvalidField, "field parameters out of range");
    if (mode == "padic") {
        if (f != 1) throw Error(ErrorCode::InvalidField, "Q_p has residue degree 1");
        return FieldContext::padic(static_cast<std::uint32_t>(p));
    }
    if (mode == "laurent")
        return FieldContext::laurent(static_cast<std::uint32_t>(p), static_cast<unsigned>(f));
    throw Error(ErrorCode::InvalidField, "mode must be \"padic\" or \"laurent\"", mode);
}

Json poly_json(const Poly& f) {
    Json terms = Json::array();
    for (const auto& [k, c] : f.terms()) terms.push_back(Json::array({k, format_element(c, f.field())}));
    return {{"text", format_poly(f)}, {"terms", std::move(terms)}, {"field", field_json(f.field())}};
}

Poly poly_from_json(const Json& j, const FieldContext& field) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw Error(ErrorCode::SyntaxError, "input needs a \"terms\" array");
    Poly::Terms terms;
    std::set<std::int64_t> seen;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw Error(ErrorCode::SyntaxError, "each term must be [exponent, \"coefficient\"]", t.dump());
        const auto k = t[0].get<std::int64_t>();
        if (k < 0 || k > 1'000'000)
            throw Error(ErrorCode::NonIntegerExponent, "exponent out of range", t.dump());
        if (!seen.insert(k).second)
            throw Error(ErrorCode::BadFieldElement, "duplicate exponent", std::to_string(k));
        const std::string text = t[1].is_string() ? t[1].get<std::string>() : t[1].dump();
        KElement c = parse_element(text, field);
        if (!field.is_zero(c)) terms.emplace(static_cast<int>(k), std::move(c));
    }
    return Poly(field, terms);
}

Json polygon_json(const Poly& f) {
    const NewtonPolygon np = newton_polygon(f);
    Json support = Json::array(), vertices = Json::array(), edges = Json::array();
    for (const auto& pt : np.support) support.push_back(point_json(pt));
    for (const auto& pt : np.lower_vertices) vertices.push_back(point_json(pt));
    for (const auto& e : lower_edges(np)) edges.push_back(edge_json(e));
    return {{"support", std::move(support)},
            {"lower_vertices", std::move(vertices)},
            {"lower_edges", std::move(edges)}};
}

Json regularity_json(const RegularityReport& report) {
    Json edges = Json::array();
    for (const auto& v : report.per_edge) {
        Json e = edge_json(v.edge);
        e["passes"] = v.passes;
        e["failure"] = std::string(to_string(v.failure));
        edges.push_back(std::move(e));
    }
    return {{"regular", report.regular}, {"edges", std::move(edges)}};
}

Json count_json(const RootCount& count) {
    Json slopes = Json::array();
    for (const auto& s : count.per_slope)
        slopes.push_back({{"root_valuation", s.root_valuation.get_str()}, {"count", s.count}});
    return {{"zero_root_multiplicity", count.zero_root_multiplicity},
            {"per_slope", std::move(slopes)},
            {"total_nonzero", count.total_nonzero},
            {"bound", count.bound}};
}

Json discriminant_json(const Poly& f) {
    const FieldContext& F = f.field();
    const DiscriminantInfo info = discriminant_valuation(f);
    const int n = f.degree();
    KElement disc = F.exact_div(info.res_f_fprime, f.leading_coefficient());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) disc = F.neg(disc);
    return {{"discriminant", format_element(disc, F)},
            {"resultant_f_fprime", format_element(info.res_f_fprime, F)},
            {"r", info.r}};
}

Json roots_json(const RootSet& roots, const FieldContext& field) {
    Json list = Json::array();
    for (const auto& root : roots.roots) {
        const Truncated& t = root.value.truncated();
        std::string digits;
        for (std::size_t i = 0; i < t.digits.size(); ++i) {
            if (i) digits += ' ';
            digits += field.residue_to_string({t.digits[i]});
        }
        Json r{{"valuation", t.base_valuation},
               {"digits", digits},
               {"precision", t.precision()},
               {"value", field.to_string(root.value)},
               {"residual_valuation", root.residual_valuation.to_string()}};
        r["class"] = root.class_id ? Json(root.class_id->index.get_str()) : Json(nullptr);
        list.push_back(std::move(r));
    }
    return {{"zero_root_multiplicity", roots.zero_root_multiplicity},
            {"roots", std::move(list)},
            {"evaluations", roots.evaluations}};
}

Json bounds_json(const BoundsReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"N", c.N},
                          {"observed", c.observed.get_str()},
                          {"limit", c.limit.get_str()},
                          {"passed", c.passed}});
    return {{"r", report.r},
            {"class_count", report.class_count},
            {"all_passed", report.all_passed},
            {"checks", std::move(checks)}};
}

Json error_json(const Error& e) {
    Json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* nr = dynamic_cast<const NotRegularError*>(&e))
        j["detail"] = regularity_json(nr->report());
    else
        j["detail"] = e.detail();
    return j;
}

}  // namespace localroots
