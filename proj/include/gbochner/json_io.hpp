#pragma once

#include "gbochner/bochner.hpp"
#include "gbochner/check.hpp"
#include "gbochner/cubical.hpp"
#include "gbochner/tangent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gbochner {

using Json = nlohmann::ordered_json;

inline Json to_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    j["labels"] = g.labels;
    return j;
}

inline Json to_json(const TangentGraph& tg) {
    Json j;
    j["flavor"] = flavor_name(tg.flavor);
    std::vector<std::string> names;
    names.reserve(tg.table.size());
    for (int u = 0; u < tg.table.size(); ++u) names.push_back(tg.table.name(u));
    j["vertices"] = std::move(names);
    Json edges = Json::array();
    for (auto [a, b] : tg.graph.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

inline Json to_json(const TangentGraph& tg, const CubicalComplex& cx) {
    Json j;
    Json faces = Json::array();
    for (auto [u, v] : cx.faces)
        faces.push_back(Json::array({tg.table.name(u), tg.table.name(v)}));
    j["faces"] = std::move(faces);
    j["vertex_count"] = cx.vertex_count;
    j["edge_count"] = cx.edge_count;
    j["rank_boundary1"] = cx.rank_boundary1;
    j["rank_boundary2"] = cx.rank_boundary2;
    j["dd_zero"] = cx.dd_zero;
    j["rank_exact"] = cx.rank_exact;
    j["h1_dimension"] = cx.h1_dim;
    return j;
}

inline Json to_json(const LambdaReport& r) {
    Json j;
    j["lambda"] = to_json(r.lambda);
    j["line_graph"] = to_json(r.line);
    j["match"] = r.match;
    return j;
}

inline Json rationals_to_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline Json field_to_json(const std::string& space, const std::vector<Rational>& values) {
    Json j;
    j["space"] = space;
    j["values"] = rationals_to_json(values);
    return j;
}

inline Json to_json(const BochnerReport& r) {
    Json j;
    j["lhs"] = rationals_to_json(r.lhs);
    j["term_grad"] = rationals_to_json(r.term_grad);
    j["term_hess"] = rationals_to_json(r.term_hess);
    j["term_B"] = rationals_to_json(r.term_B);
    j["residual"] = rationals_to_json(r.residual);
    j["lhs_weighted"] = rationals_to_json(r.lhs_weighted);
    j["residual_weighted"] = rationals_to_json(r.residual_weighted);
    j["change_of_variables_ok"] = r.change_of_variables_ok;
    j["product_step_ok"] = r.product_step_ok;
    return j;
}

inline Json to_json(const SpectrumResult& s) {
    Json j;
    j["eigenvalues"] = s.eigenvalues;
    j["max_relative_residual"] = s.max_relative_residual;
    return j;
}

// elapsed_ms is deliberately left out: stdout must be byte-identical across
// runs for fixed inputs and seed.
inline Json to_json(const CheckOutcome& o) {
    Json j;
    j["suite"] = o.suite;
    j["graph"] = o.graph_id;
    j["passed"] = o.passed;
    Json fails = Json::array();
    for (const auto& [check, witness] : o.failures) {
        Json f;
        f["check"] = check;
        if (!witness.empty()) f["witness"] = witness;
        fails.push_back(std::move(f));
    }
    j["failures"] = std::move(fails);
    return j;
}

inline Json info_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    j["edges"] = g.edge_count();
    j["degree_sequence"] = degree_sequence(g);
    TangentGraph tg = build_tangent(g, Flavor::t);
    TangentGraph tau = build_tangent(g, Flavor::tau);
    j["tangent_vertices"] = tg.graph.n;
    j["tangent_edges"] = tg.graph.edge_count();
    j["complete_tangent_edges"] = tau.graph.edge_count();
    j["is_star"] = is_star(g);
    j["components_are_stars"] = components_are_stars(g);
    j["section_count"] = count_sections(g).str();
    return j;
}

} // namespace gbochner
