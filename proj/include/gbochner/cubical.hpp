#pragma once

#include "gbochner/gf2.hpp"
#include "gbochner/tangent.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gbochner {

// The square complex carried by tG: vertices, edges, and the 4-cycle faces
// C(u, v) for unordered pairs u != v with a common base point. Boundary maps
// are over GF(2).
struct CubicalComplex {
    std::vector<std::pair<int, int>> faces; // {u, v}, u < v, pi(u) == pi(v)
    int vertex_count = 0;
    int edge_count = 0;
    int rank_boundary1 = 0;
    int rank_boundary2 = 0;
    bool dd_zero = false;       // boundary1 . boundary2 == 0
    bool rank_exact = false;    // rank1 + rank2 == |E_tG|
    int h1_dim = 0;             // dim ker(b1) - dim im(b2)
    std::vector<std::array<int, 4>> face_edges; // indices into the tG edge list
};

namespace detail {

inline void require_cubical_hypothesis(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        long long ecount = 0;
        for (int v : comp) ecount += g.degree(v);
        ecount /= 2;
        if (comp.size() == 1 || (comp.size() == 2 && ecount == 1)) {
            std::string who;
            for (int v : comp) who += (who.empty() ? "" : ",") + g.label(v);
            throw error(errc::hypothesis_violated,
                        "component {" + who + "} is an isolated vertex or a single edge");
        }
    }
}

} // namespace detail

inline CubicalComplex build_cubical(const TangentGraph& tg) {
    if (tg.flavor != Flavor::t) throw error(errc::wrong_flavor, "build_cubical expects flavor t");
    const Graph& g = tg.table.base;
    detail::require_cubical_hypothesis(g);

    CubicalComplex cx;
    const auto& t = tg.table;
    cx.vertex_count = tg.graph.n;
    cx.edge_count = tg.graph.edge_count();

    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < cx.edge_count; ++e) edge_index[tg.graph.edges[e]] = e;
    auto eidx = [&](int a, int b) { return edge_index.at({std::min(a, b), std::max(a, b)}); };

    for (int x = 0; x < g.n; ++x) {
        const auto& based = t.based_at[x];
        for (size_t p = 0; p < based.size(); ++p)
            for (size_t q = p + 1; q < based.size(); ++q) {
                int u = based[p], v = based[q];
                cx.faces.emplace_back(u, v);
                cx.face_edges.push_back({eidx(u, t.sigma[u]), eidx(v, t.sigma[v]),
                                         eidx(t.sigma[u], v), eidx(u, t.sigma[v])});
            }
    }

    GF2Matrix b1(cx.edge_count, cx.vertex_count);
    for (int e = 0; e < cx.edge_count; ++e) {
        b1.set(e, tg.graph.edges[e].first);
        b1.set(e, tg.graph.edges[e].second);
    }
    GF2Matrix b2(static_cast<int>(cx.faces.size()), cx.edge_count);
    for (size_t f = 0; f < cx.faces.size(); ++f)
        for (int e : cx.face_edges[f]) b2.set(static_cast<int>(f), e);

    cx.rank_boundary1 = b1.rank();
    cx.rank_boundary2 = b2.rank();

    // boundary of a boundary: each face contributes every corner twice
    cx.dd_zero = true;
    for (size_t f = 0; f < cx.faces.size() && cx.dd_zero; ++f) {
        std::map<int, int> parity;
        for (int e : cx.face_edges[f]) {
            parity[tg.graph.edges[e].first] ^= 1;
            parity[tg.graph.edges[e].second] ^= 1;
        }
        for (auto [_, p] : parity)
            if (p) cx.dd_zero = false;
    }

    cx.rank_exact = (cx.rank_boundary1 + cx.rank_boundary2 == cx.edge_count);
    cx.h1_dim = cx.edge_count - cx.rank_boundary1 - cx.rank_boundary2;
    return cx;
}

// Line graph of g, built directly: one vertex per edge, adjacency = shared
// endpoint.
inline Graph line_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::pair<int, int>> le;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto [i, j] = g.edges[a];
            auto [k, l] = g.edges[b];
            if (i == k || i == l || j == k || j == l) le.emplace_back(a, b);
        }
    std::vector<std::string> labels;
    labels.reserve(m);
    for (auto [i, j] : g.edges) labels.push_back(g.label(i) + "--" + g.label(j));
    return make_graph(m, std::move(le), std::move(labels));
}

struct LambdaReport {
    Graph lambda;     // vertices: reflection edges {u, sigma(u)} of tG
    Graph line;       // line graph of the base, built independently
    bool match = false;
};

// lambda G has one vertex per reflection edge of tG and one edge per face;
// under {u, ubar} <-> {pi(u), pi+(u)} it must coincide with the line graph.
inline LambdaReport lambda_line_graph(const TangentGraph& tg) {
    if (tg.flavor != Flavor::t) throw error(errc::wrong_flavor, "lambda_line_graph expects flavor t");
    const Graph& g = tg.table.base;
    detail::require_cubical_hypothesis(g);
    const auto& t = tg.table;

    // reflection pair {u, ubar}  <->  base edge index, the canonical bijection
    std::map<std::pair<int, int>, int> base_edge_index;
    for (int e = 0; e < g.edge_count(); ++e) base_edge_index[g.edges[e]] = e;
    auto pair_id = [&](int u) {
        return base_edge_index.at({std::min(t.pi[u], t.pi_plus[u]), std::max(t.pi[u], t.pi_plus[u])});
    };

    std::set<std::pair<int, int>> le;
    for (int x = 0; x < g.n; ++x) {
        const auto& based = t.based_at[x];
        for (size_t p = 0; p < based.size(); ++p)
            for (size_t q = p + 1; q < based.size(); ++q) {
                int a = pair_id(based[p]), b = pair_id(based[q]);
                le.insert({std::min(a, b), std::max(a, b)});
            }
    }
    std::vector<std::string> labels;
    for (auto [i, j] : g.edges) labels.push_back(g.label(i) + "--" + g.label(j));

    LambdaReport r;
    r.lambda = make_graph(g.edge_count(), {le.begin(), le.end()}, std::move(labels));
    r.line = line_graph(g);
    r.match = (r.lambda.edges == r.line.edges);
    return r;
}

} // namespace gbochner
