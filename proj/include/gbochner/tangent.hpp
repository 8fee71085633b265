#pragma once

#include "gbochner/graph.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gbochner {

// Canonical table of directed edges: both orientations of every edge,
// sorted lexicographically by (tail, head). All operator matrices downstream
// depend on this order.
struct DirectedEdgeTable {
    Graph base;
    std::vector<std::pair<int, int>> edges; // (tail, head), lex sorted
    std::vector<int> sigma;                 // reversal involution
    std::vector<int> pi;                    // tail (base point)
    std::vector<int> pi_plus;               // head (end point)
    std::vector<std::vector<int>> based_at; // directed edges indexed by tail

    int size() const { return static_cast<int>(edges.size()); }

    int index_of(int tail, int head) const {
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(tail, head));
        if (it == edges.end() || *it != std::make_pair(tail, head))
            throw error(errc::vertex_out_of_range, "no directed edge (" + std::to_string(tail) +
                                                       "," + std::to_string(head) + ")");
        return static_cast<int>(it - edges.begin());
    }

    std::string name(int u) const {
        return base.label(pi[u]) + "->" + base.label(pi_plus[u]);
    }
};

inline DirectedEdgeTable build_directed_edges(const Graph& g) {
    DirectedEdgeTable t;
    t.base = g;
    t.edges.reserve(2 * g.edges.size());
    for (auto [i, j] : g.edges) {
        t.edges.emplace_back(i, j);
        t.edges.emplace_back(j, i);
    }
    std::sort(t.edges.begin(), t.edges.end());
    int m = t.size();
    t.sigma.resize(m);
    t.pi.resize(m);
    t.pi_plus.resize(m);
    t.based_at.assign(g.n, {});
    for (int u = 0; u < m; ++u) {
        t.pi[u] = t.edges[u].first;
        t.pi_plus[u] = t.edges[u].second;
        t.based_at[t.pi[u]].push_back(u);
    }
    for (int u = 0; u < m; ++u) t.sigma[u] = t.index_of(t.pi_plus[u], t.pi[u]);
    return t;
}

enum class Flavor { gstar, t, tau, t2, t_tau };

inline const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::gstar: return "gstar";
        case Flavor::t: return "t";
        case Flavor::tau: return "tau";
        case Flavor::t2: return "t2";
        case Flavor::t_tau: return "t_tau";
    }
    return "?";
}

enum class Motion { reflection, forward, backward, generic };

// A vertex of an iterated tangent graph: the directed edge (u, v) of the
// inner tangent graph, spelled out as base-vertex quadruple i,j,k,l with
// u = (i,j) and v = (k,l).
struct Tangent2Vertex {
    int u = -1, v = -1;
    int i = -1, j = -1, k = -1, l = -1;
    Motion motion = Motion::generic;

    // +1 forward translation, -1 backward translation, 0 reflection.
    int omega() const {
        switch (motion) {
            case Motion::forward: return 1;
            case Motion::backward: return -1;
            case Motion::reflection: return 0;
            default: throw error(errc::wrong_flavor, "orientation undefined for generic motion");
        }
    }
};

struct TangentGraph {
    Flavor flavor = Flavor::t;
    DirectedEdgeTable table; // directed edges of the immediate base graph
    Graph graph;             // the tangent graph on table.size() vertices
    // iterated flavors only: directed edges of the original graph, plus the
    // base-vertex decoration of every vertex of this graph
    DirectedEdgeTable inner_table;
    std::vector<Tangent2Vertex> second_order;
};

namespace detail {

inline std::vector<std::string> directed_edge_names(const DirectedEdgeTable& t) {
    std::vector<std::string> names;
    names.reserve(t.size());
    for (int u = 0; u < t.size(); ++u) names.push_back(t.name(u));
    return names;
}

inline Motion classify_motion(const DirectedEdgeTable& t, int u, int v) {
    if (v == t.sigma[u]) return Motion::reflection;
    if (t.pi_plus[u] == t.pi[v]) return Motion::forward;
    if (t.pi[u] == t.pi_plus[v]) return Motion::backward;
    return Motion::generic;
}

} // namespace detail

// Flavors on the directed edges of g:
//   gstar: {ij, jk} for consecutive directed edges (this is the seed set E_*)
//   t:     end point of one equals base point of the other
//   tau:   base points adjacent in g
inline TangentGraph build_tangent(const Graph& g, Flavor flavor) {
    if (flavor != Flavor::gstar && flavor != Flavor::t && flavor != Flavor::tau)
        throw error(errc::wrong_flavor, "build_tangent expects gstar, t or tau");
    TangentGraph tg;
    tg.flavor = flavor;
    tg.table = build_directed_edges(g);
    const auto& t = tg.table;

    std::set<std::pair<int, int>> es;
    if (flavor == Flavor::gstar) {
        // literal seed set: u = ij followed by v = jk
        for (int u = 0; u < t.size(); ++u)
            for (int v : t.based_at[t.pi_plus[u]])
                if (v != u) es.insert({std::min(u, v), std::max(u, v)});
    } else if (flavor == Flavor::t) {
        for (int x = 0; x < g.n; ++x)
            for (int w : t.based_at[x]) {
                int u = t.sigma[w]; // ends at x
                for (int v : t.based_at[x])
                    if (u != v) es.insert({std::min(u, v), std::max(u, v)});
            }
    } else {
        for (auto [i, j] : g.edges)
            for (int u : t.based_at[i])
                for (int v : t.based_at[j]) es.insert({std::min(u, v), std::max(u, v)});
    }

    tg.graph = make_graph(t.size(), {es.begin(), es.end()}, detail::directed_edge_names(t));
    return tg;
}

// t applied once more: t(tG) = t2, t(tauG) = t_tau. Vertices of the result
// carry their base-vertex decoration relative to the original graph.
inline TangentGraph iterate_tangent(const TangentGraph& tg) {
    if (tg.flavor != Flavor::t && tg.flavor != Flavor::tau)
        throw error(errc::unsupported_iteration, "can only iterate a t or tau tangent graph");
    TangentGraph out = build_tangent(tg.graph, Flavor::t);
    out.flavor = (tg.flavor == Flavor::t) ? Flavor::t2 : Flavor::t_tau;
    out.inner_table = tg.table;
    const auto& inner = tg.table;
    const auto& outer = out.table;
    out.second_order.reserve(outer.size());
    for (int a = 0; a < outer.size(); ++a) {
        Tangent2Vertex d;
        d.u = outer.pi[a];
        d.v = outer.pi_plus[a];
        d.i = inner.pi[d.u];
        d.j = inner.pi_plus[d.u];
        d.k = inner.pi[d.v];
        d.l = inner.pi_plus[d.v];
        d.motion = detail::classify_motion(inner, d.u, d.v);
        out.second_order.push_back(d);
    }
    return out;
}

// Directed-edge table of a tangent graph together with its decoration.
// This is all the Hessian and the fiber decomposition need; the (large)
// edge set of the iterated tangent graph is never materialized.
struct IteratedTable {
    Flavor flavor = Flavor::t2;              // t2 or t_tau
    DirectedEdgeTable inner;                 // directed edges of g
    Graph tangent;                           // tG or tauG
    DirectedEdgeTable outer;                 // directed edges of tG / tauG
    std::vector<Tangent2Vertex> decoration;  // per outer index
};

inline IteratedTable build_iterated_table(const Graph& g, Flavor flavor) {
    if (flavor != Flavor::t2 && flavor != Flavor::t_tau)
        throw error(errc::wrong_flavor, "build_iterated_table expects t2 or t_tau");
    TangentGraph tg = build_tangent(g, flavor == Flavor::t2 ? Flavor::t : Flavor::tau);
    IteratedTable it;
    it.flavor = flavor;
    it.inner = tg.table;
    it.tangent = tg.graph;
    it.outer = build_directed_edges(tg.graph);
    it.decoration.reserve(it.outer.size());
    for (int a = 0; a < it.outer.size(); ++a) {
        Tangent2Vertex d;
        d.u = it.outer.pi[a];
        d.v = it.outer.pi_plus[a];
        d.i = it.inner.pi[d.u];
        d.j = it.inner.pi_plus[d.u];
        d.k = it.inner.pi[d.v];
        d.l = it.inner.pi_plus[d.v];
        d.motion = detail::classify_motion(it.inner, d.u, d.v);
        it.decoration.push_back(d);
    }
    return it;
}

// Orientation labels of all t2 vertices. Every vertex is a reflection,
// forward translation, or backward translation of its base directed edge;
// per base edge u the class sizes are 1, deg(head)-1, deg(tail)-1.
inline const std::vector<Tangent2Vertex>& orientation_classify(const TangentGraph& t2) {
    if (t2.flavor != Flavor::t2)
        throw error(errc::wrong_flavor, "orientation_classify expects flavor t2");
    for (const auto& d : t2.second_order)
        if (d.motion == Motion::generic)
            throw error(errc::wrong_flavor, "t2 vertex with no orientation class");
    return t2.second_order;
}

// dh(u) = h(tail) -> h(head), as a map on directed-edge indices.
inline VertexMap differential_of_hom(const VertexMap& h, const Graph& H, const Graph& K) {
    if (!is_homomorphism(h, H, K))
        throw error(errc::not_a_homomorphism, "differential of a non-homomorphism");
    DirectedEdgeTable tH = build_directed_edges(H);
    DirectedEdgeTable tK = build_directed_edges(K);
    VertexMap dh;
    dh.domain_size = tH.size();
    dh.image.reserve(tH.size());
    for (int u = 0; u < tH.size(); ++u)
        dh.image.push_back(tK.index_of(h.image[tH.pi[u]], h.image[tH.pi_plus[u]]));
    return dh;
}

// --- vertex sections -------------------------------------------------------

inline BigInt count_sections(const Graph& g) {
    BigInt c = 1;
    for (int v = 0; v < g.n; ++v) c *= g.degree(v);
    return c; // zero when some vertex is isolated
}

// Lazy mixed-radix enumeration of all sections, in neighbor-list order.
class SectionEnumerator {
public:
    explicit SectionEnumerator(const Graph& g) : g_(&g), table_(build_directed_edges(g)) {
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == 0)
                throw error(errc::isolated_vertex,
                            "vertex " + g.label(v) + " has no outgoing directed edge");
        digits_.assign(g.n, 0);
    }

    std::optional<VertexMap> next() {
        if (done_) return std::nullopt;
        VertexMap s;
        s.domain_size = g_->n;
        s.image.reserve(g_->n);
        for (int v = 0; v < g_->n; ++v)
            s.image.push_back(table_.index_of(v, g_->adjacency[v][digits_[v]]));
        // advance odometer
        int v = g_->n - 1;
        while (v >= 0) {
            if (++digits_[v] < g_->degree(v)) break;
            digits_[v] = 0;
            --v;
        }
        if (v < 0) done_ = true;
        return s;
    }

private:
    const Graph* g_;
    DirectedEdgeTable table_;
    std::vector<int> digits_;
    bool done_ = false;
};

// Full enumeration; refuses above 2^20 sections unless forced.
inline std::vector<VertexMap> enumerate_sections(const Graph& g, bool force = false) {
    BigInt total = count_sections(g);
    if (!force && total > (BigInt(1) << 20))
        throw error(errc::dimension_mismatch,
                    "section count " + total.str() + " exceeds enumeration cap; sample instead");
    std::vector<VertexMap> out;
    SectionEnumerator e(g);
    while (auto s = e.next()) out.push_back(std::move(*s));
    return out;
}

// Deterministic pseudo-random sample of `limit` sections.
inline std::vector<VertexMap> sample_sections(const Graph& g, int limit, std::uint64_t seed) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0)
            throw error(errc::isolated_vertex, "vertex " + g.label(v) + " has no outgoing directed edge");
    DirectedEdgeTable table = build_directed_edges(g);
    SplitMix64 rng(seed);
    std::vector<VertexMap> out;
    out.reserve(limit);
    for (int k = 0; k < limit; ++k) {
        VertexMap s;
        s.domain_size = g.n;
        s.image.reserve(g.n);
        for (int v = 0; v < g.n; ++v) {
            int pick = static_cast<int>(rng.next_below(g.degree(v)));
            s.image.push_back(table.index_of(v, g.adjacency[v][pick]));
        }
        out.push_back(std::move(s));
    }
    return out;
}

// --- verification reports --------------------------------------------------

struct CountingReport {
    bool vertex_count_ok = false;      // |V*| = 2|E|
    bool t_degree_ok = false;          // deg_t(u) = deg(head) + deg(tail) - 1
    bool tau_degree_ok = false;        // deg_tau(u) = A deg(tail)
    bool t_edge_formula_ok = false;    // |E_t| + |E| = sum deg^2
    bool tau_edge_formula_ok = false;  // 2|E_tau| = sum deg * A deg
    long long t_edges = 0, tau_edges = 0, sum_deg_sq = 0;
    std::string witness;

    bool all_ok() const {
        return vertex_count_ok && t_degree_ok && tau_degree_ok && t_edge_formula_ok &&
               tau_edge_formula_ok;
    }
};

inline CountingReport verify_counting(const Graph& g) {
    CountingReport r;
    TangentGraph tg = build_tangent(g, Flavor::t);
    TangentGraph tau = build_tangent(g, Flavor::tau);
    const auto& t = tg.table;

    r.t_edges = tg.graph.edge_count();
    r.tau_edges = tau.graph.edge_count();
    r.vertex_count_ok = tg.graph.n == 2 * g.edge_count() && tau.graph.n == tg.graph.n;
    if (!r.vertex_count_ok) r.witness = "vertex count != 2|E|";

    std::vector<long long> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<long long> adeg = adjacency_apply(g, deg);

    r.t_degree_ok = true;
    r.tau_degree_ok = true;
    for (int u = 0; u < t.size(); ++u) {
        if (tg.graph.degree(u) != deg[t.pi_plus[u]] + deg[t.pi[u]] - 1) {
            r.t_degree_ok = false;
            if (r.witness.empty()) r.witness = "deg_t mismatch at " + t.name(u);
        }
        if (tau.graph.degree(u) != adeg[t.pi[u]]) {
            r.tau_degree_ok = false;
            if (r.witness.empty()) r.witness = "deg_tau mismatch at " + t.name(u);
        }
    }

    long long sum_sq = 0, sum_dad = 0;
    for (int v = 0; v < g.n; ++v) {
        sum_sq += deg[v] * deg[v];
        sum_dad += deg[v] * adeg[v];
    }
    r.sum_deg_sq = sum_sq;
    r.t_edge_formula_ok = r.t_edges + g.edge_count() == sum_sq;
    r.tau_edge_formula_ok = 2 * r.tau_edges == sum_dad;
    if (!r.t_edge_formula_ok && r.witness.empty()) r.witness = "|E_t| + |E| != sum deg^2";
    if (!r.tau_edge_formula_ok && r.witness.empty()) r.witness = "2|E_tau| != sum deg*Adeg";
    return r;
}

// Every component is a star K_{1,m} (m >= 1) or a single vertex. This is the
// exact condition for E_t = E_tau; a connected graph satisfies it iff it is a
// star or edgeless.
inline bool components_are_stars(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        long long ecount = 0;
        int big = 0;
        for (int v : comp) {
            ecount += g.degree(v);
            if (g.degree(v) >= 2) ++big;
        }
        ecount /= 2;
        if (ecount == 0) continue;
        if (ecount != static_cast<long long>(comp.size()) - 1 || big > 1) return false;
    }
    return true;
}

inline bool is_star(const Graph& g) {
    // connected K_{1,m}, m >= 1
    if (g.edge_count() == 0 || connected_components(g).size() != 1) return false;
    return components_are_stars(g);
}

struct ExtremalReport {
    bool gstar_equals_t = false;         // E_* == E_t
    bool sigma_t_hom = false;            // sigma : tG -> tG
    bool pi_t_hom = false;               // pi : tG -> G
    bool pi_tau_hom = false;             // pi : tauG -> G
    bool tau_is_maximal_pi_hom = false;  // E_tau is the largest edge set with pi a hom
    bool tau_section_generated = false;  // E_tau == {{il, jk} : {i,j} in E}
    bool t_subset_tau = false;
    bool equality_iff_star = false;      // E_t == E_tau  <=>  every component a star
    bool t_equals_tau = false;
    bool star_like = false;
    bool sigma_tau_hom = true;   // informational; fails e.g. on P4
    bool pip_tau_hom = true;     // informational
    std::string sigma_tau_witness, pip_tau_witness, witness;

    bool all_ok() const {
        return gstar_equals_t && sigma_t_hom && pi_t_hom && pi_tau_hom && tau_is_maximal_pi_hom &&
               tau_section_generated && t_subset_tau && equality_iff_star;
    }
};

inline ExtremalReport verify_extremal(const Graph& g) {
    ExtremalReport r;
    TangentGraph gs = build_tangent(g, Flavor::gstar);
    TangentGraph tg = build_tangent(g, Flavor::t);
    TangentGraph tau = build_tangent(g, Flavor::tau);
    const auto& t = tg.table;

    r.gstar_equals_t = gs.graph.edges == tg.graph.edges;
    if (!r.gstar_equals_t) r.witness = "seed edge set differs from E_t";

    r.sigma_t_hom = true;
    r.pi_t_hom = true;
    for (auto [u, v] : tg.graph.edges) {
        if (!tg.graph.has_edge(t.sigma[u], t.sigma[v])) {
            r.sigma_t_hom = false;
            if (r.witness.empty()) r.witness = "sigma breaks t-edge {" + t.name(u) + "," + t.name(v) + "}";
        }
        if (!g.has_edge(t.pi[u], t.pi[v])) {
            r.pi_t_hom = false;
            if (r.witness.empty()) r.witness = "pi breaks t-edge {" + t.name(u) + "," + t.name(v) + "}";
        }
    }

    r.pi_tau_hom = true;
    for (auto [u, v] : tau.graph.edges) {
        if (!g.has_edge(t.pi[u], t.pi[v])) {
            r.pi_tau_hom = false;
            if (r.witness.empty()) r.witness = "pi breaks tau-edge {" + t.name(u) + "," + t.name(v) + "}";
        }
        if (r.sigma_tau_hom && !tau.graph.has_edge(t.sigma[u], t.sigma[v])) {
            r.sigma_tau_hom = false;
            r.sigma_tau_witness = "{" + t.name(u) + "," + t.name(v) + "}";
        }
        if (r.pip_tau_hom && !g.has_edge(t.pi_plus[u], t.pi_plus[v])) {
            r.pip_tau_hom = false;
            r.pip_tau_witness = "{" + t.name(u) + "," + t.name(v) + "}";
        }
    }

    // the largest graph on V* for which pi is a homomorphism is exactly tau
    std::set<std::pair<int, int>> maximal;
    for (int u = 0; u < t.size(); ++u)
        for (int v = u + 1; v < t.size(); ++v)
            if (g.has_edge(t.pi[u], t.pi[v])) maximal.insert({u, v});
    r.tau_is_maximal_pi_hom =
        maximal == std::set<std::pair<int, int>>(tau.graph.edges.begin(), tau.graph.edges.end());

    // section-generated edge set {{il, jk} : {i,j} in E, l ~ i, k ~ j}
    std::set<std::pair<int, int>> gen;
    for (auto [i, j] : g.edges)
        for (int l : g.adjacency[i])
            for (int k : g.adjacency[j]) {
                int u = t.index_of(i, l), v = t.index_of(j, k);
                gen.insert({std::min(u, v), std::max(u, v)});
            }
    r.tau_section_generated =
        gen == std::set<std::pair<int, int>>(tau.graph.edges.begin(), tau.graph.edges.end());

    r.t_subset_tau = std::includes(tau.graph.edges.begin(), tau.graph.edges.end(),
                                   tg.graph.edges.begin(), tg.graph.edges.end());
    r.t_equals_tau = tg.graph.edges == tau.graph.edges;
    r.star_like = components_are_stars(g);
    r.equality_iff_star = (r.t_equals_tau == r.star_like);
    if (!r.equality_iff_star && r.witness.empty()) r.witness = "E_t == E_tau does not match star test";
    return r;
}

struct GroupActionReport {
    bool sigma_involution = false;
    bool dsigma_involution = false;
    bool commute = false;
    bool sigma_hom = false;
    bool dsigma_hom = false;
    bool composite_rule_ok = false; // sigma_tG(dsigma(ij/kl)) = lk/ji
    std::string witness;

    bool all_ok() const {
        return sigma_involution && dsigma_involution && commute && sigma_hom && dsigma_hom &&
               composite_rule_ok;
    }
};

// Z2 x Z2 on the vertices of t2 (= directed edges of tG): the reversal of
// the tG-edge pair and the differential of the base reversal.
inline GroupActionReport group_action_check(const TangentGraph& t2) {
    if (t2.flavor != Flavor::t2) throw error(errc::wrong_flavor, "group_action_check expects t2");
    GroupActionReport r;
    const auto& inner = t2.inner_table; // directed edges of the original graph
    const auto& pairs = t2.table;       // directed edges of tG = vertices of t2
    int m = pairs.size();

    std::vector<int> sig(m), dsig(m);
    for (int a = 0; a < m; ++a) {
        sig[a] = pairs.sigma[a];
        int u = pairs.pi[a], v = pairs.pi_plus[a];
        dsig[a] = pairs.index_of(inner.sigma[u], inner.sigma[v]);
    }

    r.sigma_involution = r.dsigma_involution = r.commute = r.composite_rule_ok = true;
    for (int a = 0; a < m; ++a) {
        if (sig[sig[a]] != a) r.sigma_involution = false;
        if (dsig[dsig[a]] != a) r.dsigma_involution = false;
        if (sig[dsig[a]] != dsig[sig[a]]) r.commute = false;
        // ij/kl -> lk/ji under the composite
        int u = pairs.pi[a], v = pairs.pi_plus[a];
        int c = sig[dsig[a]];
        if (pairs.pi[c] != inner.sigma[v] || pairs.pi_plus[c] != inner.sigma[u])
            r.composite_rule_ok = false;
    }

    r.sigma_hom = r.dsigma_hom = true;
    for (auto [a, b] : t2.graph.edges) {
        if (!t2.graph.has_edge(sig[a], sig[b])) {
            r.sigma_hom = false;
            if (r.witness.empty()) r.witness = "sigma breaks t2-edge";
        }
        if (!t2.graph.has_edge(dsig[a], dsig[b])) {
            r.dsigma_hom = false;
            if (r.witness.empty()) r.witness = "dsigma breaks t2-edge";
        }
    }
    return r;
}

struct FiberReport {
    std::vector<int> members;                    // outer indices a with pi(pi(a)) = i
    std::vector<std::pair<int, std::vector<int>>> by_inner;  // grouped by w = pi(a)
    std::vector<std::pair<int, std::vector<int>>> by_dpi;    // grouped by u = dpi(a)
    bool consistent = false;
};

// The fiber over a base vertex i of the second complete tangent graph,
// indexed three ways: directly, by the inner base edge, and by dpi.
inline FiberReport fiber_decomposition(const IteratedTable& it, int i) {
    if (it.flavor != Flavor::t_tau)
        throw error(errc::wrong_flavor, "fiber_decomposition expects t_tau");
    const Graph& g = it.inner.base;
    if (i < 0 || i >= g.n) throw error(errc::vertex_out_of_range, "fiber vertex out of range");

    FiberReport r;
    std::set<int> direct, via_inner, via_dpi;
    std::map<int, std::vector<int>> groups_w, groups_u;
    for (int a = 0; a < it.outer.size(); ++a) {
        int w = it.outer.pi[a];
        if (it.inner.pi[w] == i) {
            direct.insert(a);
            groups_w[w].push_back(a);
        }
        // dpi(a) = (pi(w), pi(v)) where v = pi_plus(a)
        int v = it.outer.pi_plus[a];
        int du_tail = it.inner.pi[w], du_head = it.inner.pi[v];
        if (du_tail == i) {
            via_dpi.insert(a);
            groups_u[it.inner.index_of(du_tail, du_head)].push_back(a);
        }
    }
    for (auto& [w, idxs] : groups_w) {
        via_inner.insert(idxs.begin(), idxs.end());
        r.by_inner.emplace_back(w, idxs);
    }
    for (auto& [u, idxs] : groups_u) r.by_dpi.emplace_back(u, idxs);
    r.members.assign(direct.begin(), direct.end());
    r.consistent = (direct == via_inner) && (direct == via_dpi);
    return r;
}

inline FiberReport fiber_decomposition(const TangentGraph& tt, int i) {
    if (tt.flavor != Flavor::t_tau)
        throw error(errc::wrong_flavor, "fiber_decomposition expects t_tau");
    IteratedTable it;
    it.flavor = Flavor::t_tau;
    it.inner = tt.inner_table;
    it.tangent = tt.table.base;
    it.outer = tt.table;
    it.decoration = tt.second_order;
    return fiber_decomposition(it, i);
}

inline std::string to_dot(const TangentGraph& tg) { return to_dot(tg.graph); }

} // namespace gbochner
