#pragma once

// Reference implementations used as oracles. Everything here works from raw
// edge lists with plain loops and deliberately avoids the library's tables,
// operator matrices and tangent builders, so agreement is meaningful.

#include "gbochner/graph.hpp"
#include "gbochner/rational.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using gbochner::Graph;
using gbochner::Rational;

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return gbochner::make_graph(n, std::move(e));
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return gbochner::make_graph(n, std::move(e));
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return gbochner::make_graph(leaves + 1, std::move(e));
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return gbochner::make_graph(n, std::move(e));
}

inline Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return gbochner::make_graph(10, std::move(e));
}

// Directed edges as sorted (tail, head) pairs, built with no table machinery.
inline std::vector<std::pair<int, int>> directed_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : g.edges) {
        out.emplace_back(i, j);
        out.emplace_back(j, i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::set<std::pair<int, int>> edge_set(const Graph& g) {
    return {g.edges.begin(), g.edges.end()};
}

// Tangent edges straight from the adjacency predicates, O(m^2).
inline std::vector<std::pair<int, int>> naive_tangent_edges(const Graph& g, bool complete_flavor) {
    auto de = directed_edges(g);
    auto base = edge_set(g);
    std::vector<std::pair<int, int>> out;
    for (size_t a = 0; a < de.size(); ++a)
        for (size_t b = a + 1; b < de.size(); ++b) {
            auto [i, j] = de[a];
            auto [k, l] = de[b];
            bool adj = complete_flavor
                           ? base.count({std::min(i, k), std::max(i, k)}) > 0
                           : (j == k || i == l);
            if (adj) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return out;
}

inline std::vector<Rational> naive_lap(const Graph& g, const std::vector<Rational>& phi) {
    std::vector<Rational> out(g.n);
    for (int i = 0; i < g.n; ++i) {
        out[i] = Rational(2 * g.degree(i)) * phi[i];
        for (int j : g.adjacency[i]) out[i] -= Rational(2) * phi[j];
    }
    return out;
}

struct NaiveBochner {
    std::vector<Rational> lhs;       // 1/2 Lap |grad phi|^2
    std::vector<Rational> term_grad; // <grad Lap phi, grad phi>_i
    std::vector<Rational> term_hess;
    std::vector<Rational> term_B;
    std::vector<Rational> residual;
    std::vector<Rational> lhs_weighted;
};

// Every term of the curvature identity by direct summation over raw pair
// lists.
inline NaiveBochner naive_bochner(const Graph& g, const std::vector<Rational>& phi) {
    auto de = directed_edges(g);
    auto base = edge_set(g);
    const int m = static_cast<int>(de.size());
    auto dphi = [&](int u) { return phi[de[u].second] - phi[de[u].first]; };
    auto tau_adjacent = [&](int u, int v) {
        if (u == v) return false;
        int a = de[u].first, b = de[v].first;
        return base.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    NaiveBochner r;
    std::vector<Rational> norm(g.n);
    for (int u = 0; u < m; ++u) norm[de[u].first] += dphi(u) * dphi(u);

    auto lap_norm = naive_lap(g, norm);
    const Rational half(1, 2);
    for (int i = 0; i < g.n; ++i) r.lhs.push_back(half * lap_norm[i]);

    auto lap_phi = naive_lap(g, phi);
    r.term_grad.assign(g.n, Rational());
    for (int u = 0; u < m; ++u)
        r.term_grad[de[u].first] += (lap_phi[de[u].second] - lap_phi[de[u].first]) * dphi(u);

    // Hessian over directed edges of tau: ordered pairs (u, v), tau-adjacent
    r.term_hess.assign(g.n, Rational());
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (tau_adjacent(u, v)) {
                Rational d2 = dphi(v) - dphi(u);
                r.term_hess[de[u].first] += d2 * d2;
            }

    // Lap_tau applied to a function f on directed edges
    auto lap_tau = [&](auto f) {
        std::vector<Rational> out(m);
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v)
                if (tau_adjacent(u, v)) out[u] += Rational(2) * (f(u) - f(v));
        return out;
    };
    auto lt_dphi = lap_tau(dphi);

    // grad Div of grad phi = d(Lap phi)
    r.term_B.assign(g.n, Rational());
    for (int u = 0; u < m; ++u) {
        Rational gd = lap_phi[de[u].second] - lap_phi[de[u].first];
        r.term_B[de[u].first] += dphi(u) * (lt_dphi[u] - gd);
    }
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (tau_adjacent(u, v)) {
                Rational da = dphi(v) - dphi(u);
                r.term_B[de[u].first] -= Rational(2) * da * da;
            }

    for (int i = 0; i < g.n; ++i)
        r.residual.push_back(r.lhs[i] - r.term_grad[i] - r.term_hess[i] - r.term_B[i]);

    auto lt_sq = lap_tau([&](int u) { return dphi(u) * dphi(u); });
    r.lhs_weighted.assign(g.n, Rational());
    for (int u = 0; u < m; ++u) r.lhs_weighted[de[u].first] += half * lt_sq[u];
    return r;
}

// (deg - Adeg) |grad phi|^2 + (deg - 1) A |grad phi|^2, the analytic value of
// the residual above.
inline std::vector<Rational> degree_defect(const Graph& g, const std::vector<Rational>& phi) {
    auto de = directed_edges(g);
    std::vector<Rational> norm(g.n);
    for (auto [i, j] : de) norm[i] += (phi[j] - phi[i]) * (phi[j] - phi[i]);
    std::vector<Rational> out(g.n);
    for (int i = 0; i < g.n; ++i) {
        long long adeg = 0;
        Rational an;
        for (int j : g.adjacency[i]) {
            adeg += g.degree(j);
            an += norm[j];
        }
        out[i] = Rational(g.degree(i) - adeg) * norm[i] + Rational(g.degree(i) - 1) * an;
    }
    return out;
}

inline std::vector<Rational> to_rationals(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

} // namespace oracle
