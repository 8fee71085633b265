#pragma once

#include "gbochner/fields.hpp"
#include "gbochner/linop.hpp"
#include "gbochner/tangent.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gbochner {

// d, pi, pi+, gradient, divergence and Laplacian of one graph, materialized
// as sparse integer matrices in the canonical directed-edge order.
//
// Sign conventions used throughout:
//   d phi(u)   = phi(head) - phi(tail)
//   Div X(i)   = sum over tail(u)=i of X(reversed u) - X(u)
//   Lap        = Div grad;  Lap phi(i) = -2 sum over tail(u)=i of d phi(u),
// so Lap has diagonal 2 deg(i), off-diagonal -2 on edges, and is positive
// semidefinite. The factor 2 relative to the usual combinatorial Laplacian
// is deliberate and every constant downstream depends on it.
struct OperatorSuite {
    Graph g;
    DirectedEdgeTable table;
    LinOp d;            // C(G)  -> C(tG)
    LinOp pi_push;      // C(tG) -> C(G)
    LinOp pi_plus_push; // C(tG) -> C(G)
    LinOp grad;         // same matrix as d, viewed on X(G)
    LinOp div;          // pi_plus_push - pi_push
    LinOp lap;          // div . grad
};

inline OperatorSuite build_operators(const Graph& g, const std::string& base_label = "C(G)",
                                     const std::string& tangent_label = "C(tG)") {
    OperatorSuite s;
    s.g = g;
    s.table = build_directed_edges(g);
    SpaceRef base{base_label, g.n};
    SpaceRef tang{tangent_label, s.table.size()};

    s.d = LinOp(base, tang);
    s.pi_push = LinOp(tang, base);
    s.pi_plus_push = LinOp(tang, base);
    for (int u = 0; u < s.table.size(); ++u) {
        s.d.add(u, s.table.pi_plus[u], 1);
        s.d.add(u, s.table.pi[u], -1);
        s.pi_push.add(s.table.pi[u], u, 1);
        s.pi_plus_push.add(s.table.pi_plus[u], u, 1);
    }
    s.d.finish();
    s.pi_push.finish();
    s.pi_plus_push.finish();
    s.grad = s.d;
    s.div = s.pi_plus_push - s.pi_push;
    s.lap = s.div * s.grad;
    return s;
}

// Operator suite of a tangent graph, acting on X(G) through the
// C(tG) = X(G) identification.
struct LiftedSuite {
    TangentGraph tg;
    OperatorSuite ops;
};

inline LiftedSuite lifted_suite(const Graph& g, Flavor flavor) {
    if (flavor != Flavor::t && flavor != Flavor::tau)
        throw error(errc::wrong_flavor, "lifted_suite expects t or tau");
    LiftedSuite ls;
    ls.tg = build_tangent(g, flavor);
    const bool is_t = flavor == Flavor::t;
    ls.ops = build_operators(ls.tg.graph, is_t ? "C(tG)" : "C(tauG)",
                             is_t ? "C(t2G)" : "C(ttauG)");
    return ls;
}

// --- elementwise evaluations ------------------------------------------------

inline std::vector<Rational> d_apply(const DirectedEdgeTable& t, const std::vector<Rational>& phi) {
    require_len(phi.size(), t.base.n, "d_apply");
    std::vector<Rational> out;
    out.reserve(t.size());
    for (int u = 0; u < t.size(); ++u) out.push_back(phi[t.pi_plus[u]] - phi[t.pi[u]]);
    return out;
}

inline std::vector<Rational> pi_push_apply(const DirectedEdgeTable& t,
                                           const std::vector<Rational>& f) {
    require_len(f.size(), t.size(), "pi_push_apply");
    std::vector<Rational> out(t.base.n);
    for (int u = 0; u < t.size(); ++u) out[t.pi[u]] += f[u];
    return out;
}

inline std::vector<Rational> div_apply(const DirectedEdgeTable& t, const std::vector<Rational>& X) {
    require_len(X.size(), t.size(), "div_apply");
    std::vector<Rational> out(t.base.n);
    for (int u = 0; u < t.size(); ++u) out[t.pi[u]] += X[t.sigma[u]] - X[u];
    return out;
}

// X phi(i) = sum over tail(u)=i of X(u) d phi(u); equals pi(X : grad phi).
inline std::vector<Rational> field_apply(const DirectedEdgeTable& t, const VectorField& X,
                                         const std::vector<Rational>& phi) {
    require_len(X.values.size(), t.size(), "field_apply X");
    require_len(phi.size(), t.base.n, "field_apply phi");
    std::vector<Rational> out(t.base.n);
    for (int u = 0; u < t.size(); ++u)
        out[t.pi[u]] += X.values[u] * (phi[t.pi_plus[u]] - phi[t.pi[u]]);
    return out;
}

// First-order operator of an integer vector field:
//   L(i, head(u)) += X(u), L(i, i) -= X(u) for each u with tail i.
inline LinOp operator_of_field(const DirectedEdgeTable& t, const VectorField& X,
                               const std::string& label = "C(G)") {
    require_len(X.values.size(), t.size(), "operator_of_field");
    SpaceRef base{label, t.base.n};
    LinOp L(base, base);
    for (int u = 0; u < t.size(); ++u) {
        const Rational& x = X.values[u];
        if (!x.is_integer())
            throw std::invalid_argument("operator_of_field needs integer coefficients");
        long long v = static_cast<long long>(x.numerator());
        L.add(t.pi[u], t.pi_plus[u], v);
        L.add(t.pi[u], t.pi[u], -v);
    }
    L.finish();
    return L;
}

// --- verification helpers ----------------------------------------------------

struct AdjointnessReport {
    bool transpose_equal = false; // div == grad^T as integer matrices
    bool all_exact = false;       // every random pairing agreed exactly
    Rational max_deviation;      // largest |<d phi, f> - <phi, (pi+ - pi) f>|
    int trials = 0;
};

inline AdjointnessReport check_adjointness(const OperatorSuite& s, int trials,
                                           std::uint64_t seed) {
    AdjointnessReport r;
    r.trials = trials;
    r.transpose_equal = (s.div == s.grad.transpose());
    r.all_exact = true;
    SplitMix64 rng(seed);
    for (int k = 0; k < trials; ++k) {
        auto phi = random_scalar(s.g.n, rng);
        auto f = random_scalar(s.table.size(), rng);
        Rational lhs, rhs;
        auto dphi = s.d.apply(phi);
        for (int u = 0; u < s.table.size(); ++u) lhs += dphi[u] * f[u];
        auto divf = s.div.apply(f);
        for (int i = 0; i < s.g.n; ++i) rhs += phi[i] * divf[i];
        Rational dev = lhs - rhs;
        if (dev.sign() < 0) dev = -dev;
        if (dev > r.max_deviation) r.max_deviation = dev;
        if (!(lhs == rhs)) r.all_exact = false;
    }
    return r;
}

struct HarmonicReport {
    bool harmonic = false;
    bool locally_constant = false;
    bool biconditional_ok = false;
    std::pair<int, int> witness{-1, -1}; // an edge where phi differs, when any
};

inline HarmonicReport harmonic_check(const OperatorSuite& s, const std::vector<Rational>& phi) {
    require_len(phi.size(), s.g.n, "harmonic_check");
    HarmonicReport r;
    auto lphi = s.lap.apply(phi);
    r.harmonic = true;
    for (const auto& v : lphi)
        if (!v.is_zero()) { r.harmonic = false; break; }
    r.locally_constant = true;
    for (auto [i, j] : s.g.edges)
        if (phi[i] != phi[j]) {
            r.locally_constant = false;
            r.witness = {i, j};
            break;
        }
    r.biconditional_ok = (r.harmonic == r.locally_constant);
    return r;
}

// Componentwise annihilation: every row sums to zero within each component.
inline bool annihilates_local_constants(const LinOp& L, const Graph& g) {
    auto comp = component_ids(g);
    std::vector<std::vector<long long>> sums(g.n, std::vector<long long>());
    int nc = 0;
    for (int c : comp) nc = std::max(nc, c + 1);
    std::vector<std::vector<long long>> rowcomp(g.n, std::vector<long long>(nc, 0));
    for (auto [r, c, v] : L.entries()) rowcomp[r][comp[c]] += v;
    for (int r = 0; r < g.n; ++r)
        for (long long s : rowcomp[r])
            if (s != 0) return false;
    return true;
}

struct FieldOfOperator {
    std::optional<VectorField> field; // engaged iff L is first order
    std::string witness;              // why not, otherwise
};

// The bijection between vector fields and first-order operators:
// X(u) = L(tail(u), head(u)).
inline FieldOfOperator field_operator_bijection(const LinOp& L, const Graph& g) {
    FieldOfOperator out;
    if (L.domain().dim != g.n || L.codomain().dim != g.n)
        throw error(errc::dimension_mismatch, "operator is not an endomorphism of C(G)");
    if (!annihilates_local_constants(L, g)) {
        out.witness = "does not annihilate locally constant functions";
        return out;
    }
    for (auto [r, c, v] : L.entries()) {
        if (r == c) continue;
        if (!g.has_edge(r, c)) {
            out.witness = "entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") lies at distance > 1";
            return out;
        }
    }
    DirectedEdgeTable t = build_directed_edges(g);
    VectorField X;
    X.values.reserve(t.size());
    for (int u = 0; u < t.size(); ++u) X.values.emplace_back(L.entry(t.pi[u], t.pi_plus[u]));
    out.field = std::move(X);
    return out;
}

// Smallest k with L(i,j) = 0 whenever d(i,j) > k, or nullopt when L is not a
// differential operator (fails annihilation, or reaches across components).
inline std::optional<int> diffop_order(const LinOp& L, const Graph& g) {
    if (L.domain().dim != g.n || L.codomain().dim != g.n)
        throw error(errc::dimension_mismatch, "operator is not an endomorphism of C(G)");
    if (!annihilates_local_constants(L, g)) return std::nullopt;
    int k = 0;
    std::vector<std::vector<int>> dist(g.n);
    for (auto [r, c, v] : L.entries()) {
        if (dist[r].empty()) dist[r] = bfs_distances(g, r);
        int d = dist[r][c];
        if (d < 0) return std::nullopt; // unreachable entry
        k = std::max(k, d);
    }
    return k;
}

struct ProductRuleReport {
    bool edgewise_ok = false;   // d(phi psi) = phi(tail) d psi + psi(tail) d phi + d phi d psi
    bool gradient_ok = false;   // same identity phrased with field algebra
    bool quadratic_ok = false;  // X(phi psi) = phi X psi + psi X phi + pi(X : dphi : dpsi)
    bool laplacian_ok = false;  // Lap(phi^2) = 2 phi Lap phi - 2 |grad phi|^2 fiberwise
    int trials = 0;
    std::string witness;

    bool all_ok() const { return edgewise_ok && gradient_ok && quadratic_ok && laplacian_ok; }
};

inline ProductRuleReport product_rule_check(const Graph& g, int trials, std::uint64_t seed) {
    ProductRuleReport r;
    r.trials = trials;
    r.edgewise_ok = r.gradient_ok = r.quadratic_ok = r.laplacian_ok = true;
    OperatorSuite s = build_operators(g);
    const auto& t = s.table;
    SplitMix64 rng(seed);
    for (int k = 0; k < trials; ++k) {
        auto phi = random_scalar(g.n, rng);
        auto psi = random_scalar(g.n, rng);
        VectorField X = random_vector_field(t, rng);

        std::vector<Rational> prod(g.n);
        for (int i = 0; i < g.n; ++i) prod[i] = phi[i] * psi[i];
        auto dphi = d_apply(t, phi), dpsi = d_apply(t, psi), dprod = d_apply(t, prod);

        for (int u = 0; u < t.size(); ++u) {
            Rational rhs = phi[t.pi[u]] * dpsi[u] + psi[t.pi[u]] * dphi[u] + dphi[u] * dpsi[u];
            if (dprod[u] != rhs) {
                r.edgewise_ok = false;
                if (r.witness.empty()) r.witness = "edgewise rule fails at " + t.name(u);
            }
        }

        VectorField gphi{dphi}, gpsi{dpsi};
        VectorField rhs_field = hadamard(gphi, gpsi);
        {
            VectorField a = scalar_mul(t, phi, gpsi), b = scalar_mul(t, psi, gphi);
            for (int u = 0; u < t.size(); ++u) {
                Rational v = a.values[u] + b.values[u] + rhs_field.values[u];
                if (dprod[u] != v) {
                    r.gradient_ok = false;
                    if (r.witness.empty()) r.witness = "gradient rule fails at " + t.name(u);
                }
            }
        }

        auto Xprod = field_apply(t, X, prod);
        auto Xphi = field_apply(t, X, phi);
        auto Xpsi = field_apply(t, X, psi);
        auto cross = pi_push_apply(t, hadamard(X, hadamard(gphi, gpsi)).values);
        for (int i = 0; i < g.n; ++i) {
            Rational rhs = phi[i] * Xpsi[i] + psi[i] * Xphi[i] + cross[i];
            if (Xprod[i] != rhs) {
                r.quadratic_ok = false;
                if (r.witness.empty()) r.witness = "quadratic rule fails at vertex " + g.label(i);
            }
        }

        std::vector<Rational> sq(g.n);
        for (int i = 0; i < g.n; ++i) sq[i] = phi[i] * phi[i];
        auto lap_sq = s.lap.apply(sq);
        auto lap_phi = s.lap.apply(phi);
        std::vector<Rational> norm(g.n);
        for (int u = 0; u < t.size(); ++u) norm[t.pi[u]] += dphi[u] * dphi[u];
        for (int i = 0; i < g.n; ++i) {
            Rational rhs = Rational(2) * phi[i] * lap_phi[i] - Rational(2) * norm[i];
            if (lap_sq[i] != rhs) {
                r.laplacian_ok = false;
                if (r.witness.empty()) r.witness = "square rule fails at vertex " + g.label(i);
            }
        }
    }
    return r;
}

// D(u) = deg(head) + deg(tail); D_A(u) = Adeg(head) + Adeg(tail). Both even
// under reversal.
inline std::pair<VectorField, VectorField> deg_fields(const Graph& g) {
    DirectedEdgeTable t = build_directed_edges(g);
    std::vector<long long> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<long long> adeg = adjacency_apply(g, deg);
    VectorField D, DA;
    D.values.reserve(t.size());
    DA.values.reserve(t.size());
    for (int u = 0; u < t.size(); ++u) {
        D.values.emplace_back(deg[t.pi_plus[u]] + deg[t.pi[u]]);
        DA.values.emplace_back(adeg[t.pi_plus[u]] + adeg[t.pi[u]]);
    }
    return {std::move(D), std::move(DA)};
}

struct ThirdOrderReport {
    bool t_closed_form_ok = false;   // Div Lap_t grad = Lap^2 - 4 Lap - 4 D
    bool intermediate_ok = false;    // Lap_t grad phi(u) = d Lap phi(u) + (2D(u)-4) d phi(u)
    bool tau_adeg_form_ok = false;   // Div Lap_tau grad = -1/4 Lap(Adeg Lap^2) + 1/2 Lap(deg Adeg Lap) - 2 D_A
    bool tau_deg_form_ok = false;    // Div Lap_tau grad = 1/4 Lap^3 - 1/2 Lap(deg Lap) - 2 D_A
    std::string witness;
};

// Closed forms for the two composite third-order operators. Two candidate
// closed forms are evaluated for the tau composite; the deg-weighted one
// reproduces it exactly, the Adeg-weighted one is a different operator and
// fails already on a single edge.
inline ThirdOrderReport third_order_check(const Graph& g, const std::vector<Rational>& phi) {
    require_len(phi.size(), g.n, "third_order_check");
    ThirdOrderReport r;
    OperatorSuite s = build_operators(g);
    const auto& t = s.table;
    LiftedSuite lt = lifted_suite(g, Flavor::t);
    LiftedSuite ltau = lifted_suite(g, Flavor::tau);

    auto [D, DA] = deg_fields(g);
    std::vector<long long> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<long long> adeg = adjacency_apply(g, deg);

    auto dphi = d_apply(t, phi);
    auto l1 = s.lap.apply(phi);
    auto l2 = s.lap.apply(l1);
    auto l3 = s.lap.apply(l2);

    // (t) composite and its intermediate form
    auto lt_dphi = lt.ops.lap.apply(dphi);
    auto lhs_t = s.div.apply(lt_dphi);
    auto Dphi = field_apply(t, D, phi);
    r.t_closed_form_ok = true;
    for (int i = 0; i < g.n; ++i) {
        Rational rhs = l2[i] - Rational(4) * l1[i] - Rational(4) * Dphi[i];
        if (lhs_t[i] != rhs) {
            r.t_closed_form_ok = false;
            if (r.witness.empty()) r.witness = "t closed form fails at vertex " + g.label(i);
        }
    }
    auto dl1 = d_apply(t, l1);
    r.intermediate_ok = true;
    for (int u = 0; u < t.size(); ++u) {
        Rational rhs = dl1[u] + (Rational(2) * D.values[u] - Rational(4)) * dphi[u];
        if (lt_dphi[u] != rhs) {
            r.intermediate_ok = false;
            if (r.witness.empty()) r.witness = "intermediate form fails at " + t.name(u);
        }
    }

    // (tau) composite against both closed forms
    auto lhs_tau = s.div.apply(ltau.ops.lap.apply(dphi));
    auto DAphi = field_apply(t, DA, phi);

    std::vector<Rational> w1(g.n), w2(g.n), w3(g.n);
    for (int i = 0; i < g.n; ++i) {
        w1[i] = Rational(adeg[i]) * l2[i];
        w2[i] = Rational(deg[i] * adeg[i]) * l1[i];
        w3[i] = Rational(deg[i]) * l1[i];
    }
    auto lw1 = s.lap.apply(w1);
    auto lw2 = s.lap.apply(w2);
    auto lw3 = s.lap.apply(w3);

    r.tau_adeg_form_ok = true;
    r.tau_deg_form_ok = true;
    const Rational quarter(1, 4), half(1, 2);
    for (int i = 0; i < g.n; ++i) {
        Rational stated = -quarter * lw1[i] + half * lw2[i] - Rational(2) * DAphi[i];
        Rational corrected = quarter * l3[i] - half * lw3[i] - Rational(2) * DAphi[i];
        if (lhs_tau[i] != stated) {
            r.tau_adeg_form_ok = false;
            if (r.witness.empty()) r.witness = "tau Adeg form fails at vertex " + g.label(i);
        }
        if (lhs_tau[i] != corrected) {
            r.tau_deg_form_ok = false;
            if (r.witness.empty()) r.witness = "tau deg form fails at vertex " + g.label(i);
        }
    }
    return r;
}

// --- Hessians ----------------------------------------------------------------

// Second-difference section over the vertices of t2G or t tau G, fibered over
// base vertices.
struct SecondSection {
    Flavor flavor = Flavor::t_tau;
    std::vector<Rational> values;            // indexed like the outer table
    std::vector<std::vector<int>> fiber_index; // per base vertex
};

inline SecondSection hessian_from_table(const IteratedTable& it,
                                        const std::vector<Rational>& dphi) {
    require_len(dphi.size(), it.inner.size(), "hessian_from_table");
    SecondSection h;
    h.flavor = it.flavor;
    h.values.reserve(it.outer.size());
    h.fiber_index.assign(it.inner.base.n, {});
    for (int a = 0; a < it.outer.size(); ++a) {
        int u = it.outer.pi[a], v = it.outer.pi_plus[a];
        h.values.push_back(dphi[v] - dphi[u]);
        h.fiber_index[it.inner.pi[u]].push_back(a);
    }
    return h;
}

// d2 phi(a) = d phi(head(a)) - d phi(tail(a)).
inline SecondSection hessian(const Graph& g, const std::vector<Rational>& phi, Flavor flavor) {
    IteratedTable it = build_iterated_table(g, flavor);
    return hessian_from_table(it, d_apply(it.inner, phi));
}

// |Hess phi|^2(i) = sum over the fiber of a of d2 phi(a)^2.
inline std::vector<Rational> hessian_norm_sq(const SecondSection& h) {
    std::vector<Rational> out(h.fiber_index.size());
    for (size_t i = 0; i < h.fiber_index.size(); ++i)
        for (int a : h.fiber_index[i]) out[i] += h.values[a] * h.values[a];
    return out;
}

} // namespace gbochner
