#pragma once

#include "gbochner/bochner.hpp"
#include "gbochner/cubical.hpp"
#include "gbochner/operators.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace gbochner {

struct CheckOutcome {
    std::string suite;
    std::string graph_id;
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> failures; // (check, witness)
    long long elapsed_ms = 0;
};

namespace detail {

inline std::string field_str(const std::vector<Rational>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

struct OutcomeBuilder {
    CheckOutcome out;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    OutcomeBuilder(std::string suite, std::string graph_id) {
        out.suite = std::move(suite);
        out.graph_id = std::move(graph_id);
    }

    void require(bool ok, const std::string& check, const std::string& witness = "") {
        if (!ok) {
            out.passed = false;
            out.failures.emplace_back(check, witness);
        }
    }

    CheckOutcome finish() {
        out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return std::move(out);
    }
};

} // namespace detail

inline CheckOutcome check_counting(const Graph& g, const std::string& id) {
    detail::OutcomeBuilder b("counting", id);
    CountingReport r = verify_counting(g);
    b.require(r.vertex_count_ok, "vertex_count", r.witness);
    b.require(r.t_degree_ok, "t_degree_formula", r.witness);
    b.require(r.tau_degree_ok, "tau_degree_formula", r.witness);
    b.require(r.t_edge_formula_ok, "t_edge_count_formula", r.witness);
    b.require(r.tau_edge_formula_ok, "tau_edge_count_formula", r.witness);
    return b.finish();
}

inline CheckOutcome check_extremal(const Graph& g, const std::string& id, int trials,
                                   std::uint64_t seed) {
    detail::OutcomeBuilder b("extremal", id);
    ExtremalReport r = verify_extremal(g);
    b.require(r.gstar_equals_t, "seed_set_equals_t", r.witness);
    b.require(r.sigma_t_hom, "sigma_hom_t", r.witness);
    b.require(r.pi_t_hom, "pi_hom_t", r.witness);
    b.require(r.pi_tau_hom, "pi_hom_tau", r.witness);
    b.require(r.tau_is_maximal_pi_hom, "tau_maximal_for_pi", r.witness);
    b.require(r.tau_section_generated, "tau_section_generated", r.witness);
    b.require(r.t_subset_tau, "t_subset_tau", r.witness);
    b.require(r.equality_iff_star, "equality_iff_componentwise_star", r.witness);

    bool isolated = false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) isolated = true;
    if (!isolated && g.n > 0) {
        TangentGraph tau = build_tangent(g, Flavor::tau);
        auto sections = sample_sections(g, std::min(trials, 20), seed);
        for (const auto& s : sections)
            b.require(is_homomorphism(s, g, tau.graph), "section_hom_into_tau");
    }

    if (g.edge_count() > 0) {
        TangentGraph tg = build_tangent(g, Flavor::t);
        TangentGraph t2 = iterate_tangent(tg);
        const auto& dec = orientation_classify(t2);
        const auto& t = tg.table;
        std::vector<int> refl(t.size(), 0), fwd(t.size(), 0), bwd(t.size(), 0);
        for (const auto& d : dec) {
            if (d.motion == Motion::reflection) ++refl[d.u];
            else if (d.motion == Motion::forward) ++fwd[d.u];
            else ++bwd[d.u];
        }
        bool counts_ok = true;
        for (int u = 0; u < t.size(); ++u)
            if (refl[u] != 1 || fwd[u] != g.degree(t.pi_plus[u]) - 1 ||
                bwd[u] != g.degree(t.pi[u]) - 1)
                counts_ok = false;
        b.require(counts_ok, "orientation_class_counts");

        GroupActionReport ga = group_action_check(t2);
        b.require(ga.all_ok(), "z2xz2_action", ga.witness);

        IteratedTable ttau = build_iterated_table(g, Flavor::t_tau);
        bool fibers_ok = true;
        for (int i = 0; i < g.n; ++i)
            if (!fiber_decomposition(ttau, i).consistent) fibers_ok = false;
        b.require(fibers_ok, "fiber_decomposition");
    }
    return b.finish();
}

inline CheckOutcome check_cubical(const Graph& g, const std::string& id) {
    detail::OutcomeBuilder b("cubical", id);
    TangentGraph tg = build_tangent(g, Flavor::t);
    try {
        CubicalComplex cx = build_cubical(tg);
        b.require(cx.dd_zero, "boundary_squares_to_zero");
        b.require(cx.rank_exact, "rank_exactness",
                  "rank b1 + rank b2 = " + std::to_string(cx.rank_boundary1) + "+" +
                      std::to_string(cx.rank_boundary2) + " != |E_tG| = " +
                      std::to_string(cx.edge_count) + " (H1 dimension " +
                      std::to_string(cx.h1_dim) + ")");
        LambdaReport lr = lambda_line_graph(tg);
        b.require(lr.match, "lambda_is_line_graph");
    } catch (const error& e) {
        if (e.kind() != errc::hypothesis_violated) throw;
        b.require(false, "hypothesis", e.what());
    }
    return b.finish();
}

inline CheckOutcome check_calculus(const Graph& g, const std::string& id, int trials,
                                   std::uint64_t seed) {
    detail::OutcomeBuilder b("calculus", id);
    OperatorSuite s = build_operators(g);

    b.require(s.lap == s.div * s.grad, "lap_is_div_grad");
    bool diag_ok = true;
    for (int i = 0; i < g.n; ++i)
        if (s.lap.entry(i, i) != 2 * g.degree(i)) diag_ok = false;
    for (auto [i, j] : g.edges)
        if (s.lap.entry(i, j) != -2 || s.lap.entry(j, i) != -2) diag_ok = false;
    b.require(diag_ok, "lap_coefficients");
    bool rows_zero = true;
    for (long long rs : s.lap.row_sums())
        if (rs != 0) rows_zero = false;
    b.require(rows_zero, "lap_annihilates_constants");

    AdjointnessReport adj = check_adjointness(s, trials, seed);
    b.require(adj.transpose_equal, "div_is_grad_transpose");
    b.require(adj.all_exact, "adjointness_exact", "max deviation " + adj.max_deviation.str());

    ProductRuleReport pr = product_rule_check(g, trials, seed + 1);
    b.require(pr.edgewise_ok, "product_rule_edgewise", pr.witness);
    b.require(pr.gradient_ok, "product_rule_gradient", pr.witness);
    b.require(pr.quadratic_ok, "product_rule_quadratic", pr.witness);
    b.require(pr.laplacian_ok, "product_rule_square", pr.witness);

    SplitMix64 rng(seed + 2);
    auto phi = random_scalar(g.n, rng);
    HarmonicReport hr = harmonic_check(s, phi);
    b.require(hr.biconditional_ok, "harmonic_iff_locally_constant");
    std::vector<Rational> ones(g.n, Rational(1));
    b.require(harmonic_check(s, ones).harmonic, "constants_harmonic");

    if (g.n > 0) {
        VectorField X = random_vector_field(s.table, rng);
        LinOp L = operator_of_field(s.table, X);
        auto round = field_operator_bijection(L, g);
        b.require(round.field.has_value() && round.field->values == X.values,
                  "field_operator_roundtrip", round.witness);
        auto lap_field = field_operator_bijection(s.lap, g);
        bool lap_is_minus_two = lap_field.field.has_value();
        if (lap_is_minus_two)
            for (const auto& v : lap_field.field->values)
                if (v != Rational(-2)) lap_is_minus_two = false;
        b.require(lap_is_minus_two, "lap_is_constant_field_minus_two");
        auto order = diffop_order(s.lap, g);
        b.require(order.has_value() && *order == (g.edge_count() ? 1 : 0), "lap_first_order");
    }
    return b.finish();
}

inline CheckOutcome check_prop37(const Graph& g, const std::string& id, int trials,
                                 std::uint64_t seed) {
    detail::OutcomeBuilder b("prop37", id);
    for (int k = 0; k < trials; ++k) {
        SplitMix64 rng(seed + k);
        auto phi = random_scalar(g.n, rng);
        ThirdOrderReport r = third_order_check(g, phi);
        b.require(r.t_closed_form_ok, "t_composite_closed_form", r.witness);
        b.require(r.intermediate_ok, "t_composite_intermediate", r.witness);
        b.require(r.tau_adeg_form_ok, "tau_composite_adeg_form",
                  r.witness + (r.tau_deg_form_ok ? " [deg-weighted form holds]" : ""));
        if (!r.tau_deg_form_ok)
            b.require(false, "tau_composite_deg_form", r.witness);
    }
    return b.finish();
}

inline CheckOutcome check_bochner(const Graph& g, const std::string& id, int trials,
                                  std::uint64_t seed) {
    detail::OutcomeBuilder b("bochner", id);
    BochnerContext ctx = make_bochner_context(g);
    for (int k = 0; k < trials; ++k) {
        SplitMix64 rng(seed + k);
        auto phi = random_scalar(g.n, rng);
        BochnerReport r = bochner_terms(ctx, phi);
        b.require(r.residual_zero(), "residual_zero",
                  "residual " + detail::field_str(r.residual) +
                      (r.weighted_residual_zero() ? " [tau-weighted identity holds]" : ""));
        b.require(r.change_of_variables_ok, "change_of_variables");
        b.require(r.product_step_ok, "tau_product_step");
        if (!r.weighted_residual_zero())
            b.require(false, "weighted_residual_zero",
                      detail::field_str(r.residual_weighted));
    }
    return b.finish();
}

inline CheckOutcome check_gamma2(const Graph& g, const std::string& id, int trials,
                                 std::uint64_t seed) {
    detail::OutcomeBuilder b("gamma2", id);
    BochnerContext ctx = make_bochner_context(g);
    for (int k = 0; k < trials; ++k) {
        SplitMix64 rng(seed + k);
        auto phi = random_scalar(g.n, rng);
        auto psi = random_scalar(g.n, rng);
        b.require(gamma(ctx.base, phi, psi).matches_gradient_form, "gamma_gradient_form");
        Gamma2Equivalence eq = gamma2_equivalence(ctx, phi);
        b.require(eq.strict_ok, "gamma2_equals_minus_hess_minus_B",
                  "residual " + detail::field_str(eq.strict_residual) +
                      (eq.weighted_ok ? " [tau-weighted form holds]" : ""));
        if (!eq.weighted_ok) b.require(false, "gamma2_weighted_form");
    }
    return b.finish();
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"counting", "extremal", "cubical", "calculus",
                                                   "prop37",   "bochner",  "gamma2"};
    return names;
}

inline CheckOutcome run_suite(const std::string& suite, const Graph& g, const std::string& id,
                              int trials, std::uint64_t seed) {
    if (suite == "counting") return check_counting(g, id);
    if (suite == "extremal") return check_extremal(g, id, trials, seed);
    if (suite == "cubical") return check_cubical(g, id);
    if (suite == "calculus") return check_calculus(g, id, trials, seed);
    if (suite == "prop37") return check_prop37(g, id, trials, seed);
    if (suite == "bochner") return check_bochner(g, id, trials, seed);
    if (suite == "gamma2") return check_gamma2(g, id, trials, seed);
    throw error(errc::wrong_flavor, "unknown suite '" + suite + "'");
}

} // namespace gbochner
