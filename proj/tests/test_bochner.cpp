#include "testutil.hpp"

#include "gbochner/bochner.hpp"
#include "gbochner/corpus.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gbochner;

namespace {
std::vector<Rational> R(std::initializer_list<long long> xs) { return oracle::to_rationals(xs); }

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}
}

TEST_CASE("squared gradient norm") {
    CHECK(all_zero(grad_norm_sq(oracle::cycle(4), std::vector<Rational>(4, Rational(3)))));
    CHECK(grad_norm_sq(oracle::cycle(3), R({1, 0, 0})) == R({2, 1, 1}));
    CHECK(grad_norm_sq(oracle::complete(2), R({0, 1})) == R({1, 1}));
}

TEST_CASE("curvature form pointwise") {
    SECTION("zero fields give zero") {
        BochnerContext c = make_bochner_context(oracle::cycle(3));
        VectorField zero;
        zero.values.assign(6, Rational(0));
        CHECK(all_zero(b_pointwise(c, zero, zero)));
    }
    SECTION("symmetry in the two arguments") {
        Graph g = random_graph(8, Rational(1, 2), 13);
        BochnerContext c = make_bochner_context(g);
        SplitMix64 rng(13);
        VectorField X = random_vector_field(c.table(), rng);
        VectorField Y = random_vector_field(c.table(), rng);
        CHECK(b_pointwise(c, X, Y) == b_pointwise(c, Y, X));
    }
    SECTION("on a single edge the identity closes, so B is lhs minus the rest") {
        Graph k2 = oracle::complete(2);
        BochnerContext c = make_bochner_context(k2);
        BochnerReport r = bochner_terms(c, R({0, 1}));
        for (int i = 0; i < 2; ++i)
            CHECK(r.term_B[i] == r.lhs[i] - r.term_grad[i] - r.term_hess[i]);
        CHECK(r.residual_zero());
    }
}

TEST_CASE("curvature identity terms on the triangle indicator") {
    // Every value below is pinned by the independent raw-loop oracle; the
    // unweighted residual is nonzero and equals the degree defect.
    Graph c3 = oracle::cycle(3);
    auto phi = R({1, 0, 0});
    BochnerReport r = bochner_terms(c3, phi);

    CHECK(r.lhs == R({2, -1, -1}));
    CHECK(r.term_grad == R({12, 6, 6}));
    CHECK(r.term_hess == R({20, 12, 12}));
    CHECK(r.term_B == R({-28, -20, -20}));
    CHECK(r.residual == R({-2, 1, 1}));
    CHECK(r.lhs_weighted == R({4, -2, -2}));
    CHECK(r.weighted_residual_zero());
    CHECK_FALSE(r.residual_zero());
    CHECK_FALSE(r.change_of_variables_ok);
    CHECK(r.product_step_ok);

    oracle::NaiveBochner nb = oracle::naive_bochner(c3, phi);
    CHECK(nb.lhs == r.lhs);
    CHECK(nb.term_grad == r.term_grad);
    CHECK(nb.term_hess == r.term_hess);
    CHECK(nb.term_B == r.term_B);
    CHECK(nb.residual == r.residual);
    CHECK(nb.lhs_weighted == r.lhs_weighted);
    CHECK(oracle::degree_defect(c3, phi) == r.residual);
}

TEST_CASE("curvature identity scaling and zero cases") {
    Graph g = random_graph(7, Rational(1, 2), 33);
    BochnerContext c = make_bochner_context(g);
    SECTION("constants") {
        BochnerReport r = bochner_terms(c, std::vector<Rational>(g.n, Rational(4)));
        CHECK(all_zero(r.lhs));
        CHECK(all_zero(r.term_grad));
        CHECK(all_zero(r.term_hess));
        CHECK(all_zero(r.term_B));
        CHECK(r.residual_zero());
        CHECK(r.weighted_residual_zero());
    }
    SECTION("every term is quadratic in the field") {
        SplitMix64 rng(33);
        auto phi = random_scalar(g.n, rng);
        std::vector<Rational> scaled(phi);
        const Rational k(5, 2);
        for (auto& v : scaled) v *= k;
        BochnerReport a = bochner_terms(c, phi);
        BochnerReport b = bochner_terms(c, scaled);
        for (int i = 0; i < g.n; ++i) {
            CHECK(b.lhs[i] == k * k * a.lhs[i]);
            CHECK(b.term_grad[i] == k * k * a.term_grad[i]);
            CHECK(b.term_hess[i] == k * k * a.term_hess[i]);
            CHECK(b.term_B[i] == k * k * a.term_B[i]);
            CHECK(b.residual[i] == k * k * a.residual[i]);
        }
    }
}

TEST_CASE("residual structure across the corpus") {
    SplitMix64 seeds(1234);
    SECTION("library terms match the raw-loop oracle") {
        std::vector<Graph> graphs = {oracle::cycle(4), oracle::star(4), oracle::path(5),
                                     random_graph(7, Rational(1, 2), 51),
                                     random_graph(8, Rational(1, 3), 52)};
        for (const Graph& g : graphs) {
            BochnerContext c = make_bochner_context(g);
            SplitMix64 rng(seeds.next());
            for (int k = 0; k < 3; ++k) {
                auto phi = random_scalar(g.n, rng);
                BochnerReport r = bochner_terms(c, phi);
                oracle::NaiveBochner nb = oracle::naive_bochner(g, phi);
                REQUIRE(nb.lhs == r.lhs);
                REQUIRE(nb.term_grad == r.term_grad);
                REQUIRE(nb.term_hess == r.term_hess);
                REQUIRE(nb.term_B == r.term_B);
                REQUIRE(nb.lhs_weighted == r.lhs_weighted);
            }
        }
    }
    SECTION("the unweighted residual equals the degree defect everywhere") {
        for (const Graph& g : small_connected_corpus(5)) {
            BochnerContext c = make_bochner_context(g);
            SplitMix64 rng(g.n * 1000 + g.edge_count());
            for (int k = 0; k < 3; ++k) {
                auto phi = random_scalar(g.n, rng);
                BochnerReport r = bochner_terms(c, phi);
                REQUIRE(r.residual == oracle::degree_defect(g, phi));
                REQUIRE(r.weighted_residual_zero());
                REQUIRE(r.product_step_ok);
            }
        }
    }
    SECTION("the residual vanishes exactly on unions of single edges") {
        SplitMix64 rng(77);
        Graph matching = make_graph(6, {{0, 1}, {2, 3}, {4, 5}});
        BochnerContext c = make_bochner_context(matching);
        for (int k = 0; k < 5; ++k) {
            BochnerReport r = bochner_terms(c, random_scalar(6, rng));
            CHECK(r.residual_zero());
            CHECK(r.change_of_variables_ok);
        }
        Graph p3 = oracle::path(3);
        BochnerContext cp = make_bochner_context(p3);
        bool found_nonzero = false;
        for (int k = 0; k < 5; ++k)
            if (!bochner_terms(cp, random_scalar(3, rng)).residual_zero()) found_nonzero = true;
        CHECK(found_nonzero);
    }
    SECTION("residuals always sum to zero over the graph") {
        Graph g = random_graph(9, Rational(1, 2), 55);
        BochnerContext c = make_bochner_context(g);
        SplitMix64 rng(55);
        for (int k = 0; k < 3; ++k) {
            BochnerReport r = bochner_terms(c, random_scalar(g.n, rng));
            Rational total;
            for (const auto& v : r.residual) total += v;
            CHECK(total == Rational(0));
        }
    }
}

TEST_CASE("integrated curvature form") {
    Graph g = random_graph(10, Rational(1, 3), 8);
    BochnerContext c = make_bochner_context(g);
    SplitMix64 rng(8);
    SECTION("zero field integrates to zero") {
        VectorField zero;
        zero.values.assign(c.table().size(), Rational(0));
        IntegratedB r = b_integrated(c, zero, zero);
        CHECK(r.pointwise_sum == Rational(0));
        CHECK(r.equal);
        CHECK(r.operator_identity_ok);
    }
    SECTION("two evaluation routes agree and the form is symmetric") {
        for (int k = 0; k < 5; ++k) {
            VectorField X = random_vector_field(c.table(), rng);
            VectorField Y = random_vector_field(c.table(), rng);
            IntegratedB r = b_integrated(c, X, Y);
            CHECK(r.equal);
            CHECK(r.operator_identity_ok);
            IntegratedB rt = b_integrated(c, Y, X);
            CHECK(rt.pointwise_sum == r.pointwise_sum);
        }
    }
}

TEST_CASE("curvature matrix") {
    SECTION("descends from the bilinear form: triple agreement") {
        for (const Graph& g : {oracle::cycle(3), oracle::complete(2),
                               random_graph(6, Rational(1, 2), 13)}) {
            BochnerContext c = make_bochner_context(g);
            CurvatureMatrix bm = b_matrix(g);
            CHECK(bm.symmetric());
            CHECK(bm.annihilates_local_constants());
            SplitMix64 rng(101);
            for (int k = 0; k < 20; ++k) {
                auto phi = random_scalar(g.n, rng);
                auto psi = random_scalar(g.n, rng);
                VectorField X{d_apply(c.table(), phi)};
                VectorField Y{d_apply(c.table(), psi)};
                Rational pointwise;
                for (const auto& v : b_pointwise(c, X, Y)) pointwise += v;
                CHECK(bm.quadratic_form(phi, psi) == pointwise);
                CHECK(b_integrated(c, X, Y).inner_product == pointwise);
            }
        }
    }
    SECTION("kills locally constant functions") {
        Graph g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
        CurvatureMatrix bm = b_matrix(g);
        CHECK(bm.annihilates_local_constants());
        std::vector<Rational> locally_const = R({7, 7, 7, -3, -3});
        for (int i = 0; i < g.n; ++i) {
            Rational acc;
            for (int j = 0; j < g.n; ++j) acc += bm.m[i][j] * locally_const[j];
            CHECK(acc == Rational(0));
        }
    }
    SECTION("the Adeg-weighted closed form is a different operator") {
        // already on a single edge the diagonal disagrees: -8 vs -16
        CurvatureMatrix plain = b_matrix(oracle::complete(2));
        CurvatureMatrix decorated = b_matrix_adeg_form(oracle::complete(2));
        CHECK(plain.m[0][0] == Rational(-16));
        CHECK(decorated.m[0][0] == Rational(-8));
        CHECK(plain.m != decorated.m);

        Graph c3 = oracle::cycle(3);
        BochnerContext c = make_bochner_context(c3);
        CurvatureMatrix bad = b_matrix_adeg_form(c3);
        SplitMix64 rng(103);
        bool disagreement = false;
        for (int k = 0; k < 5; ++k) {
            auto phi = random_scalar(3, rng);
            auto psi = random_scalar(3, rng);
            VectorField X{d_apply(c.table(), phi)};
            VectorField Y{d_apply(c.table(), psi)};
            Rational pointwise;
            for (const auto& v : b_pointwise(c, X, Y)) pointwise += v;
            if (bad.quadratic_form(phi, psi) != pointwise) disagreement = true;
        }
        CHECK(disagreement);

        // on irregular graphs it is not even symmetric
        CHECK_FALSE(b_matrix_adeg_form(oracle::path(4)).symmetric());
        CHECK(b_matrix(oracle::path(4)).symmetric());
    }
}

TEST_CASE("carre du champ") {
    Graph k2 = oracle::complete(2);
    OperatorSuite s = build_operators(k2);
    SECTION("hand values on an edge") {
        GammaResult r = gamma(s, R({0, 1}), R({0, 1}));
        CHECK(r.values == R({-1, -1}));
        CHECK(r.matches_gradient_form);
    }
    SECTION("gamma against the gradient form and the norm") {
        Graph g = random_graph(8, Rational(1, 2), 105);
        OperatorSuite sg = build_operators(g);
        SplitMix64 rng(105);
        for (int k = 0; k < 5; ++k) {
            auto phi = random_scalar(g.n, rng);
            GammaResult r = gamma(sg, phi, phi);
            CHECK(r.matches_gradient_form);
            auto norm = grad_norm_sq(g, phi);
            for (int i = 0; i < g.n; ++i) CHECK(r.values[i] == -norm[i]);
        }
    }
    SECTION("gamma with a constant argument vanishes") {
        Graph g = oracle::cycle(4);
        OperatorSuite sg = build_operators(g);
        SplitMix64 rng(9);
        auto psi = random_scalar(4, rng);
        GammaResult r = gamma(sg, std::vector<Rational>(4, Rational(1)), psi);
        CHECK(all_zero(r.values));
    }
}

TEST_CASE("gamma2 equivalence") {
    SECTION("constants give zero") {
        Graph g = oracle::cycle(3);
        OperatorSuite s = build_operators(g);
        CHECK(all_zero(gamma2(s, std::vector<Rational>(3, Rational(2)),
                              std::vector<Rational>(3, Rational(2)))));
    }
    SECTION("the strict equivalence fails on the triangle, pinned residual") {
        Graph c3 = oracle::cycle(3);
        BochnerContext c = make_bochner_context(c3);
        Gamma2Equivalence eq = gamma2_equivalence(c, R({1, 0, 0}));
        CHECK_FALSE(eq.strict_ok);
        CHECK(eq.weighted_ok);
        // Gamma2 - (-hess - B) = lhs_weighted - lhs, the defect with flipped sign
        CHECK(eq.strict_residual == R({2, -1, -1}));
    }
    SECTION("strict equivalence does hold on a single edge") {
        Graph k2 = oracle::complete(2);
        BochnerContext c = make_bochner_context(k2);
        Gamma2Equivalence eq = gamma2_equivalence(c, R({0, 1}));
        CHECK(eq.strict_ok);
        CHECK(eq.weighted_ok);
    }
    SECTION("weighted form holds on random graphs") {
        Graph g = random_graph(12, Rational(1, 3), 10);
        BochnerContext c = make_bochner_context(g);
        SplitMix64 rng(10);
        for (int k = 0; k < 20; ++k) {
            Gamma2Equivalence eq = gamma2_equivalence(c, random_scalar(g.n, rng));
            CHECK(eq.weighted_ok);
        }
    }
}

TEST_CASE("curvature spectrum") {
    SECTION("edgeless graph has the zero matrix") {
        Graph g = make_graph(3, {});
        SpectrumResult s = curvature_spectrum(b_matrix(g));
        REQUIRE(s.eigenvalues.size() == 3);
        for (double x : s.eigenvalues) CHECK(x == 0.0);
    }
    SECTION("trace identity and kernel on the triangle") {
        CurvatureMatrix bm = b_matrix(oracle::cycle(3));
        SpectrumResult s = curvature_spectrum(bm);
        REQUIRE(s.eigenvalues.size() == 3);
        double sum = 0;
        for (double x : s.eigenvalues) sum += x;
        CHECK(std::fabs(sum - bm.trace().to_double()) <= 1e-9 * (1 + std::fabs(sum)));
        double nearest_zero = 1e300;
        for (double x : s.eigenvalues) nearest_zero = std::min(nearest_zero, std::fabs(x));
        CHECK(nearest_zero <= 1e-9);
        CHECK(s.max_relative_residual <= 1e-9);
    }
    SECTION("known two by two matrix") {
        EigenResult e = symmetric_eigen({{2, 1}, {1, 2}});
        REQUIRE(e.values.size() == 2);
        CHECK(std::fabs(e.values[0] - 1.0) < 1e-12);
        CHECK(std::fabs(e.values[1] - 3.0) < 1e-12);
    }
    SECTION("random graph spectrum is finite and accurate") {
        CurvatureMatrix bm = b_matrix(random_graph(9, Rational(1, 2), 107));
        SpectrumResult s = curvature_spectrum(bm);
        CHECK(s.max_relative_residual <= 1e-9);
        for (size_t k = 1; k < s.eigenvalues.size(); ++k)
            CHECK(s.eigenvalues[k - 1] <= s.eigenvalues[k]);
    }
}
