#pragma once

#include "gbochner/rational.hpp"
#include "gbochner/rng.hpp"
#include "gbochner/tangent.hpp"

#include <string>
#include <vector>

namespace gbochner {

// Exact-rational function on the vertices of some carrier graph.
struct ScalarField {
    std::string space; // "C(G)", "C(tG)", ...
    std::vector<Rational> values;
};

// Exact-rational function on the directed edges of a base graph, i.e. an
// element of X(G) under the C(tG) identification. Indexing follows the
// canonical DirectedEdgeTable order.
struct VectorField {
    std::vector<Rational> values;
};

inline void require_len(size_t got, size_t want, const char* what) {
    if (got != want) throw error(errc::dimension_mismatch, std::string(what) + ": wrong length");
}

// (phi . X)(u) = phi(pi(u)) X(u)
inline VectorField scalar_mul(const DirectedEdgeTable& t, const std::vector<Rational>& phi,
                              const VectorField& X) {
    require_len(phi.size(), t.base.n, "scalar_mul phi");
    require_len(X.values.size(), t.size(), "scalar_mul X");
    VectorField out;
    out.values.reserve(t.size());
    for (int u = 0; u < t.size(); ++u) out.values.push_back(phi[t.pi[u]] * X.values[u]);
    return out;
}

// (X : Y)(u) = X(u) Y(u)
inline VectorField hadamard(const VectorField& X, const VectorField& Y) {
    require_len(Y.values.size(), X.values.size(), "hadamard");
    VectorField out;
    out.values.reserve(X.values.size());
    for (size_t u = 0; u < X.values.size(); ++u) out.values.push_back(X.values[u] * Y.values[u]);
    return out;
}

// Xbar(u) = X(sigma(u))
inline VectorField reversed(const DirectedEdgeTable& t, const VectorField& X) {
    require_len(X.values.size(), t.size(), "reversed");
    VectorField out;
    out.values.resize(t.size());
    for (int u = 0; u < t.size(); ++u) out.values[u] = X.values[t.sigma[u]];
    return out;
}

// Random integer-valued test fields in [-9, 9].
inline std::vector<Rational> random_scalar(int n, SplitMix64& rng) {
    std::vector<Rational> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.emplace_back(rng.next_int(-9, 9));
    return v;
}

inline VectorField random_vector_field(const DirectedEdgeTable& t, SplitMix64& rng) {
    VectorField X;
    X.values = random_scalar(t.size(), rng);
    return X;
}

} // namespace gbochner
