#pragma once

#include "gbochner/rational.hpp"
#include "gbochner/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbochner {

enum class errc {
    self_loop,
    duplicate_edge,
    malformed_line,
    dimension_mismatch,
    vertex_out_of_range,
    invalid_probability,
    unsupported_iteration,
    wrong_flavor,
    not_a_homomorphism,
    isolated_vertex,
    hypothesis_violated,
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

// Finite simple graph. Vertices are 0..n-1; edges are stored as sorted
// (i, j) pairs with i < j; neighbor lists are strictly increasing.
// Original input labels are kept for output only.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;
    std::vector<std::string> labels;

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int i, int j) const {
        if (i == j) return false;
        const auto& a = adjacency[i];
        return std::binary_search(a.begin(), a.end(), j);
    }

    const std::string& label(int v) const { return labels[v]; }
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list,
                        std::vector<std::string> labels = {}) {
    if (n < 0) throw error(errc::vertex_out_of_range, "negative vertex count");
    Graph g;
    g.n = n;
    for (auto& [i, j] : edge_list) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw error(errc::vertex_out_of_range, "edge endpoint out of range");
        if (i == j) throw error(errc::self_loop, "self-loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (size_t k = 1; k < edge_list.size(); ++k)
        if (edge_list[k] == edge_list[k - 1])
            throw error(errc::duplicate_edge, "duplicate edge (" + std::to_string(edge_list[k].first) +
                                                  "," + std::to_string(edge_list[k].second) + ")");
    g.edges = std::move(edge_list);
    g.adjacency.assign(n, {});
    for (auto [i, j] : g.edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    if (labels.empty()) {
        g.labels.reserve(n);
        for (int v = 0; v < n; ++v) g.labels.push_back(std::to_string(v));
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw error(errc::dimension_mismatch, "label count != vertex count");
        g.labels = std::move(labels);
    }
    return g;
}

// Edge-list text: two whitespace-separated tokens per line, '#' comments,
// blank lines ignored. Vertices are indexed by sorted label order; if every
// label is a decimal number the order is numeric.
inline Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != 2)
            throw error(errc::malformed_line,
                        "line " + std::to_string(lineno) + ": expected 2 tokens, got " +
                            std::to_string(tok.size()));
        if (tok[0] == tok[1])
            throw error(errc::self_loop, "line " + std::to_string(lineno) + ": self-loop '" + tok[0] + "'");
        raw.emplace_back(tok[0], tok[1]);
    }

    std::vector<std::string> names;
    for (auto& [a, b] : raw) { names.push_back(a); names.push_back(b); }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    bool numeric = !names.empty();
    for (const auto& s : names) {
        if (s.empty()) { numeric = false; break; }
        for (char c : s)
            if (c < '0' || c > '9') { numeric = false; break; }
        if (!numeric) break;
    }
    if (numeric) {
        std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
    }

    std::map<std::string, int> index;
    for (size_t k = 0; k < names.size(); ++k) index[names[k]] = static_cast<int>(k);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto& [a, b] : raw) edges.emplace_back(index[a], index[b]);
    const int n = static_cast<int>(names.size());
    return make_graph(n, std::move(edges), std::move(names));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    return d;
}

// A f(i) = sum over neighbors j of f(j).
inline std::vector<Rational> adjacency_apply(const Graph& g, const std::vector<Rational>& f) {
    if (static_cast<int>(f.size()) != g.n)
        throw error(errc::dimension_mismatch, "adjacency_apply: field length != n");
    std::vector<Rational> out(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j : g.adjacency[i]) out[i] += f[j];
    return out;
}

inline std::vector<long long> adjacency_apply(const Graph& g, const std::vector<long long>& f) {
    if (static_cast<int>(f.size()) != g.n)
        throw error(errc::dimension_mismatch, "adjacency_apply: field length != n");
    std::vector<long long> out(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j : g.adjacency[i]) out[i] += f[j];
    return out;
}

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.n) throw error(errc::vertex_out_of_range, "bfs source out of range");
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.adjacency[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return dist;
}

// Shortest walk length; nullopt when unreachable.
inline std::optional<int> walk_distance(const Graph& g, int i, int j) {
    if (i < 0 || i >= g.n || j < 0 || j >= g.n)
        throw error(errc::vertex_out_of_range, "walk_distance endpoint out of range");
    int d = bfs_distances(g, i)[j];
    if (d < 0) return std::nullopt;
    return d;
}

// Components as maximal connected vertex sets, ordered by least member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = true;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            comp.push_back(x);
            for (int y : g.adjacency[x])
                if (!seen[y]) {
                    seen[y] = true;
                    q.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> id(g.n, -1);
    auto comps = connected_components(g);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) id[v] = static_cast<int>(c);
    return id;
}

struct VertexMap {
    int domain_size = 0;
    std::vector<int> image;

    int operator()(int v) const { return image[v]; }
};

inline VertexMap identity_map(int n) {
    VertexMap m;
    m.domain_size = n;
    m.image.resize(n);
    for (int v = 0; v < n; ++v) m.image[v] = v;
    return m;
}

// g after h: (g*h)(v) = g(h(v)).
inline VertexMap compose(const VertexMap& g, const VertexMap& h) {
    VertexMap m;
    m.domain_size = h.domain_size;
    m.image.reserve(h.image.size());
    for (int v : h.image) m.image.push_back(g.image[v]);
    return m;
}

// Every edge of H must map to an edge of K; collapsed edges fail.
inline bool is_homomorphism(const VertexMap& h, const Graph& H, const Graph& K) {
    if (h.domain_size != H.n || static_cast<int>(h.image.size()) != H.n)
        throw error(errc::dimension_mismatch, "vertex map does not match domain");
    for (int v : h.image)
        if (v < 0 || v >= K.n) throw error(errc::dimension_mismatch, "vertex map image out of range");
    for (auto [i, j] : H.edges)
        if (!K.has_edge(h.image[i], h.image[j])) return false;
    return true;
}

// Erdos-Renyi G(n, p) with a SplitMix64 stream; pairs are visited in
// lexicographic order, so (n, p, seed) pins the edge set exactly.
inline Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
    if (p.sign() < 0 || p > Rational(1))
        throw error(errc::invalid_probability, "edge probability outside [0,1]");
    SplitMix64 rng(seed);
    const BigInt two64 = BigInt(1) << 64;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            BigInt r = rng.next();
            // include iff r / 2^64 < p, compared exactly
            if (r * p.denominator() < p.numerator() * two64) edges.emplace_back(i, j);
        }
    return make_graph(n, std::move(edges));
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string to_dot(const Graph& g) {
    std::string out = "graph {\n";
    for (int v = 0; v < g.n; ++v) out += "  " + dot_quote(g.label(v)) + ";\n";
    for (auto [i, j] : g.edges)
        out += "  " + dot_quote(g.label(i)) + " -- " + dot_quote(g.label(j)) + ";\n";
    out += "}\n";
    return out;
}

} // namespace gbochner
