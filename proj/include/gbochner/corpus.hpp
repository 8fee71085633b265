#pragma once

#include "gbochner/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

namespace gbochner {

// Minimum edge bitmask over all vertex relabelings; a full isomorphism
// canonical form for the tiny sizes used here (n <= 8).
inline std::uint64_t canonical_adjacency_key(const Graph& g) {
    if (g.n > 8) throw error(errc::dimension_mismatch, "canonical key limited to n <= 8");
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    auto pair_bit = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        // position of {i,j} in lexicographic pair order
        int idx = 0;
        for (int a = 0; a < i; ++a) idx += g.n - a - 1;
        idx += j - i - 1;
        return idx;
    };
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t key = 0;
        for (auto [i, j] : g.edges) key |= 1ull << pair_bit(perm[i], perm[j]);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool is_connected(const Graph& g) {
    return g.n == 0 ? false : connected_components(g).size() == 1;
}

// Every connected graph with n <= max_n, one representative per isomorphism
// class, ordered by (n, canonical key). For max_n = 5 this yields 31 graphs.
inline std::vector<Graph> small_connected_corpus(int max_n = 5) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<std::pair<std::uint64_t, Graph>> found;
        for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (size_t k = 0; k < pairs.size(); ++k)
                if ((mask >> k) & 1) edges.push_back(pairs[k]);
            Graph g = make_graph(n, std::move(edges));
            if (!is_connected(g)) continue;
            std::uint64_t key = canonical_adjacency_key(g);
            bool dup = false;
            for (auto& [k2, _] : found)
                if (k2 == key) { dup = true; break; }
            if (!dup) found.emplace_back(key, std::move(g));
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [_, g] : found) out.push_back(std::move(g));
    }
    return out;
}

inline int thread_cap() {
    if (const char* env = std::getenv("GB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Order-preserving parallel map; results are identical to the serial run
// regardless of the thread count.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F fn, int max_threads = thread_cap())
    -> std::vector<decltype(fn(items[0], size_t(0)))> {
    using R = decltype(fn(items[0], size_t(0)));
    std::vector<R> results(items.size());
    int nthreads = std::min<int>(max_threads, static_cast<int>(items.size()));
    if (nthreads <= 1) {
        for (size_t k = 0; k < items.size(); ++k) results[k] = fn(items[k], k);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (size_t k = next.fetch_add(1); k < items.size(); k = next.fetch_add(1))
                results[k] = fn(items[k], k);
        });
    for (auto& th : pool) th.join();
    return results;
}

} // namespace gbochner
