#pragma once

#include "gbochner/graph.hpp"
#include "gbochner/rational.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gbochner {

struct SpaceRef {
    std::string label; // e.g. "C(G)", "C(tG)"
    int dim = 0;

    friend bool operator==(const SpaceRef& a, const SpaceRef& b) {
        return a.label == b.label && a.dim == b.dim;
    }
};

// Sparse integer matrix between labeled function spaces. Entries are kept
// sorted by (row, col) with at most one entry per position; application to a
// rational vector is exact.
class LinOp {
public:
    LinOp() = default;
    LinOp(SpaceRef domain, SpaceRef codomain) : dom_(std::move(domain)), cod_(std::move(codomain)) {}

    const SpaceRef& domain() const { return dom_; }
    const SpaceRef& codomain() const { return cod_; }
    const std::vector<std::tuple<int, int, long long>>& entries() const { return entries_; }

    void add(int row, int col, long long value) {
        if (row < 0 || row >= cod_.dim || col < 0 || col >= dom_.dim)
            throw error(errc::dimension_mismatch, "matrix entry out of bounds");
        if (value != 0) builder_[{row, col}] += value;
    }

    void finish() {
        entries_.clear();
        entries_.reserve(builder_.size());
        for (auto& [rc, v] : builder_)
            if (v != 0) entries_.emplace_back(rc.first, rc.second, v);
        builder_.clear();
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (static_cast<int>(x.size()) != dom_.dim)
            throw error(errc::dimension_mismatch,
                        "operator " + dom_.label + "->" + cod_.label + " applied to wrong length");
        std::vector<Rational> y(cod_.dim);
        for (auto [r, c, v] : entries_) y[r] += Rational(v) * x[c];
        return y;
    }

    std::vector<long long> apply(const std::vector<long long>& x) const {
        if (static_cast<int>(x.size()) != dom_.dim)
            throw error(errc::dimension_mismatch, "operator applied to wrong length");
        std::vector<long long> y(cod_.dim, 0);
        for (auto [r, c, v] : entries_) y[r] += v * x[c];
        return y;
    }

    LinOp transpose() const {
        LinOp t(cod_, dom_);
        for (auto [r, c, v] : entries_) t.add(c, r, v);
        t.finish();
        return t;
    }

    // Spaces are compared by dimension only: C(tG) and C(tauG) index the
    // same directed-edge set.
    friend LinOp operator*(const LinOp& a, const LinOp& b) {
        if (a.dom_.dim != b.cod_.dim)
            throw error(errc::dimension_mismatch, "operator composition dimension mismatch");
        LinOp p(b.dom_, a.cod_);
        // rows of b grouped by row index
        std::vector<std::vector<std::pair<int, long long>>> brows(b.cod_.dim);
        for (auto [r, c, v] : b.entries_) brows[r].emplace_back(c, v);
        for (auto [r, k, va] : a.entries_)
            for (auto [c, vb] : brows[k]) p.add(r, c, va * vb);
        p.finish();
        return p;
    }

    friend LinOp operator+(const LinOp& a, const LinOp& b) {
        if (a.dom_.dim != b.dom_.dim || a.cod_.dim != b.cod_.dim)
            throw error(errc::dimension_mismatch, "operator sum dimension mismatch");
        LinOp s(a.dom_, a.cod_);
        for (auto [r, c, v] : a.entries_) s.add(r, c, v);
        for (auto [r, c, v] : b.entries_) s.add(r, c, v);
        s.finish();
        return s;
    }

    friend LinOp operator-(const LinOp& a, const LinOp& b) { return a + b.scaled(-1); }

    LinOp scaled(long long f) const {
        LinOp s(dom_, cod_);
        for (auto [r, c, v] : entries_) s.add(r, c, v * f);
        s.finish();
        return s;
    }

    friend bool operator==(const LinOp& a, const LinOp& b) {
        return a.dom_.dim == b.dom_.dim && a.cod_.dim == b.cod_.dim && a.entries_ == b.entries_;
    }

    long long entry(int row, int col) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(),
                                   std::tuple<int, int, long long>{row, col, LLONG_MIN});
        if (it != entries_.end() && std::get<0>(*it) == row && std::get<1>(*it) == col)
            return std::get<2>(*it);
        return 0;
    }

    std::vector<long long> row_sums() const {
        std::vector<long long> s(cod_.dim, 0);
        for (auto [r, c, v] : entries_) s[r] += v;
        return s;
    }

    // header "row,col,value", rows sorted by (row, col)
    void to_csv(std::ostream& out) const {
        out << "row,col,value\n";
        for (auto [r, c, v] : entries_) out << r << ',' << c << ',' << v << '\n';
    }

    static LinOp diagonal(const SpaceRef& space, const std::vector<long long>& d) {
        LinOp m(space, space);
        for (int i = 0; i < space.dim; ++i) m.add(i, i, d[i]);
        m.finish();
        return m;
    }

private:
    SpaceRef dom_, cod_;
    std::map<std::pair<int, int>, long long> builder_;
    std::vector<std::tuple<int, int, long long>> entries_;
};

} // namespace gbochner
