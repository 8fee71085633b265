#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace gbochner {

struct EigenResult {
    std::vector<double> values;               // ascending
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]
    double max_relative_residual = 0.0;       // max_k |A v - lambda v| / |v|
};

// Cyclic Jacobi iteration for a dense symmetric matrix. Plenty for the small
// matrices this project produces; residuals are checked against 1e-9.
inline EigenResult symmetric_eigen(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    EigenResult out;
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    auto offdiag = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
        return s;
    };

    double fro = offdiag();
    for (int i = 0; i < n; ++i) fro += a[i][i] * a[i][i];
    const double stop = fro * 1e-30 + 1e-300;

    for (int sweep = 0; sweep < 100 && offdiag() > stop; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (int k : order) {
        out.values.push_back(a[k][k]);
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = v[i][k];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

// Residual ||A v - lambda v|| / ||v|| per eigenpair, maximized.
inline double eigen_residual(const std::vector<std::vector<double>>& a, const EigenResult& e) {
    const int n = static_cast<int>(a.size());
    double worst = 0.0;
    for (size_t k = 0; k < e.values.size(); ++k) {
        double num = 0, den = 0;
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            for (int j = 0; j < n; ++j) acc += a[i][j] * e.vectors[k][j];
            acc -= e.values[k] * e.vectors[k][i];
            num += acc * acc;
            den += e.vectors[k][i] * e.vectors[k][i];
        }
        if (den > 0) worst = std::max(worst, std::sqrt(num / den));
    }
    return worst;
}

} // namespace gbochner
