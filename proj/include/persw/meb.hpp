#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "persw/point_cloud.hpp"

namespace persw {

struct Ball {
    std::vector<double> center;
    double radius = -1.0;  // negative: no ball yet

    bool contains(const std::vector<double>& p, double slack) const {
        if (radius < 0) return false;
        return std::sqrt(squared_distance(center, p)) <= radius + slack;
    }
};

namespace detail {

/// Smallest ball with every support point on its boundary. The center lies
/// in the affine hull of the support; solving the Gram system
/// 2 (a_i . a_j) x_j = |a_i|^2 with a_i = r_i - r_0 gives it. Near-zero
/// pivots (affinely dependent support) drop the redundant constraint.
inline Ball circumball(const std::vector<const std::vector<double>*>& support) {
    Ball b;
    if (support.empty()) return b;
    const std::vector<double>& r0 = *support[0];
    const std::size_t dim = r0.size();
    if (support.size() == 1) {
        b.center = r0;
        b.radius = 0.0;
        return b;
    }
    const std::size_t k = support.size() - 1;
    std::vector<std::vector<double>> a(k, std::vector<double>(dim));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t d = 0; d < dim; ++d) a[i][d] = (*support[i + 1])[d] - r0[d];

    // Gram system with augmented right-hand side
    std::vector<std::vector<double>> g(k, std::vector<double>(k + 1, 0.0));
    double scale = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double dot = 0;
            for (std::size_t d = 0; d < dim; ++d) dot += a[i][d] * a[j][d];
            g[i][j] = 2.0 * dot;
            scale = std::max(scale, std::abs(g[i][j]));
        }
        double nrm = 0;
        for (std::size_t d = 0; d < dim; ++d) nrm += a[i][d] * a[i][d];
        g[i][k] = nrm;
    }

    std::vector<double> x(k, 0.0);
    std::vector<bool> used_row(k, false);
    std::vector<std::size_t> pivot_row(k, 0);
    std::vector<bool> solved_col(k, false);
    const double tol = 1e-12 * (scale > 0 ? scale : 1.0);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t best = k;
        double best_abs = tol;
        for (std::size_t row = 0; row < k; ++row) {
            if (used_row[row]) continue;
            if (std::abs(g[row][col]) > best_abs) {
                best_abs = std::abs(g[row][col]);
                best = row;
            }
        }
        if (best == k) continue;  // dependent direction
        used_row[best] = true;
        pivot_row[col] = best;
        solved_col[col] = true;
        for (std::size_t row = 0; row < k; ++row) {
            if (row == best || std::abs(g[row][col]) <= 0) continue;
            const double f = g[row][col] / g[best][col];
            for (std::size_t j = 0; j <= k; ++j) g[row][j] -= f * g[best][j];
        }
    }
    for (std::size_t col = 0; col < k; ++col)
        if (solved_col[col]) {
            double v = g[pivot_row[col]][k];
            for (std::size_t j = 0; j < k; ++j)
                if (j != col) v -= g[pivot_row[col]][j] * x[j];
            x[col] = v / g[pivot_row[col]][col];
        }

    b.center = r0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t d = 0; d < dim; ++d) b.center[d] += x[i] * a[i][d];
    b.radius = std::sqrt(squared_distance(b.center, r0));
    return b;
}

inline Ball welzl(const std::vector<const std::vector<double>*>& pts, std::size_t n,
                  std::vector<const std::vector<double>*>& support, std::size_t dim) {
    if (n == 0 || support.size() == dim + 1) return circumball(support);
    Ball b = welzl(pts, n - 1, support, dim);
    const std::vector<double>& p = *pts[n - 1];
    const double slack = 1e-12 * (1.0 + (b.radius > 0 ? b.radius : 0.0));
    if (b.contains(p, slack)) return b;
    support.push_back(&p);
    b = welzl(pts, n - 1, support, dim);
    support.pop_back();
    return b;
}

}  // namespace detail

inline Ball min_enclosing_ball(const std::vector<std::vector<double>>& points) {
    if (points.empty())
        throw std::invalid_argument("min_enclosing_ball: need at least one point");
    std::vector<const std::vector<double>*> ptrs;
    ptrs.reserve(points.size());
    for (const auto& p : points) ptrs.push_back(&p);
    std::vector<const std::vector<double>*> support;
    return detail::welzl(ptrs, ptrs.size(), support, points.front().size());
}

/// Radius of the smallest enclosing ball; the entry scale of the dual
/// simplex in a Cech filtration.
inline double meb_radius(const std::vector<std::vector<double>>& points) {
    return min_enclosing_ball(points).radius;
}

/// Variant over indices into a point cloud, used by the filtration builder.
inline Ball min_enclosing_ball(const PointCloud& pc, const std::vector<int>& idxs) {
    if (idxs.empty())
        throw std::invalid_argument("min_enclosing_ball: need at least one point");
    std::vector<const std::vector<double>*> ptrs;
    ptrs.reserve(idxs.size());
    for (int i : idxs) ptrs.push_back(&pc.points[static_cast<std::size_t>(i)]);
    std::vector<const std::vector<double>*> support;
    return detail::welzl(ptrs, ptrs.size(), support, pc.points.front().size());
}

}  // namespace persw
