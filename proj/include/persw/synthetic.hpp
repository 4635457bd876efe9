#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "persw/point_cloud.hpp"

namespace persw {

/// Jittered-grid samples of the standard Klein bottle embedding in R^4,
///   ((a + b cos v) cos u, (a + b cos v) sin u,
///    b sin v cos(u/2),   b sin v sin(u/2)),
/// which identifies (u, v) with (u + 2pi, -v). The grid keeps the coverage
/// radius small at modest counts; the jitter is seeded and bounded by a
/// fraction of a grid cell.
inline PointCloud sample_klein_bottle_r4(std::size_t count, std::uint64_t seed,
                                         double a = 2.0, double b = 1.0,
                                         double jitter = 0.2) {
    PointCloud pc;
    if (count == 0) return pc;
    const double tau = 2.0 * std::numbers::pi;
    std::size_t gu = static_cast<std::size_t>(
        std::llround(std::sqrt(static_cast<double>(count) * (a + b) / b)));
    gu = std::min(std::max<std::size_t>(gu, 1), count);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    const double du = tau / static_cast<double>(gu);
    // exact count: spread the remainder so every row spans the full v-range
    const std::size_t base = count / gu, extra = count % gu;
    for (std::size_t i = 0; i < gu; ++i) {
        const std::size_t row = base + (i < extra ? 1 : 0);
        const double dv = tau / static_cast<double>(row);
        for (std::size_t j = 0; j < row; ++j) {
            const double u = (static_cast<double>(i) + jitter * unit(rng)) * du;
            const double v = (static_cast<double>(j) + jitter * unit(rng)) * dv;
            const double w = a + b * std::cos(v);
            pc.points.push_back({w * std::cos(u), w * std::sin(u),
                                 b * std::sin(v) * std::cos(u / 2.0),
                                 b * std::sin(v) * std::sin(u / 2.0)});
        }
    }
    return pc;
}

/// Jittered-grid samples of the torus of revolution in R^3.
inline PointCloud sample_torus_r3(std::size_t count, std::uint64_t seed, double a = 2.0,
                                  double b = 1.0, double jitter = 0.2) {
    PointCloud pc;
    if (count == 0) return pc;
    const double tau = 2.0 * std::numbers::pi;
    std::size_t gu = static_cast<std::size_t>(
        std::llround(std::sqrt(static_cast<double>(count) * (a + b) / b)));
    gu = std::min(std::max<std::size_t>(gu, 1), count);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    const double du = tau / static_cast<double>(gu);
    const std::size_t base = count / gu, extra = count % gu;
    for (std::size_t i = 0; i < gu; ++i) {
        const std::size_t row = base + (i < extra ? 1 : 0);
        const double dv = tau / static_cast<double>(row);
        for (std::size_t j = 0; j < row; ++j) {
            const double u = (static_cast<double>(i) + jitter * unit(rng)) * du;
            const double v = (static_cast<double>(j) + jitter * unit(rng)) * dv;
            const double w = a + b * std::cos(v);
            pc.points.push_back({w * std::cos(u), w * std::sin(u), b * std::sin(v)});
        }
    }
    return pc;
}

/// Fibonacci-lattice samples of the round 2-sphere, with seeded jitter.
inline PointCloud sample_sphere_r3(std::size_t count, std::uint64_t seed,
                                   double radius = 1.0, double jitter = 0.05) {
    PointCloud pc;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
        const double fi = static_cast<double>(i);
        double z = 1.0 - (2.0 * fi + 1.0) / static_cast<double>(count);
        z = std::clamp(z + jitter * unit(rng) / static_cast<double>(count), -1.0, 1.0);
        const double phi = golden * fi + jitter * unit(rng);
        const double rho = std::sqrt(1.0 - z * z);
        pc.points.push_back(
            {radius * rho * std::cos(phi), radius * rho * std::sin(phi), radius * z});
    }
    return pc;
}

}  // namespace persw
