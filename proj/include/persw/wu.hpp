#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "persw/ops.hpp"
#include "persw/persistence.hpp"

namespace persw {

enum class WuStatus { unique, absent_none, absent_multiple };

/// The k-th Wu class of type n: the unique degree-k class v with
/// v cup x = Sq^k(x) for every class x of degree n-k. Uniqueness is part of
/// the definition; absence (no solution, or several) is an ordinary outcome
/// on spaces that are not homotopy equivalent to a closed n-manifold.
struct WuClass {
    int type_n = 0;
    int k = 0;
    Cochain representative;
    bool unique = true;
};

struct EndpointCheck {
    std::size_t bar = 0;   // index into the classes sequence
    int degree = 0;        // degree of that bar
    Scale endpoint = 0.0;  // scale at which the Wu criterion was checked
    bool passed = false;
};

/// Wu and Stiefel-Whitney classes of type n at a scale or over an interval,
/// with per-endpoint criterion checks in the persistent case.
struct SWReport {
    int type_n = 0;
    Scale window_start = 0.0;
    Scale window_end = 0.0;
    bool persistent = false;
    bool valid = false;

    std::vector<WuClass> wu;                        // k = 0..n when valid
    std::vector<Cochain> sw;                        // k = 1..n (index k-1)
    std::vector<bool> sw_nontrivial;                // parallel to sw
    std::vector<std::vector<std::size_t>> sw_bars;  // constituent bar ids per k

    std::vector<EndpointCheck> endpoint_checks;

    int failed_k = -1;  // first missing or non-unique Wu degree, -1 if none
    WuStatus failed_status = WuStatus::unique;

    // advisory: degrees whose Betti number changes inside the window
    std::vector<int> betti_unstable_degrees;
};

namespace detail {

struct WuSolve {
    WuStatus status = WuStatus::absent_none;
    Cochain representative;
};

/// Solve the Wu criterion as a Z/2 linear system in the coefficients of v
/// over the degree-k basis. Each condition "v cup x_i ~ Sq^k(x_i)" is
/// expressed in coordinates with respect to the degree-n basis, with
/// coboundary unknowns eliminated by class_coordinates.
inline WuSolve wu_class_from_bases(const FilteredComplex& fc, Scale r, int n, int k,
                                   const std::vector<Cochain>& basis_k,
                                   const std::vector<Cochain>& basis_nk,
                                   const std::vector<Cochain>& basis_n,
                                   int threads = 1) {
    if (k < 0 || k > n) throw std::invalid_argument("wu_class: require 0 <= k <= n");
    if (k == 0) return WuSolve{WuStatus::unique, unit_cocycle(fc, r)};

    const std::size_t m = basis_k.size();
    const std::size_t d = basis_n.size();
    const std::size_t q = basis_nk.size();

    // rows: d coordinates per criterion condition; columns: lambda_j
    BitMatrix a(q * d, m);
    std::vector<std::uint8_t> b(q * d, 0);
    for (std::size_t i = 0; i < q; ++i) {
        const Cochain sq = steenrod_square(k, basis_nk[i], fc, threads);
        auto sq_coords = class_coordinates(sq, basis_n, fc);
        if (!sq_coords)
            throw std::runtime_error("wu_class: Sq^k of a basis cocycle is not a cocycle class");
        for (std::size_t t = 0; t < d; ++t) b[i * d + t] = (*sq_coords)[t];
        for (std::size_t j = 0; j < m; ++j) {
            const Cochain prod = cup_product(basis_k[j], basis_nk[i], fc);
            auto coords = class_coordinates(prod, basis_n, fc);
            if (!coords)
                throw std::runtime_error("wu_class: cup of basis cocycles is not a cocycle class");
            for (std::size_t t = 0; t < d; ++t)
                if ((*coords)[t]) a.set(i * d + t, j, true);
        }
    }

    BitMatrix aug(q * d, m + 1);
    for (std::size_t rrow = 0; rrow < q * d; ++rrow) {
        for (std::size_t j = 0; j < m; ++j)
            if (a.get(rrow, j)) aug.set(rrow, j, true);
        if (b[rrow]) aug.set(rrow, m, true);
    }
    RowReduction rr = row_reduce(std::move(aug));
    for (std::size_t pc : rr.pivot_columns)
        if (pc == m) return WuSolve{WuStatus::absent_none, {}};
    const std::size_t lambda_rank =
        rr.pivot_columns.size();  // no pivot in the b column, so all pivots are lambdas
    if (lambda_rank < m) return WuSolve{WuStatus::absent_multiple, {}};

    Cochain v{k, r, {}};
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        if (rr.reduced.get(i, m)) v = cochain_sum(v, basis_k[rr.pivot_columns[i]]);
    return WuSolve{WuStatus::unique, std::move(v)};
}

}  // namespace detail

/// Wu class of type n and degree k at scale r, from precomputed persistence
/// classes. Returns nullopt when no class or more than one class satisfies
/// the criterion.
inline std::optional<WuClass> wu_class(const FilteredComplex& fc, Scale r, int n, int k,
                                       const std::vector<PersistentClass>& classes,
                                       int threads = 1) {
    if (k < 0 || k > n) throw std::invalid_argument("wu_class: require 0 <= k <= n");
    ScaleBasis bk = basis_at_scale(classes, k, r, fc);
    ScaleBasis bnk = basis_at_scale(classes, n - k, r, fc);
    ScaleBasis bn = basis_at_scale(classes, n, r, fc);
    detail::WuSolve s =
        detail::wu_class_from_bases(fc, r, n, k, bk.cochains, bnk.cochains, bn.cochains,
                                    threads);
    if (s.status != WuStatus::unique) return std::nullopt;
    return WuClass{n, k, std::move(s.representative), true};
}

namespace detail {

inline void flag_unstable_betti(const FilteredComplex& fc,
                                const std::vector<PersistentClass>& classes, Scale s,
                                Scale t, int n, SWReport& report) {
    std::vector<Scale> probes{s, t};
    for (Scale sc : fc.scales())
        if (sc > s && sc < t) probes.push_back(sc);
    for (int p = 0; p <= n; ++p) {
        std::size_t first = 0;
        bool have = false, varies = false;
        for (Scale sc : probes) {
            std::size_t count = 0;
            for (const PersistentClass& cl : classes)
                if (cl.degree == p && cl.contains(sc)) ++count;
            if (!have) {
                first = count;
                have = true;
            } else if (count != first) {
                varies = true;
            }
        }
        if (varies) report.betti_unstable_degrees.push_back(p);
    }
}

inline SWReport sw_report(const FilteredComplex& fc, Scale s, Scale t, int n,
                          bool persistent, int threads,
                          const std::vector<PersistentClass>* precomputed) {
    if (n < 1) throw std::invalid_argument("type n must be at least 1");
    if (s > t) throw std::invalid_argument("interval start exceeds end");
    if (fc.empty() || fc.min_scale() > t)
        throw std::invalid_argument("complex is empty at the requested scale");

    SWReport report;
    report.type_n = n;
    report.window_start = s;
    report.window_end = t;
    report.persistent = persistent;

    std::vector<PersistentClass> own;
    if (!precomputed) own = persistent_cohomology(fc, n);
    const std::vector<PersistentClass>& classes = precomputed ? *precomputed : own;

    // Wu classes at the right end of the window
    for (int k = 0; k <= n; ++k) {
        ScaleBasis bk = basis_at_scale(classes, k, t, fc);
        ScaleBasis bnk = basis_at_scale(classes, n - k, t, fc);
        ScaleBasis bn = basis_at_scale(classes, n, t, fc);
        detail::WuSolve sv = detail::wu_class_from_bases(
            fc, t, n, k, bk.cochains, bnk.cochains, bn.cochains, threads);
        if (sv.status != WuStatus::unique) {
            report.failed_k = k;
            report.failed_status = sv.status;
            report.valid = false;
            if (persistent) flag_unstable_betti(fc, classes, s, t, n, report);
            return report;
        }
        report.wu.push_back(WuClass{n, k, std::move(sv.representative), true});
    }

    bool checks_ok = true;
    if (persistent) {
        // Wu criterion at the right endpoint of every bar dying inside the
        // window (bars alive at t are covered by the construction at t).
        std::vector<std::size_t> to_check;
        for (std::size_t l = 0; l < classes.size(); ++l) {
            const PersistentClass& cl = classes[l];
            if (cl.degree > n || cl.essential()) continue;
            if (cl.death <= s || cl.death > t) continue;
            to_check.push_back(l);
        }
        report.endpoint_checks.resize(to_check.size());
        parallel_chunks(to_check.size(), threads,
                        [&](std::size_t, std::size_t begin, std::size_t end) {
                            for (std::size_t i = begin; i < end; ++i) {
                                const PersistentClass& cl = classes[to_check[i]];
                                const int k = n - cl.degree;
                                const Scale rl = cl.representative.scale;  // last scale alive
                                Cochain x = cl.representative;
                                Cochain v = restrict_cochain(report.wu[k].representative, rl, fc);
                                Cochain lhs = cup_product(v, x, fc);
                                Cochain rhs = steenrod_square(k, x, fc);
                                const bool ok = is_cohomologous(lhs, rhs, fc);
                                report.endpoint_checks[i] =
                                    EndpointCheck{to_check[i], cl.degree, rl, ok};
                            }
                        });
        for (const EndpointCheck& ec : report.endpoint_checks)
            if (!ec.passed) checks_ok = false;
        flag_unstable_betti(fc, classes, s, t, n, report);
    }

    // Wu formula: w_k = sum over i+j=k of Sq^i(v_j)
    for (int k = 1; k <= n; ++k) {
        Cochain w{k, t, {}};
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            w = cochain_sum(w, steenrod_square(i, report.wu[j].representative, fc, threads));
        }
        const bool nontrivial = !is_coboundary(w, fc);
        std::vector<std::size_t> bars;
        if (nontrivial) {
            ScaleBasis basis = basis_at_scale(classes, k, t, fc);
            auto coords = class_coordinates(w, basis.cochains, fc);
            if (!coords)
                throw std::runtime_error("sw class is not expressible in the scale basis");
            for (std::size_t j = 0; j < coords->size(); ++j)
                if ((*coords)[j]) bars.push_back(basis.class_ids[j]);
        }
        report.sw.push_back(std::move(w));
        report.sw_nontrivial.push_back(nontrivial);
        report.sw_bars.push_back(std::move(bars));
    }

    report.valid = checks_ok;
    return report;
}

}  // namespace detail

/// Stiefel-Whitney classes of type n at a fixed scale. The overloads taking
/// `classes` reuse a precomputed persistence run (degrees 0..n required);
/// bar ids in the report index into that sequence.
inline SWReport sw_at_scale(const FilteredComplex& fc, Scale r, int n, int threads = 1) {
    return detail::sw_report(fc, r, r, n, /*persistent=*/false, threads, nullptr);
}

inline SWReport sw_at_scale(const FilteredComplex& fc, Scale r, int n,
                            const std::vector<PersistentClass>& classes,
                            int threads = 1) {
    return detail::sw_report(fc, r, r, n, /*persistent=*/false, threads, &classes);
}

/// Persistent Stiefel-Whitney classes of type n over [s, t]: Wu classes are
/// computed at t and the Wu criterion is re-checked at the right endpoint of
/// every bar that dies inside the window. When every check passes, the
/// classes at t restrict to the persistent classes over the whole window.
inline SWReport persistent_sw(const FilteredComplex& fc, Scale s, Scale t, int n,
                              int threads = 1) {
    return detail::sw_report(fc, s, t, n, /*persistent=*/true, threads, nullptr);
}

inline SWReport persistent_sw(const FilteredComplex& fc, Scale s, Scale t, int n,
                              const std::vector<PersistentClass>& classes,
                              int threads = 1) {
    return detail::sw_report(fc, s, t, n, /*persistent=*/true, threads, &classes);
}

/// Sample-size bound: the number of uniform samples that recovers the
/// manifold topology (and with it the classes of type n) with probability at
/// least 1 - delta, for a manifold of the given reach and volume and a ball
/// radius eps < tau / 2.
inline double nsw_sample_bound(double tau, double vol, int n, double eps, double delta) {
    if (!(tau > 0) || !(vol > 0))
        throw std::domain_error("nsw_sample_bound: tau and vol must be positive");
    if (n < 1) throw std::domain_error("nsw_sample_bound: n must be at least 1");
    if (!(delta > 0) || !(delta < 1))
        throw std::domain_error("nsw_sample_bound: delta must lie in (0, 1)");
    if (!(eps > 0) || !(eps < tau / 2))
        throw std::domain_error("nsw_sample_bound: hypothesis eps < tau/2 violated");

    auto log_ball_volume = [n](double radius) {
        return n * std::log(radius) + 0.5 * n * std::log(std::numbers::pi) -
               std::lgamma(0.5 * n + 1.0);
    };
    const double theta1 = std::asin(eps / (8.0 * tau));
    const double theta2 = std::asin(eps / (16.0 * tau));
    const double log_beta1 =
        std::log(vol) - n * std::log(std::cos(theta1)) - log_ball_volume(eps / 4.0);
    const double log_beta2 =
        std::log(vol) - n * std::log(std::cos(theta2)) - log_ball_volume(eps / 8.0);
    return std::exp(log_beta1) * (log_beta2 + std::log(1.0 / delta));
}

}  // namespace persw
