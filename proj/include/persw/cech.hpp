#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "persw/filtered_complex.hpp"
#include "persw/meb.hpp"
#include "persw/parallel.hpp"

namespace persw {

/// Cech filtration of a point cloud: every simplex on at most max_dim+1
/// points whose minimal-enclosing-ball radius is at most max_scale, entering
/// at that radius (closed-ball convention). Candidates are the cliques of the
/// pairwise-distance graph at threshold 2*max_scale; the MEB radius is
/// monotone under faces, which prunes the clique expansion. MEB evaluation is
/// data-parallel across root vertices with a deterministic ordered merge.
inline FilteredComplex cech_filtration(const PointCloud& pc, int max_dim,
                                       double max_scale, int threads = 1) {
    if (max_dim < 1) throw std::invalid_argument("cech_filtration: max_dim must be >= 1");
    if (!(max_scale > 0))
        throw std::invalid_argument("cech_filtration: max_scale must be positive");
    pc.validate();
    if (pc.empty()) return FilteredComplex();

    const int n = static_cast<int>(pc.size());
    const double thresh2 = 4.0 * max_scale * max_scale;
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));  // ascending, > v
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (squared_distance(pc.points[static_cast<std::size_t>(i)],
                                 pc.points[static_cast<std::size_t>(j)]) <= thresh2)
                nbr[static_cast<std::size_t>(i)].push_back(j);

    std::vector<std::vector<Cell>> partial(static_cast<std::size_t>(std::max(threads, 1)));
    parallel_chunks(
        static_cast<std::size_t>(n), threads,
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            std::vector<Cell>& out = partial[chunk];
            std::vector<int> clique;
            auto expand = [&](auto&& self, const std::vector<int>& cands) -> void {
                for (std::size_t ci = 0; ci < cands.size(); ++ci) {
                    const int v = cands[ci];
                    clique.push_back(v);
                    const double r = min_enclosing_ball(pc, clique).radius;
                    if (r <= max_scale) {
                        out.push_back(Cell{Simplex(clique), r});
                        if (static_cast<int>(clique.size()) <= max_dim) {
                            std::vector<int> next;
                            const std::vector<int>& nv = nbr[static_cast<std::size_t>(v)];
                            std::set_intersection(cands.begin() + static_cast<std::ptrdiff_t>(ci) + 1,
                                                  cands.end(), nv.begin(), nv.end(),
                                                  std::back_inserter(next));
                            if (!next.empty()) self(self, next);
                        }
                    }
                    clique.pop_back();
                }
            };
            for (std::size_t v = begin; v < end; ++v) {
                clique.assign(1, static_cast<int>(v));
                out.push_back(Cell{Simplex(clique), 0.0});
                expand(expand, nbr[v]);
            }
        });

    std::vector<Cell> cells;
    for (const std::vector<Cell>& part : partial)
        cells.insert(cells.end(), part.begin(), part.end());

    // Repair any last-ulp monotonicity inversions from the floating-point MEB:
    // raise each scale to the max over its facets, then drop cells pushed
    // past max_scale (their cofaces get dropped with them).
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
        return a.simplex < b.simplex;
    });
    std::unordered_map<Simplex, double, SimplexHash> fixed;
    fixed.reserve(cells.size());
    std::vector<Cell> result;
    result.reserve(cells.size());
    for (Cell& c : cells) {
        double sc = c.scale;
        bool facets_present = true;
        if (c.simplex.dim() > 0)
            for (std::size_t i = 0; i < c.simplex.size(); ++i) {
                auto it = fixed.find(c.simplex.facet(i));
                if (it == fixed.end()) {
                    facets_present = false;  // facet fell just past max_scale
                    break;
                }
                sc = std::max(sc, it->second);
            }
        if (!facets_present) continue;
        fixed.emplace(c.simplex, sc);
        if (sc <= max_scale) result.push_back(Cell{std::move(c.simplex), sc});
    }
    return FilteredComplex(std::move(result));
}

}  // namespace persw
