#pragma once

#include <map>
#include <random>

#include "persw/cochain.hpp"
#include "persw/filtered_complex.hpp"

namespace persw::testsupport {

/// Random face-closed filtration on up to `max_verts` vertices with simplex
/// dimension at most `max_dim`. Scales are quantized to multiples of 0.25 so
/// ties are common; monotonicity holds by construction.
inline FilteredComplex random_filtration(std::mt19937_64& rng, int max_verts, int max_dim,
                                         std::size_t max_cells) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::map<std::vector<VertexId>, double> scale;
    const int nv = 3 + static_cast<int>(rng() % static_cast<unsigned>(max_verts - 2));
    for (int v = 0; v < nv; ++v) scale[{v}] = 0.25 * static_cast<double>(rng() % 3);
    for (int d = 1; d <= max_dim; ++d) {
        std::vector<int> comb(static_cast<std::size_t>(d + 1));
        for (int i = 0; i <= d; ++i) comb[static_cast<std::size_t>(i)] = i;
        if (nv < d + 1) break;
        while (true) {
            std::vector<VertexId> s;
            for (int i = 0; i <= d; ++i) s.push_back(comb[static_cast<std::size_t>(i)]);
            bool closed = true;
            double facet_scale = 0;
            for (std::size_t i = 0; i < s.size() && closed; ++i) {
                std::vector<VertexId> f;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) f.push_back(s[j]);
                auto it = scale.find(f);
                if (it == scale.end())
                    closed = false;
                else
                    facet_scale = std::max(facet_scale, it->second);
            }
            if (closed && unif(rng) < 0.55 && scale.size() < max_cells)
                scale[s] = facet_scale + 0.25 * static_cast<double>(rng() % 4);
            int j = d;
            while (j >= 0 && comb[static_cast<std::size_t>(j)] == nv - (d + 1 - j)) --j;
            if (j < 0) break;
            ++comb[static_cast<std::size_t>(j)];
            for (int t = j + 1; t <= d; ++t)
                comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    std::vector<Cell> cells;
    for (const auto& [verts, sc] : scale) cells.push_back(Cell{Simplex(verts), sc});
    return FilteredComplex(std::move(cells));
}

inline Cochain random_cochain(std::mt19937_64& rng, const FilteredComplex& fc, int degree,
                              Scale r) {
    Cochain c{degree, r, {}};
    for (std::size_t idx : fc.cells_of_dim(degree))
        if (fc.cell(idx).scale <= r && rng() % 2) c.support.push_back(fc.cell(idx).simplex);
    std::sort(c.support.begin(), c.support.end());
    return c;
}

}  // namespace persw::testsupport
