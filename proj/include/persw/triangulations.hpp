#pragma once

#include <set>
#include <vector>

#include "persw/filtered_complex.hpp"

namespace persw {
namespace triangulations {

/// Filtration built from the facets of a triangulation: closes under faces
/// and assigns every simplex the scale equal to its dimension.
inline FilteredComplex dimension_filtration(
    const std::vector<std::vector<VertexId>>& facets) {
    std::set<std::vector<VertexId>> faces;
    for (const std::vector<VertexId>& f : facets) {
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            std::vector<VertexId> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) sub.push_back(f[i]);
            faces.insert(std::move(sub));
        }
    }
    std::vector<Cell> cells;
    cells.reserve(faces.size());
    for (const std::vector<VertexId>& f : faces)
        cells.push_back(Cell{Simplex(f), static_cast<Scale>(f.size() - 1)});
    return FilteredComplex(std::move(cells));
}

/// Boundary of the 3-simplex: the minimal triangulation of S^2.
inline FilteredComplex sphere2() {
    return dimension_filtration({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// The 7-vertex torus (Moebius-Kantor triangulation, edges = K7).
inline FilteredComplex torus7() {
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < 7; ++i) {
        auto tri = [&](int a, int b, int c) {
            std::vector<VertexId> t{(a + i) % 7, (b + i) % 7, (c + i) % 7};
            std::sort(t.begin(), t.end());
            facets.push_back(std::move(t));
        };
        tri(0, 1, 3);
        tri(0, 2, 3);
    }
    return dimension_filtration(facets);
}

/// The 6-vertex real projective plane (antipodal quotient of the icosahedron).
inline FilteredComplex projective_plane6() {
    return dimension_filtration({{0, 1, 3}, {0, 1, 5}, {0, 2, 3}, {0, 2, 4}, {0, 4, 5},
                                 {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5}});
}

/// A 9-vertex Klein bottle: 3x3 grid closed up torus-fashion in one direction
/// and with a reflection in the other.
inline FilteredComplex klein_bottle9() {
    const int rows[4][4] = {
        {0, 1, 2, 0}, {3, 4, 5, 3}, {6, 7, 8, 6}, {0, 2, 1, 0}};
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int a = rows[i][j], b = rows[i][j + 1];
            const int c = rows[i + 1][j], d = rows[i + 1][j + 1];
            std::vector<VertexId> t1{a, b, d}, t2{a, d, c};
            std::sort(t1.begin(), t1.end());
            std::sort(t2.begin(), t2.end());
            facets.push_back(std::move(t1));
            facets.push_back(std::move(t2));
        }
    return dimension_filtration(facets);
}

/// The 9-vertex complex projective plane: the unique 9-vertex combinatorial
/// 4-manifold with Euler characteristic 3. All 36 facets, invariant under the
/// Z3 x Z3 translations of the vertex grid.
inline FilteredComplex cp2_9() {
    return dimension_filtration({
        {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}, {0, 1, 3, 4, 6},
        {0, 1, 3, 5, 7}, {0, 1, 3, 6, 7}, {0, 1, 4, 5, 6}, {0, 1, 5, 6, 8},
        {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8}, {0, 2, 3, 4, 8}, {0, 2, 3, 5, 8},
        {0, 2, 4, 5, 6}, {0, 2, 4, 6, 7}, {0, 2, 4, 7, 8}, {0, 2, 5, 6, 8},
        {0, 2, 6, 7, 8}, {0, 3, 4, 6, 7}, {0, 3, 4, 7, 8}, {0, 3, 5, 7, 8},
        {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8},
        {1, 2, 4, 5, 7}, {1, 2, 4, 7, 8}, {1, 2, 6, 7, 8}, {1, 3, 4, 6, 8},
        {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8}, {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8},
        {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8}, {3, 4, 5, 7, 8}});
}

/// Circle as the boundary of a triangle, vertices at scale 0 and edges at 1.
inline FilteredComplex circle3() {
    return FilteredComplex({Cell{Simplex{0}, 0}, Cell{Simplex{1}, 0}, Cell{Simplex{2}, 0},
                            Cell{Simplex{0, 1}, 1}, Cell{Simplex{0, 2}, 1},
                            Cell{Simplex{1, 2}, 1}});
}

}  // namespace triangulations
}  // namespace persw
