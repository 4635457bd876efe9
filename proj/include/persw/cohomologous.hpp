#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "persw/bit_matrix.hpp"
#include "persw/cochain.hpp"

namespace persw {

/// Matrix of delta : C^{p-1}(X^r) -> C^p(X^r). Rows are indexed by the
/// p-cells at scale <= r, columns by the (p-1)-cells, both in canonical cell
/// order. For p = 0 the matrix has zero columns.
inline BitMatrix coboundary_matrix(const FilteredComplex& fc, int p, Scale r) {
    std::vector<std::size_t> rows_cells, col_cells;
    for (std::size_t idx : fc.cells_of_dim(p))
        if (fc.cell(idx).scale <= r) rows_cells.push_back(idx);
    if (p >= 1)
        for (std::size_t idx : fc.cells_of_dim(p - 1))
            if (fc.cell(idx).scale <= r) col_cells.push_back(idx);

    std::unordered_map<Simplex, std::size_t, SimplexHash> col_of;
    col_of.reserve(col_cells.size());
    for (std::size_t j = 0; j < col_cells.size(); ++j)
        col_of.emplace(fc.cell(col_cells[j]).simplex, j);

    BitMatrix m(rows_cells.size(), col_cells.size());
    for (std::size_t i = 0; i < rows_cells.size(); ++i) {
        const Simplex& s = fc.cell(rows_cells[i]).simplex;
        for (std::size_t k = 0; k < s.size(); ++k) {
            auto it = col_of.find(s.facet(k));
            if (it != col_of.end()) m.flip(i, it->second);
        }
    }
    return m;
}

namespace detail {

inline std::vector<std::uint8_t> support_indicator(const Cochain& c,
                                                   const FilteredComplex& fc, Scale r) {
    std::vector<std::uint8_t> b;
    std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
    std::size_t n = 0;
    for (std::size_t idx : fc.cells_of_dim(c.degree))
        if (fc.cell(idx).scale <= r) row_of.emplace(fc.cell(idx).simplex, n++);
    b.assign(n, 0);
    for (const Simplex& s : c.support) {
        auto it = row_of.find(s);
        if (it == row_of.end())
            throw std::invalid_argument("cochain support simplex " + s.str() +
                                        " is not a cell at scale " + std::to_string(r));
        b[it->second] ^= 1;
    }
    return b;
}

}  // namespace detail

/// Two cocycles of the same degree and scale are cohomologous iff their Z/2
/// difference is a coboundary, decided by solving delta x = c1 + c2.
inline bool is_cohomologous(const Cochain& c1, const Cochain& c2,
                            const FilteredComplex& fc) {
    if (c1.degree != c2.degree)
        throw std::invalid_argument("is_cohomologous: degree mismatch");
    if (c1.scale != c2.scale)
        throw std::invalid_argument("is_cohomologous: scale mismatch");
    Cochain diff = cochain_sum(c1, c2);
    if (diff.zero()) return true;
    const Scale r = c1.scale;
    BitMatrix a = coboundary_matrix(fc, c1.degree, r);
    std::vector<std::uint8_t> b = detail::support_indicator(diff, fc, r);
    return solve(a, b).has_value();
}

inline bool is_coboundary(const Cochain& c, const FilteredComplex& fc) {
    Cochain zero{c.degree, c.scale, {}};
    return is_cohomologous(c, zero, fc);
}

/// Coordinates of [c] with respect to a basis of cohomology classes given by
/// cocycles at the same scale: solves [B | delta] y = c and returns the
/// basis part of y. Requires the basis to be independent modulo coboundaries,
/// which makes the basis part unique. Returns nullopt when [c] is outside
/// the span.
inline std::optional<std::vector<std::uint8_t>> class_coordinates(
    const Cochain& c, const std::vector<Cochain>& basis, const FilteredComplex& fc) {
    const Scale r = c.scale;
    const int p = c.degree;
    for (const Cochain& b : basis)
        if (b.degree != p || b.scale != r)
            throw std::invalid_argument("class_coordinates: basis mismatch");

    std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
    std::size_t nrows = 0;
    for (std::size_t idx : fc.cells_of_dim(p))
        if (fc.cell(idx).scale <= r) row_of.emplace(fc.cell(idx).simplex, nrows++);

    BitMatrix d = coboundary_matrix(fc, p, r);
    BitMatrix a(nrows, basis.size() + d.cols());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const Simplex& s : basis[j].support) a.flip(row_of.at(s), j);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d.get(i, j)) a.set(i, basis.size() + j, true);

    std::vector<std::uint8_t> b(nrows, 0);
    for (const Simplex& s : c.support) {
        auto it = row_of.find(s);
        if (it == row_of.end())
            throw std::invalid_argument("class_coordinates: support simplex " + s.str() +
                                        " is not a cell at scale " + std::to_string(r));
        b[it->second] ^= 1;
    }
    auto y = solve(a, b);
    if (!y) return std::nullopt;
    return std::vector<std::uint8_t>(y->begin(), y->begin() + basis.size());
}

}  // namespace persw
