#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "persw/simplex.hpp"

namespace persw {

using Scale = double;

struct Cell {
    Simplex simplex;
    Scale scale = 0.0;
};

/// Canonical cell order: (scale, dimension, lexicographic vertices).
/// Everything downstream (matrix columns, reduction order, report output)
/// uses this order, which makes results reproducible.
inline bool cell_less(const Cell& a, const Cell& b) {
    if (a.scale != b.scale) return a.scale < b.scale;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return a.simplex < b.simplex;
}

/// A filtered simplicial complex: a face-closed set of simplices, each tagged
/// with a filtration scale, monotone along face relations. Cells are stored
/// in canonical order. Immutable after construction; construction rejects
/// malformed input with a diagnostic naming the offending simplex.
class FilteredComplex {
public:
    FilteredComplex() = default;

    explicit FilteredComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end(), cell_less);
        index_.reserve(cells_.size());
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            const Cell& c = cells_[i];
            if (c.scale < 0 || !std::isfinite(c.scale))
                throw std::invalid_argument("cell " + c.simplex.str() +
                                            " has invalid filtration scale");
            if (!index_.emplace(c.simplex, i).second)
                throw std::invalid_argument("duplicate cell " + c.simplex.str());
            max_dim_ = std::max(max_dim_, c.simplex.dim());
        }
        by_dim_.resize(static_cast<std::size_t>(max_dim_ + 1));
        for (std::size_t i = 0; i < cells_.size(); ++i)
            by_dim_[static_cast<std::size_t>(cells_[i].simplex.dim())].push_back(i);
        validate_closure();
        for (const Cell& c : cells_)
            if (scales_.empty() || scales_.back() != c.scale) scales_.push_back(c.scale);
    }

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(std::size_t i) const { return cells_[i]; }

    /// Largest simplex dimension present; -1 for the empty complex.
    int dimension() const { return max_dim_; }

    std::optional<std::size_t> index_of(const Simplex& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<Scale> scale_of(const Simplex& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return cells_[it->second].scale;
    }

    /// Present in the sub-complex at scale r?
    bool contains(const Simplex& s, Scale r) const {
        auto it = index_.find(s);
        return it != index_.end() && cells_[it->second].scale <= r;
    }

    /// Indices (into cells()) of the p-dimensional cells, canonical order.
    const std::vector<std::size_t>& cells_of_dim(int p) const {
        static const std::vector<std::size_t> none;
        if (p < 0 || p > max_dim_) return none;
        return by_dim_[static_cast<std::size_t>(p)];
    }

    /// Distinct filtration scales, ascending.
    const std::vector<Scale>& scales() const { return scales_; }

    Scale min_scale() const { return empty() ? 0.0 : scales_.front(); }
    Scale max_scale() const { return empty() ? 0.0 : scales_.back(); }

    /// Largest cell scale strictly below r, if any.
    std::optional<Scale> scale_before(Scale r) const {
        auto it = std::lower_bound(scales_.begin(), scales_.end(), r);
        if (it == scales_.begin()) return std::nullopt;
        return *std::prev(it);
    }

    /// The sub-complex of cells with scale <= r. Scales below the minimum
    /// yield the empty complex.
    FilteredComplex sub_complex(Scale r) const {
        if (r < 0)
            throw std::invalid_argument("sub_complex: negative scale");
        // cells are sorted by scale first, so the result is a prefix
        std::size_t n = 0;
        while (n < cells_.size() && cells_[n].scale <= r) ++n;
        return FilteredComplex(std::vector<Cell>(cells_.begin(), cells_.begin() + n));
    }

private:
    void validate_closure() const {
        for (const Cell& c : cells_) {
            if (c.simplex.dim() == 0) continue;
            for (std::size_t i = 0; i < c.simplex.size(); ++i) {
                Simplex f = c.simplex.facet(i);
                auto it = index_.find(f);
                if (it == index_.end())
                    throw std::invalid_argument("complex is not face-closed: facet " +
                                                f.str() + " of " + c.simplex.str() +
                                                " is missing");
                if (cells_[it->second].scale > c.scale)
                    throw std::invalid_argument(
                        "filtration is not monotone: facet " + f.str() + " enters at " +
                        std::to_string(cells_[it->second].scale) + ", after " +
                        c.simplex.str() + " at " + std::to_string(c.scale));
            }
        }
    }

    std::vector<Cell> cells_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
    std::vector<std::vector<std::size_t>> by_dim_;
    std::vector<Scale> scales_;
    int max_dim_ = -1;
};

}  // namespace persw
