#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "persw/filtered_complex.hpp"

namespace persw {

/// A Z/2 cochain of fixed degree at a fixed filtration scale, stored as the
/// sorted support of dual simplices. Every support simplex must live in the
/// ambient complex with filtration scale at most `scale`.
struct Cochain {
    int degree = 0;
    Scale scale = 0.0;
    std::vector<Simplex> support;  // sorted, unique, all of dimension `degree`

    bool zero() const { return support.empty(); }

    bool contains(const Simplex& s) const {
        return std::binary_search(support.begin(), support.end(), s);
    }
};

inline Cochain make_cochain(int degree, Scale scale, std::vector<Simplex> support) {
    for (const Simplex& s : support)
        if (s.dim() != degree)
            throw std::invalid_argument("support simplex " + s.str() +
                                        " does not match cochain degree " +
                                        std::to_string(degree));
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return Cochain{degree, scale, std::move(support)};
}

/// Z/2 sum (symmetric difference of supports). Degrees and scales must agree.
inline Cochain cochain_sum(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree)
        throw std::invalid_argument("cochain_sum: degree mismatch");
    if (a.scale != b.scale)
        throw std::invalid_argument("cochain_sum: scale mismatch");
    Cochain out{a.degree, a.scale, {}};
    out.support.reserve(a.support.size() + b.support.size());
    std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                  b.support.begin(), b.support.end(),
                                  std::back_inserter(out.support));
    return out;
}

/// Pullback along the inclusion X^r -> X^{c.scale}: keeps exactly the support
/// simplices present at scale r. Restriction of a cocycle is again a cocycle.
inline Cochain restrict_cochain(const Cochain& c, Scale r, const FilteredComplex& fc) {
    if (r > c.scale)
        throw std::invalid_argument("restrict: target scale exceeds cochain scale");
    Cochain out{c.degree, r, {}};
    for (const Simplex& s : c.support)
        if (fc.contains(s, r)) out.support.push_back(s);
    return out;
}

/// Coboundary: a (p+1)-simplex of X^{c.scale} lies in delta(c) iff an odd
/// number of its p-faces lie in c.
inline Cochain coboundary(const Cochain& c, const FilteredComplex& fc) {
    Cochain out{c.degree + 1, c.scale, {}};
    std::unordered_set<Simplex, SimplexHash> supp(c.support.begin(), c.support.end());
    for (std::size_t idx : fc.cells_of_dim(c.degree + 1)) {
        const Cell& cell = fc.cell(idx);
        if (cell.scale > c.scale) continue;
        int parity = 0;
        for (std::size_t i = 0; i < cell.simplex.size(); ++i)
            if (supp.count(cell.simplex.facet(i))) parity ^= 1;
        if (parity) out.support.push_back(cell.simplex);
    }
    std::sort(out.support.begin(), out.support.end());
    return out;
}

inline bool is_cocycle(const Cochain& c, const FilteredComplex& fc) {
    return coboundary(c, fc).zero();
}

/// The unit of the cohomology ring at scale r: the sum of all vertex duals.
inline Cochain unit_cocycle(const FilteredComplex& fc, Scale r) {
    Cochain out{0, r, {}};
    for (std::size_t idx : fc.cells_of_dim(0)) {
        const Cell& cell = fc.cell(idx);
        if (cell.scale <= r) out.support.push_back(cell.simplex);
    }
    std::sort(out.support.begin(), out.support.end());
    return out;
}

}  // namespace persw
