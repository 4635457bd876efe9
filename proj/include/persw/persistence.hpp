#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

#include "persw/cohomologous.hpp"

namespace persw {

/// A barcode interval [birth, death) with a representative cocycle anchored
/// at the last filtration scale inside the interval (or at the full complex
/// for essential classes).
struct PersistentClass {
    int degree = 0;
    Scale birth = 0.0;
    Scale death = std::numeric_limits<Scale>::infinity();
    Cochain representative;

    bool essential() const { return std::isinf(death); }
    bool contains(Scale r) const { return birth <= r && r < death; }
};

/// Persistent cohomology over Z/2 in degrees 0..max_degree.
///
/// Cells are processed in increasing canonical order while a set of live
/// cocycles is maintained. A new cell either spawns a fresh cocycle (its own
/// dual) or kills the youngest live cocycle whose coboundary it would spoil;
/// the remaining affected cocycles are repaired by adding the dying one.
/// Intervals of zero length are dropped. Exact kernels in degree p need the
/// (p+1)-cells, so requesting max_degree >= dimension() adds a warning.
inline std::vector<PersistentClass> persistent_cohomology(
    const FilteredComplex& fc, int max_degree,
    std::vector<std::string>* warnings = nullptr) {
    if (max_degree < 0)
        throw std::invalid_argument("persistent_cohomology: negative degree");
    if (warnings && !fc.empty() && max_degree >= fc.dimension())
        warnings->push_back(
            "degree " + std::to_string(max_degree) + " requested on a complex of "
            "dimension " + std::to_string(fc.dimension()) +
            "; cocycle kernels in the top degree may be overestimated");

    struct Live {
        std::size_t birth_cell;
        int degree;
        std::unordered_set<Simplex, SimplexHash> support;
    };
    std::vector<Live> live;
    std::vector<PersistentClass> out;

    for (std::size_t i = 0; i < fc.size(); ++i) {
        const Cell& cell = fc.cell(i);
        const int d = cell.simplex.dim();
        if (d > max_degree + 1) continue;

        std::vector<std::size_t> hits;
        for (std::size_t j = 0; j < live.size(); ++j) {
            if (live[j].degree != d - 1) continue;
            int parity = 0;
            for (std::size_t k = 0; k < cell.simplex.size(); ++k)
                if (live[j].support.count(cell.simplex.facet(k))) parity ^= 1;
            if (parity) hits.push_back(j);
        }

        if (hits.empty()) {
            if (d <= max_degree)
                live.push_back(Live{i, d, {cell.simplex}});
            continue;
        }

        std::size_t victim = hits[0];
        for (std::size_t j : hits)
            if (live[j].birth_cell > live[victim].birth_cell) victim = j;
        for (std::size_t j : hits) {
            if (j == victim) continue;
            for (const Simplex& s : live[victim].support) {
                auto [it, inserted] = live[j].support.insert(s);
                if (!inserted) live[j].support.erase(it);
            }
        }

        const Scale birth = fc.cell(live[victim].birth_cell).scale;
        const Scale death = cell.scale;
        if (birth < death) {
            // anchor the representative at the last scale before death
            const Scale anchor = *fc.scale_before(death);
            Cochain rep{d - 1, anchor, {}};
            for (const Simplex& s : live[victim].support)
                if (fc.contains(s, anchor)) rep.support.push_back(s);
            std::sort(rep.support.begin(), rep.support.end());
            out.push_back(PersistentClass{d - 1, birth, death, std::move(rep)});
        }
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(victim));
    }

    const Scale top = fc.max_scale();
    for (const Live& z : live) {
        Cochain rep{z.degree, top, std::vector<Simplex>(z.support.begin(), z.support.end())};
        std::sort(rep.support.begin(), rep.support.end());
        out.push_back(PersistentClass{z.degree, fc.cell(z.birth_cell).scale,
                                      std::numeric_limits<Scale>::infinity(),
                                      std::move(rep)});
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const PersistentClass& a, const PersistentClass& b) {
                         if (a.degree != b.degree) return a.degree < b.degree;
                         if (a.birth != b.birth) return a.birth < b.birth;
                         if (a.death != b.death) return a.death < b.death;
                         return a.representative.support < b.representative.support;
                     });
    return out;
}

/// dim H^p(X^r), computed independently of the barcode via ranks of the two
/// coboundary matrices at scale r.
inline std::size_t betti_at(const FilteredComplex& fc, int p, Scale r) {
    std::size_t n_p = 0;
    for (std::size_t idx : fc.cells_of_dim(p))
        if (fc.cell(idx).scale <= r) ++n_p;
    if (n_p == 0) return 0;
    const std::size_t rank_up = rank_of(coboundary_matrix(fc, p + 1, r));
    const std::size_t rank_dn = rank_of(coboundary_matrix(fc, p, r));
    return n_p - rank_up - rank_dn;
}

struct ScaleBasis {
    std::vector<Cochain> cochains;
    std::vector<std::size_t> class_ids;  // indices into the classes sequence
};

/// Restrictions to scale r of the representatives of all degree-p classes
/// whose interval contains r. The result is verified to be a basis of
/// H^p(X^r): the count must equal the Betti number and the cocycles must be
/// independent modulo coboundaries; a failed check throws.
inline ScaleBasis basis_at_scale(const std::vector<PersistentClass>& classes, int degree,
                                 Scale r, const FilteredComplex& fc) {
    ScaleBasis basis;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const PersistentClass& cl = classes[i];
        if (cl.degree != degree || !cl.contains(r)) continue;
        const Scale anchor = std::min(r, cl.representative.scale);
        Cochain rep = restrict_cochain(cl.representative, anchor, fc);
        rep.scale = r;  // same complex: no cell scales in (anchor, r]
        basis.cochains.push_back(std::move(rep));
        basis.class_ids.push_back(i);
    }

    const std::size_t betti = betti_at(fc, degree, r);
    if (basis.cochains.size() != betti)
        throw std::runtime_error(
            "basis_at_scale: " + std::to_string(basis.cochains.size()) +
            " classes of degree " + std::to_string(degree) + " contain scale " +
            std::to_string(r) + " but dim H^" + std::to_string(degree) + " = " +
            std::to_string(betti));

    if (!basis.cochains.empty()) {
        std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
        std::size_t nrows = 0;
        for (std::size_t idx : fc.cells_of_dim(degree))
            if (fc.cell(idx).scale <= r) row_of.emplace(fc.cell(idx).simplex, nrows++);
        BitMatrix d = coboundary_matrix(fc, degree, r);
        BitMatrix joint(nrows, d.cols() + basis.cochains.size());
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (d.get(i, j)) joint.set(i, j, true);
        for (std::size_t j = 0; j < basis.cochains.size(); ++j)
            for (const Simplex& s : basis.cochains[j].support)
                joint.flip(row_of.at(s), d.cols() + j);
        if (rank_of(joint) != rank_of(d) + basis.cochains.size())
            throw std::runtime_error(
                "basis_at_scale: restricted representatives of degree " +
                std::to_string(degree) + " are dependent modulo coboundaries at scale " +
                std::to_string(r));
    }
    return basis;
}

}  // namespace persw
