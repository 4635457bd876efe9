#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "persw/cochain.hpp"
#include "persw/parallel.hpp"

namespace persw {

/// One tensor summand of a cup-i coproduct.
struct CoproductTerm {
    Simplex left;
    Simplex right;
};

/// Cup product of two cochains at a common scale, front face against back
/// face: for a in c1 and b in c2 with last(a) == first(b), the concatenation
/// a.b contributes when it is a cell at that scale. Signs vanish over Z/2.
/// Degree overflow beyond the complex dimension yields the zero cochain.
inline Cochain cup_product(const Cochain& c1, const Cochain& c2,
                           const FilteredComplex& fc,
                           std::vector<std::string>* warnings = nullptr) {
    if (c1.scale != c2.scale)
        throw std::invalid_argument("cup_product: scale mismatch");
    const int p = c1.degree, q = c2.degree;
    Cochain out{p + q, c1.scale, {}};
    if (p + q > fc.dimension()) {
        if (warnings)
            warnings->push_back("cup product degree " + std::to_string(p + q) +
                                " exceeds complex dimension " +
                                std::to_string(fc.dimension()) + "; result is zero");
        return out;
    }
    for (const Simplex& a : c1.support) {
        for (const Simplex& b : c2.support) {
            if (a.back() != b.front()) continue;
            std::vector<VertexId> glued(a.vertices());
            glued.insert(glued.end(), b.vertices().begin() + 1, b.vertices().end());
            Simplex cand(std::move(glued));
            if (fc.contains(cand, c1.scale)) {
                auto it = std::lower_bound(out.support.begin(), out.support.end(), cand);
                if (it != out.support.end() && *it == cand)
                    out.support.erase(it);
                else
                    out.support.insert(it, cand);
            }
        }
    }
    return out;
}

/// Cup-i coproduct of a simplex: one term per subset U of the vertex
/// positions with |U| = dim - i. Within a term, position u in U is deleted
/// from the left factor when (rank of u in U) + u is odd, from the right
/// factor otherwise, with 0-based ranks. At i = 0 this is the
/// Alexander-Whitney diagonal.
inline std::vector<CoproductTerm> cup_i_coproduct(const Simplex& s, int i) {
    const int n = s.dim();
    if (i < 0 || i > n)
        throw std::invalid_argument("cup_i_coproduct: i out of range for " + s.str());
    const int k = n - i;  // |U|
    std::vector<CoproductTerm> terms;
    std::vector<int> u(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) u[static_cast<std::size_t>(j)] = j;

    auto emit = [&] {
        std::vector<std::uint8_t> drop_left(s.size(), 0), drop_right(s.size(), 0);
        for (int idx = 0; idx < k; ++idx) {
            const int pos = u[static_cast<std::size_t>(idx)];
            if ((idx + pos) % 2 == 1)
                drop_left[static_cast<std::size_t>(pos)] = 1;
            else
                drop_right[static_cast<std::size_t>(pos)] = 1;
        }
        std::vector<VertexId> lv, rv;
        lv.reserve(s.size());
        rv.reserve(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (!drop_left[j]) lv.push_back(s[j]);
            if (!drop_right[j]) rv.push_back(s[j]);
        }
        terms.push_back(CoproductTerm{Simplex(std::move(lv)), Simplex(std::move(rv))});
    };

    if (k == 0) {
        emit();
        return terms;
    }
    // enumerate k-subsets of {0..n} in lexicographic order
    while (true) {
        emit();
        int j = k - 1;
        while (j >= 0 && u[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++u[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t)
            u[static_cast<std::size_t>(t)] = u[static_cast<std::size_t>(t - 1)] + 1;
    }
    return terms;
}

/// Steenrod square Sq^k of a degree-p cocycle, evaluated through the cup-i
/// coproduct: a (p+k)-simplex is in the support iff an odd number of terms of
/// its Delta_{p-k} have both factors of dimension p and in the input support.
/// Sq^0 is the identity; k > p gives zero. The per-simplex loop is
/// data-parallel with an ordered merge.
inline Cochain steenrod_square(int k, const Cochain& c, const FilteredComplex& fc,
                               int threads = 1) {
    if (k < 0) throw std::invalid_argument("steenrod_square: negative k");
    const int p = c.degree;
    if (k == 0) return c;
    Cochain out{p + k, c.scale, {}};
    if (k > p) return out;

    std::unordered_set<Simplex, SimplexHash> supp(c.support.begin(), c.support.end());
    std::vector<std::size_t> candidates;
    for (std::size_t idx : fc.cells_of_dim(p + k))
        if (fc.cell(idx).scale <= c.scale) candidates.push_back(idx);

    const std::size_t nchunks =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)),
                              candidates.empty() ? 1 : candidates.size());
    std::vector<std::vector<Simplex>> partial(nchunks);
    parallel_chunks(candidates.size(), static_cast<int>(nchunks),
                    [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                        for (std::size_t i = begin; i < end; ++i) {
                            const Simplex& sig = fc.cell(candidates[i]).simplex;
                            int parity = 0;
                            for (const CoproductTerm& t : cup_i_coproduct(sig, p - k)) {
                                if (t.left.dim() != p || t.right.dim() != p) continue;
                                if (supp.count(t.left) && supp.count(t.right)) parity ^= 1;
                            }
                            if (parity) partial[chunk].push_back(sig);
                        }
                    });
    for (const std::vector<Simplex>& part : partial)
        out.support.insert(out.support.end(), part.begin(), part.end());
    std::sort(out.support.begin(), out.support.end());
    return out;
}

}  // namespace persw
