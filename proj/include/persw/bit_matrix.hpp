#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace persw {

/// Dense matrix over Z/2, rows packed into 64-bit words. Word-level XOR is
/// the row-operation kernel behind every reduction in the library.
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(cols == 0 ? 1 : (cols + 63) / 64),
          data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = data_[r * words_ + c / 64];
        const std::uint64_t mask = std::uint64_t(1) << (c % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    void flip(std::size_t r, std::size_t c) {
        data_[r * words_ + c / 64] ^= std::uint64_t(1) << (c % 64);
    }

    /// row dst ^= row src
    void xor_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = data_.data() + dst * words_;
        const std::uint64_t* s = data_.data() + src * words_;
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::uint64_t* pa = data_.data() + a * words_;
        std::uint64_t* pb = data_.data() + b * words_;
        for (std::size_t w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
    }

    bool row_zero(std::size_t r) const {
        const std::uint64_t* p = data_.data() + r * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if (p[w]) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> data_;
};

struct RowReduction {
    BitMatrix reduced;                        // reduced row-echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;   // ascending
};

/// Gauss-Jordan elimination over Z/2. Row space is preserved; the output is
/// in reduced row-echelon form with pivots left to right.
inline RowReduction row_reduce(BitMatrix m) {
    RowReduction out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(row, pivot);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != row && m.get(r, col)) m.xor_rows(r, row);
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank_of(const BitMatrix& m) { return row_reduce(m).rank; }

/// Solve A x = b over Z/2. Returns the solution with all free variables set
/// to zero, or nullopt when the system is inconsistent.
inline std::optional<std::vector<std::uint8_t>> solve(const BitMatrix& a,
                                                      const std::vector<std::uint8_t>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: right-hand side length does not match rows");
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) aug.set(r, c, true);
        if (b[r]) aug.set(r, a.cols(), true);
    }
    RowReduction rr = row_reduce(std::move(aug));
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        if (rr.pivot_columns[i] == a.cols()) return std::nullopt;  // pivot in b column
    std::vector<std::uint8_t> x(a.cols(), 0);
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        if (rr.reduced.get(i, a.cols())) x[rr.pivot_columns[i]] = 1;
    return x;
}

}  // namespace persw
