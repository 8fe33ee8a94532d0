#include "gridhom/bitmatrix.hpp"

#include <stdexcept>

namespace gridhom {

int BitMatrix::rank() const {
    BitMatrix m = *this;
    int r = 0;
    for (int c = 0; c < m.cols_ && r < m.rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows_; ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int w = 0; w < m.words_; ++w)
                std::swap(m.row_ptr(pivot)[w], m.row_ptr(r)[w]);
        for (int i = r + 1; i < m.rows_; ++i)
            if (m.get(i, c)) m.xor_row_into(r, i);
        ++r;
    }
    return r;
}

std::optional<std::vector<uint8_t>> BitMatrix::solve(
    const std::vector<uint8_t>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("BitMatrix::solve: dimension mismatch");
    // Augmented elimination [M | b].
    BitMatrix m(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int w = 0; w < words_; ++w) m.row_ptr(r)[w] = row_ptr(r)[w];
        // Clear any spill past cols_ (none: copy is word-aligned and source
        // keeps unused high bits zero), then append b.
        m.set(r, cols_, b[r] & 1);
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int w = 0; w < m.words_; ++w)
                std::swap(m.row_ptr(pivot)[w], m.row_ptr(r)[w]);
        for (int i = 0; i < rows_; ++i)
            if (i != r && m.get(i, c)) m.xor_row_into(r, i);
        pivot_col.push_back(c);
        ++r;
    }
    // Inconsistent iff a zero row of M has b-bit 1.
    for (int i = r; i < rows_; ++i)
        if (m.get(i, cols_)) return std::nullopt;
    std::vector<uint8_t> x(cols_, 0);
    for (int i = 0; i < r; ++i)
        if (m.get(i, cols_)) x[pivot_col[i]] = 1;
    return x;
}

std::vector<uint8_t> BitMatrix::apply(const std::vector<uint8_t>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
    std::vector<uint8_t> y(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const uint64_t* row = row_ptr(r);
        for (int c = 0; c < cols_; ++c)
            if (x[c]) acc ^= (row[c / 64] >> (c % 64)) & 1;
        y[r] = static_cast<uint8_t>(acc & 1);
    }
    return y;
}

}  // namespace gridhom
