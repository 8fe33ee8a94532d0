#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gridhom {

// Dense F2 matrix, rows packed 64 columns per machine word.  This is the
// kernel behind every rank / image-membership decision; elimination is plain
// column-pivot Gaussian with row swaps (exact field, no pivot concerns).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, bool v = true) {
        uint64_t& w = data_[static_cast<size_t>(r) * words_ + c / 64];
        uint64_t bit = 1ull << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    bool get(int r, int c) const {
        return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
    }
    void xor_row_into(int src, int dst) {
        uint64_t* s = row_ptr(src);
        uint64_t* d = row_ptr(dst);
        for (int w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    // Row rank; operates on a private copy.
    int rank() const;

    // Some x with M x = b, or nullopt if b is outside the column space.
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b) const;

    // y = M x over F2
    std::vector<uint8_t> apply(const std::vector<uint8_t>& x) const;

private:
    uint64_t* row_ptr(int r) { return data_.data() + static_cast<size_t>(r) * words_; }
    const uint64_t* row_ptr(int r) const {
        return data_.data() + static_cast<size_t>(r) * words_;
    }

    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

}  // namespace gridhom
