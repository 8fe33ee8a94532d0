#include "doctest.h"

#include <random>

#include "gridhom/bitmatrix.hpp"

using namespace gridhom;

namespace {

// Naive O(n^3) reference rank over F2, on bool matrices.
int naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
        int pivot = -1;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        for (size_t i = 0; i < rows; ++i)
            if (static_cast<int>(i) != r && m[i][c])
                for (size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

BitMatrix pack(const std::vector<std::vector<int>>& m) {
    BitMatrix M(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j]) M.set(static_cast<int>(i), static_cast<int>(j));
    return M;
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<int>> t(m[0].size(), std::vector<int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace

TEST_CASE("identity solve returns b") {
    BitMatrix I(3, 3);
    for (int i = 0; i < 3; ++i) I.set(i, i);
    std::vector<uint8_t> b = {1, 0, 1};
    auto x = I.solve(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
}

TEST_CASE("zero matrix has no solution for b != 0") {
    BitMatrix Z(3, 4);
    CHECK_FALSE(Z.solve({1, 0, 0}).has_value());
    CHECK(Z.solve({0, 0, 0}).has_value());
}

TEST_CASE("solve soundness on random systems") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 20, cols = 30;
        BitMatrix M(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() % 2) M.set(i, j);
        std::vector<uint8_t> x0(cols);
        for (auto& v : x0) v = rng() % 2;
        std::vector<uint8_t> b = M.apply(x0);
        auto x = M.solve(b);
        REQUIRE(x.has_value());
        CHECK(M.apply(*x) == b);
    }
}

TEST_CASE("rank equals rank of transpose (naive oracle)") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 64);
        int cols = 1 + static_cast<int>(rng() % 64);
        std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
        for (auto& row : m)
            for (auto& v : row) v = rng() % 2;
        int expect = naive_rank(m);
        CHECK(pack(m).rank() == expect);
        CHECK(pack(transpose(m)).rank() == expect);
    }
}
