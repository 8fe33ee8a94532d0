#pragma once

#include <cstdint>
#include <vector>

namespace gridhom {

// Lehmer-code rank/unrank for permutations of {0..n-1}.  Ranks fit in
// uint64_t for n <= 20, far beyond reachable grid sizes.
inline uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

inline uint64_t perm_rank(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        r = r * static_cast<uint64_t>(n - i) + static_cast<uint64_t>(smaller);
    }
    return r;
}

inline std::vector<int> perm_unrank(uint64_t r, int n) {
    std::vector<int> code(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        code[i] = static_cast<int>(r % static_cast<uint64_t>(n - i));
        r /= static_cast<uint64_t>(n - i);
    }
    std::vector<int> pool(n), p(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < n; ++i) {
        p[i] = pool[code[i]];
        pool.erase(pool.begin() + code[i]);
    }
    return p;
}

inline std::vector<int> perm_inverse(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

// Visit all n! permutations in Lehmer-rank (= lexicographic) order.
template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    uint64_t rank = 0;
    while (true) {
        f(p, rank);
        ++rank;
        int i = n - 2;
        while (i >= 0 && p[i] > p[i + 1]) --i;
        if (i < 0) break;
        int j = n - 1;
        while (p[j] < p[i]) --j;
        std::swap(p[i], p[j]);
        for (int l = i + 1, r = n - 1; l < r; ++l, --r) std::swap(p[l], p[r]);
    }
}

}  // namespace gridhom
