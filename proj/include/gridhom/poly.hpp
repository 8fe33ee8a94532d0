#pragma once

#include <cstdint>
#include <map>
#include <vector>
#include <string>
#include <compare>

namespace gridhom {

// Monomial in F2[V_0..V_{n-1}, v].  V exponents are keyed by grid column
// (the column of the O marking the variable belongs to) and stored sparsely
// with no zero entries.
struct Monomial {
    int v_exp = 0;
    std::vector<std::pair<int, int>> V_exps;  // sorted by column, exp > 0

    bool is_one() const { return v_exp == 0 && V_exps.empty(); }
    int V_degree() const {
        int d = 0;
        for (auto& [c, e] : V_exps) d += e;
        return d;
    }
    int exp_of(int col) const {
        for (auto& [c, e] : V_exps)
            if (c == col) return e;
        return 0;
    }

    Monomial times_v(int k) const {
        Monomial m = *this;
        m.v_exp += k;
        return m;
    }
    Monomial times_V(int col, int k = 1) const;
    Monomial operator*(const Monomial& o) const;

    // Relabel V columns through `var_map[col]`; used when transporting
    // coefficients across a map between different diagrams.
    Monomial relabel(const std::vector<int>& var_map) const;

    auto operator<=>(const Monomial&) const = default;
    std::string str() const;
};

// Polynomial over F2: a set of monomials (every present term has coefficient 1).
// Addition is symmetric difference.
struct CoeffPoly {
    std::vector<Monomial> terms;  // sorted, unique

    static CoeffPoly zero() { return {}; }
    static CoeffPoly one() { return CoeffPoly{{Monomial{}}}; }
    static CoeffPoly mono(Monomial m) { return CoeffPoly{{std::move(m)}}; }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m);  // xor one monomial in/out

    CoeffPoly operator+(const CoeffPoly& o) const;
    CoeffPoly operator*(const CoeffPoly& o) const;
    bool operator==(const CoeffPoly&) const = default;
    std::string str() const;
};

CoeffPoly poly_add(const CoeffPoly& p, const CoeffPoly& q);
CoeffPoly poly_mul(const CoeffPoly& p, const CoeffPoly& q);

// Element of a grid complex: a finite F2[V..,v]-combination of grid states,
// keyed by the state's Lehmer rank.  No zero polynomials are stored.
struct ChainElement {
    std::map<std::uint64_t, CoeffPoly> terms;

    bool is_zero() const { return terms.empty(); }
    void add(std::uint64_t state_rank, const Monomial& m);
    void add(std::uint64_t state_rank, const CoeffPoly& p);
    void add(const ChainElement& o);
    // this += m * o (with optional V relabeling of o's coefficients)
    void add_scaled(const Monomial& m, const ChainElement& o,
                    const std::vector<int>* var_map = nullptr);

    bool operator==(const ChainElement&) const = default;
    std::string str() const;
};

}  // namespace gridhom
