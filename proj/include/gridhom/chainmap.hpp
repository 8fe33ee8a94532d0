#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gridhom/complex.hpp"

namespace gridhom {

// A module map between two grid complexes, defined on grid states and
// extended linearly over the coefficient ring.  `var_map` names the target
// column of each source column's O marking (empty = identity), so
// f(V_c x) = V_{var_map[c]} f(x).
struct ChainMap {
    std::string name;
    GridDiagram src, tgt;
    Theory src_theory = Theory::FilteredOBig;
    Theory tgt_theory = Theory::FilteredOBig;
    int deg_m = 0;     // every stored term satisfies M(term) = M(x) - deg_m
    int deg_twoA = 0;  // 2A(term) = 2A(x) - deg_twoA (bigraded) or <= (filtered)
    bool bigraded = true;
    std::vector<int> var_map;
    std::function<ChainElement(const GridState&)> eval;

    ChainElement apply(const ChainElement& e) const {
        ChainElement out;
        const int n = src.n;
        for (auto& [r, poly] : e.terms) {
            ChainElement fx = eval(GridState::unrank(r, n));
            for (auto& mono : poly.terms)
                out.add_scaled(mono, fx, var_map.empty() ? nullptr : &var_map);
        }
        return out;
    }
};

struct ChainMapViolation {
    uint64_t state_rank = 0;
    ChainElement residue;  // nonzero value of (d f + f d)(x), or a grading witness
    std::string message;
};

// Checks d_tgt(f(x)) + f(d_src(x)) = 0 for every source state, and that each
// stored term matches the declared (deg_m, deg_twoA).
std::optional<ChainMapViolation> verify_chain_map(const ChainMap& f);

// f after g (g first); theories and grading data compose accordingly.
ChainMap compose(const ChainMap& f, const ChainMap& g);

ChainMap identity_map(const GridDiagram& G, Theory t);

}  // namespace gridhom
