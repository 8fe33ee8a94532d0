#include "gridhom/chainmap.hpp"

#include "gridhom/perm.hpp"

namespace gridhom {

std::optional<ChainMapViolation> verify_chain_map(const ChainMap& f) {
    GridComplex Cs(f.src), Ct(f.tgt);
    const int n = f.src.n;
    std::optional<ChainMapViolation> bad;
    for_each_permutation(n, [&](const std::vector<int>& p, uint64_t rank) {
        if (bad) return;
        GridState x{p};
        ChainElement fx = f.eval(x);

        // Declared grading of every stored term.
        Bigrading gx = Cs.gradings(x);
        for (auto& [yr, poly] : fx.terms) {
            Bigrading gy = Ct.gradings(GridState::unrank(yr, f.tgt.n));
            for (auto& mono : poly.terms) {
                int m = gy.m + 2 * mono.v_exp - 2 * mono.V_degree();
                int twoA = gy.twoA - 2 * mono.V_degree();
                bool ok_m = m == gx.m - f.deg_m;
                bool ok_a = f.bigraded ? twoA == gx.twoA - f.deg_twoA
                                       : twoA <= gx.twoA - f.deg_twoA;
                if (!ok_m || !ok_a) {
                    ChainElement witness;
                    witness.add(yr, mono);
                    bad = ChainMapViolation{rank, witness,
                                            f.name + ": term off the declared degree"};
                    return;
                }
            }
        }

        ChainElement lhs = Ct.differential_element(fx, f.tgt_theory);
        ChainElement rhs = f.apply(Cs.differential(x, f.src_theory));
        lhs.add(rhs);
        if (!lhs.is_zero())
            bad = ChainMapViolation{rank, lhs, f.name + ": d f + f d != 0"};
    });
    return bad;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
    ChainMap h;
    h.name = f.name + " . " + g.name;
    h.src = g.src;
    h.tgt = f.tgt;
    h.src_theory = g.src_theory;
    h.tgt_theory = f.tgt_theory;
    h.deg_m = f.deg_m + g.deg_m;
    h.deg_twoA = f.deg_twoA + g.deg_twoA;
    h.bigraded = f.bigraded && g.bigraded;
    if (!g.var_map.empty() || !f.var_map.empty()) {
        h.var_map.resize(g.src.n);
        for (int c = 0; c < g.src.n; ++c) {
            int mid = g.var_map.empty() ? c : g.var_map[c];
            h.var_map[c] = f.var_map.empty() ? mid : f.var_map[mid];
        }
    }
    h.eval = [f, g](const GridState& x) { return f.apply(g.eval(x)); };
    return h;
}

ChainMap identity_map(const GridDiagram& G, Theory t) {
    ChainMap id;
    id.name = "id";
    id.src = id.tgt = G;
    id.src_theory = id.tgt_theory = t;
    id.eval = [](const GridState& x) {
        ChainElement e;
        e.add(x.rank(), Monomial{});
        return e;
    };
    return id;
}

}  // namespace gridhom
