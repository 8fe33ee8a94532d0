#include "gridhom/cobordism.hpp"

#include <algorithm>

#include "gridhom/homology.hpp"

namespace gridhom {

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

GridState transpose_state(const GridState& x) { return {perm_inverse(x.s)}; }

// 180-degree rotation on lattice points: (c, r) -> (n-c, n-r) mod n.
GridState rotate_state(const GridState& x) {
    const int n = static_cast<int>(x.s.size());
    GridState y;
    y.s.assign(n, 0);
    for (int c = 0; c < n; ++c) y.s[imod(n - c, n)] = imod(n - x.s[c], n);
    return y;
}

ChainElement strip_pentagon_eval(const CombinedDiagram::Strip& S, StripSide side,
                                 bool block_O, const GridState& x,
                                 uint64_t mutate_rank) {
    ChainElement out;
    const bool mutate_here = mutate_rank != UINT64_MAX && x.rank() == mutate_rank;
    for (auto& p : pentagons_from(S, side, x)) {
        if (block_O ? p.o_count : p.x_count) continue;
        if (p.is_long && mutate_here) continue;
        Monomial m;
        m.v_exp = p.is_long ? 1 : p.interior_points;
        if (!block_O)
            for (auto& [c, e] : p.o_mult) m = m.times_V(c, e);
        GridState y = x;
        std::swap(y.s[p.cp], y.s[p.cq]);
        out.add(y.rank(), m);
    }
    return out;
}

}  // namespace

ChainMap commutation_map(const CombinedDiagram& cd, CommutationVariant variant,
                         bool mutate_drop_long) {
    if (cd.kind != CombinedDiagram::Kind::Commutation)
        throw GridError(GridErrorCode::NotACommutation,
                        "combined diagram is not a commutation");
    const bool filtered = variant == CommutationVariant::Filtered;
    ChainMap f;
    f.name = filtered ? "C_filtered_big" : "C_minus_big";
    f.src = cd.minus;
    f.tgt = cd.plus;
    f.src_theory = f.tgt_theory =
        filtered ? Theory::FilteredOBig : Theory::MinusXBig;
    f.deg_m = 0;
    f.deg_twoA = 0;
    f.bigraded = !filtered;

    const CombinedDiagram::Strip S = cd.strip;
    uint64_t mutate_rank = UINT64_MAX;
    if (mutate_drop_long) {
        // pick the first source state contributing a counted long pentagon
        const uint64_t total = factorial(S.n);
        for (uint64_t r = 0; r < total && mutate_rank == UINT64_MAX; ++r) {
            GridState x = GridState::unrank(r, S.n);
            for (auto& p : pentagons_from(S, StripSide::MinusState, x))
                if (p.is_long && !(filtered ? p.o_count : p.x_count)) {
                    mutate_rank = r;
                    break;
                }
        }
    }

    if (cd.axis == Axis::Row) {
        f.eval = [S, filtered, mutate_rank](const GridState& x) {
            return strip_pentagon_eval(S, StripSide::MinusState, filtered, x,
                                       mutate_rank);
        };
    } else {
        // Column commutation: conjugate the row kernel by transposition.
        // Native variable columns are original rows; the marking of native
        // column r is the O in row r, at column plus.o_row[r].
        std::vector<int> nat2orig(cd.plus.n);
        for (int r = 0; r < cd.plus.n; ++r) nat2orig[r] = cd.plus.o_row[r];
        f.eval = [S, filtered, mutate_rank, nat2orig](const GridState& x) {
            ChainElement nat = strip_pentagon_eval(S, StripSide::MinusState, filtered,
                                                   transpose_state(x), mutate_rank);
            ChainElement out;
            for (auto& [r, poly] : nat.terms) {
                uint64_t rr = transpose_state(GridState::unrank(r, S.n)).rank();
                for (auto& mono : poly.terms) out.add(rr, mono.relabel(nat2orig));
            }
            return out;
        };
        f.var_map.resize(cd.minus.n);
        for (int c = 0; c < cd.minus.n; ++c) f.var_map[c] = c;
        std::swap(f.var_map[cd.index], f.var_map[(cd.index + 1) % cd.minus.n]);
    }
    return f;
}

ChainMap pinch_map_X(const CombinedDiagram& cd) {
    if (cd.kind != CombinedDiagram::Kind::XSwap)
        throw GridError(GridErrorCode::NotAnXSwap, "combined diagram is not an X swap");
    ChainMap f;
    f.name = "P_X_big";
    f.src = cd.plus;
    f.tgt = cd.minus;
    f.src_theory = f.tgt_theory = Theory::FilteredOBig;
    f.deg_m = 1;
    f.deg_twoA = link_components(cd.plus).count - link_components(cd.minus).count + 1;
    f.bigraded = false;
    const CombinedDiagram::Strip S = cd.strip;
    f.eval = [S](const GridState& x) {
        return strip_pentagon_eval(S, StripSide::PlusState, true, x, UINT64_MAX);
    };
    return f;
}

ChainMap pinch_map_O(const CombinedDiagram& cd) {
    if (cd.kind != CombinedDiagram::Kind::OSwap)
        throw GridError(GridErrorCode::NotAnOSwap, "combined diagram is not an O swap");
    ChainMap f;
    f.name = "P_O_big";
    f.src = cd.plus;
    f.tgt = cd.minus;
    f.src_theory = f.tgt_theory = Theory::FilteredOBig;
    f.deg_m = 1;
    f.deg_twoA = link_components(cd.plus).count - link_components(cd.minus).count + 1;
    f.bigraded = false;
    const CombinedDiagram::Strip S = cd.strip;
    f.eval = [S](const GridState& x) {
        ChainElement e;
        if (triangle_exists(S, StripSide::PlusState, x)) e.add(x.rank(), Monomial{});
        return e;
    };
    return f;
}

std::vector<std::pair<int, int>> find_stabilization_blocks(const GridDiagram& G,
                                                           Marker m, Corner c) {
    std::vector<std::pair<int, int>> out;
    const int n = G.n;
    for (int col = 0; col + 1 < n; ++col) {
        for (int row = 0; row + 1 < n; ++row) {
            try {
                apply_move(G, GridMove::destabilize(m, c, col, row));
                out.emplace_back(col, row);
            } catch (const GridError&) {
            }
        }
    }
    return out;
}

namespace {

bool cell_in(const GridComplex& C, const Rectangle& r, int col, int row) {
    return C.in_cols(r, col) && C.in_rows(r, row);
}

StabSuite stabilization_maps_se(const GridDiagram& Gp, int col, int row) {
    const int n = Gp.n;
    if (!(Gp.O[col] == row + 1 && Gp.X[col + 1] == row + 1 && Gp.X[col] == row &&
          Gp.O[col + 1] != row))
        throw GridError(GridErrorCode::NotAStabilization,
                        "no X:SE block with lower-left cell here");
    StabSuite S;
    S.Gp = Gp;
    S.G = apply_move(Gp, GridMove::destabilize(Marker::X, Corner::SE, col, row));
    S.corner = Corner::SE;
    S.col = col;
    S.row = row;
    S.v1_col = col;
    S.v2_col = Gp.o_row[row];
    const int cc = col + 1, cr = row + 1;
    S.in_I = [cc, cr](const GridState& x) { return x.s[cc] == cr; };
    S.lift = [col, row, n](const GridState& s) {
        GridState y;
        y.s.assign(n, -1);
        y.s[col + 1] = row + 1;
        for (int v = 0; v < n - 1; ++v)
            y.s[v <= col ? v : v + 1] = s.s[v] <= row ? s.s[v] : s.s[v] + 1;
        return y;
    };
    S.drop = [col, row, n](const GridState& y) {
        GridState s;
        s.s.assign(n - 1, -1);
        for (int v = 0; v < n; ++v) {
            if (v == col + 1) continue;
            int w = y.s[v];
            s.s[v < col + 1 ? v : v - 1] = w <= row ? w : w - 1;
        }
        return s;
    };

    auto in_I = S.in_I;
    GridDiagram G = Gp;

    ChainMap HN;
    HN.name = "H^N_X2_big";
    HN.src = HN.tgt = Gp;
    HN.src_theory = HN.tgt_theory = Theory::MinusXBig;
    HN.deg_m = 1;
    HN.deg_twoA = 2;
    HN.bigraded = true;
    HN.eval = [G, col, row, in_I](const GridState& x) {
        ChainElement out;
        if (!in_I(x)) return out;
        GridComplex C(G);
        C.for_each_rect(x, [&](const Rectangle& r, int p, int q) {
            if (r.x_count != 1 || !cell_in(C, r, col, row)) return;
            GridState y = x;
            std::swap(y.s[p], y.s[q]);
            if (in_I(y)) return;
            Monomial m;
            m.v_exp = r.interior_points;
            for (int c : r.o_cols) m = m.times_V(c);
            out.add(y.rank(), m);
        });
        return out;
    };
    S.HN = HN;

    ChainMap HO1;
    HO1.name = "H^-_O1_big";
    HO1.src = HO1.tgt = Gp;
    HO1.src_theory = HO1.tgt_theory = Theory::MinusXBig;
    HO1.deg_m = -1;
    HO1.deg_twoA = -2;
    HO1.bigraded = true;
    HO1.eval = [G, col, row, in_I](const GridState& x) {
        ChainElement out;
        if (in_I(x)) return out;
        GridComplex C(G);
        C.for_each_rect(x, [&](const Rectangle& r, int p, int q) {
            if (r.x_count != 0 || !cell_in(C, r, col, row + 1)) return;
            GridState y = x;
            std::swap(y.s[p], y.s[q]);
            if (!in_I(y)) return;
            Monomial m;
            m.v_exp = r.interior_points;
            for (int c : r.o_cols)
                if (c != col) m = m.times_V(c);
            out.add(y.rank(), m);
        });
        return out;
    };
    S.HO1 = HO1;

    ChainMap HH;
    HH.name = "H^-_O1X2_big";
    HH.src = HH.tgt = Gp;
    HH.src_theory = HH.tgt_theory = Theory::MinusXBig;
    HH.deg_m = -1;
    HH.deg_twoA = 0;
    HH.bigraded = true;
    HH.eval = [G, col, row, n, in_I](const GridState& x) {
        ChainElement out;
        if (in_I(x)) return out;
        GridComplex C(G);
        C.for_each_rect(x, [&](const Rectangle& r, int p, int q) {
            if (r.x_count != 1 || !cell_in(C, r, col, row) ||
                !cell_in(C, r, col, row + 1))
                return;
            GridState y = x;
            std::swap(y.s[p], y.s[q]);
            if (in_I(y)) return;
            Monomial m;
            m.v_exp = r.interior_points;
            for (int c : r.o_cols)
                if (c != col) m = m.times_V(c);
            out.add(y.rank(), m);
        });
        // Long rectangles: width one in the block column, wrapping once
        // vertically, with multiplicity one at O1 and X2.
        GridState y = x;
        std::swap(y.s[col], y.s[col + 1]);
        if (!in_I(y)) {
            int delta = imod(x.s[col + 1] - x.s[col], n);
            auto doubled = [&](int w) { return imod(w - x.s[col], n) < delta; };
            if (!doubled(row) && !doubled(row + 1)) {
                Monomial m;
                m.v_exp = 1;
                out.add(y.rank(), m);
            }
        }
        return out;
    };
    S.HO1X2 = HH;
    return S;
}

ChainMap conjugate_by_rotation(const ChainMap& f, const GridDiagram& Gp_orig) {
    ChainMap g;
    g.name = f.name + "_rot";
    g.src = g.tgt = Gp_orig;
    g.src_theory = f.src_theory;
    g.tgt_theory = f.tgt_theory;
    g.deg_m = f.deg_m;
    g.deg_twoA = f.deg_twoA;
    g.bigraded = f.bigraded;
    const int n = Gp_orig.n;
    std::vector<int> relabel(n);
    for (int c = 0; c < n; ++c) relabel[c] = n - 1 - c;
    ChainMap inner = f;
    g.eval = [inner, relabel, n](const GridState& x) {
        ChainElement nat = inner.eval(rotate_state(x));
        ChainElement out;
        for (auto& [r, poly] : nat.terms) {
            uint64_t rr = rotate_state(GridState::unrank(r, n)).rank();
            for (auto& mono : poly.terms) out.add(rr, mono.relabel(relabel));
        }
        return out;
    };
    return g;
}

}  // namespace

StabSuite stabilization_maps(const GridDiagram& Gp, Corner corner, int col, int row) {
    if (corner == Corner::SE) return stabilization_maps_se(Gp, col, row);
    if (corner != Corner::NW)
        throw GridError(GridErrorCode::NotAStabilization,
                        "map suite exists for X:SE and X:NW blocks");
    // X:NW is the 180-degree rotation of X:SE.
    const int n = Gp.n;
    GridDiagram R = rotate180(Gp);
    StabSuite nat = stabilization_maps_se(R, n - 2 - col, n - 2 - row);
    StabSuite S;
    S.Gp = Gp;
    S.G = rotate180(nat.G);
    S.corner = Corner::NW;
    S.col = col;
    S.row = row;
    S.v1_col = n - 1 - nat.v1_col;
    S.v2_col = n - 1 - nat.v2_col;
    S.HN = conjugate_by_rotation(nat.HN, Gp);
    S.HO1 = conjugate_by_rotation(nat.HO1, Gp);
    S.HO1X2 = conjugate_by_rotation(nat.HO1X2, Gp);
    auto nat_in_I = nat.in_I;
    S.in_I = [nat_in_I](const GridState& x) { return nat_in_I(rotate_state(x)); };
    auto nat_lift = nat.lift;
    auto nat_drop = nat.drop;
    S.lift = [nat_lift](const GridState& s) {
        return rotate_state(nat_lift(rotate_state(s)));
    };
    S.drop = [nat_drop](const GridState& y) {
        return rotate_state(nat_drop(rotate_state(y)));
    };
    return S;
}

ChainElement StabSuite::d_II(const GridState& x) const {
    GridComplex C(Gp);
    ChainElement d = C.differential(x, Theory::MinusXBig);
    for (auto& [r, poly] : d.terms)
        if (!in_I(GridState::unrank(r, Gp.n)))
            throw GridError(GridErrorCode::Internal, "differential left the I complex");
    return d;
}

ChainElement StabSuite::d_NN(const GridState& x) const {
    GridComplex C(Gp);
    ChainElement d = C.differential(x, Theory::MinusXBig), out;
    for (auto& [r, poly] : d.terms)
        if (!in_I(GridState::unrank(r, Gp.n))) out.terms[r] = poly;
    return out;
}

ChainElement StabSuite::d_NI(const GridState& x) const {
    GridComplex C(Gp);
    ChainElement d = C.differential(x, Theory::MinusXBig), out;
    for (auto& [r, poly] : d.terms)
        if (in_I(GridState::unrank(r, Gp.n))) out.terms[r] = poly;
    return out;
}

TransStabMaps transported_stab_maps(const GridDiagram& Gp, Corner corner, int col,
                                    int row) {
    if (corner != Corner::SW && corner != Corner::NE)
        throw GridError(GridErrorCode::NotAStabilization,
                        "transported maps exist for X:SW and X:NE blocks");
    const int n = Gp.n;
    TransStabMaps T;
    T.Gp = Gp;
    T.G = apply_move(Gp, GridMove::destabilize(Marker::X, corner, col, row));
    T.corner = corner;
    T.col = col;
    T.row = row;
    // X2 is the new X sharing O1's column.
    const int x2_col = corner == Corner::SW ? col + 1 : col;
    const int x2_row = corner == Corner::SW ? row : row + 1;
    T.v2_col = Gp.o_row[x2_row];
    const int cc = col + 1, cr = row + 1;
    T.in_I = [cc, cr](const GridState& x) { return x.s[cc] == cr; };
    T.drop = [col, row, n](const GridState& y) {
        GridState s;
        s.s.assign(n - 1, -1);
        for (int v = 0; v < n; ++v) {
            if (v == col + 1) continue;
            int w = y.s[v];
            s.s[v < col + 1 ? v : v - 1] = w <= row ? w : w - 1;
        }
        return s;
    };
    ChainMap HI;
    HI.name = "H^I_X2_big";
    HI.src = HI.tgt = Gp;
    HI.src_theory = HI.tgt_theory = Theory::MinusXBig;
    HI.deg_m = 1;
    HI.deg_twoA = 2;
    HI.bigraded = true;
    auto in_I = T.in_I;
    GridDiagram G = Gp;
    HI.eval = [G, x2_col, x2_row, in_I](const GridState& x) {
        ChainElement out;
        if (in_I(x)) return out;
        GridComplex C(G);
        C.for_each_rect(x, [&](const Rectangle& r, int p, int q) {
            if (r.x_count != 1 || !cell_in(C, r, x2_col, x2_row)) return;
            GridState y = x;
            std::swap(y.s[p], y.s[q]);
            if (!in_I(y)) return;
            Monomial m;
            m.v_exp = r.interior_points;
            for (int c : r.o_cols) m = m.times_V(c);
            out.add(y.rank(), m);
        });
        return out;
    };
    T.HI = HI;
    return T;
}

GridDiagram insert_birth_block(const GridDiagram& Gm, int c0m) {
    const int n = Gm.n;
    const int r0m = Gm.O[c0m];
    std::vector<int> X(n + 2, -1), O(n + 2, -1);
    auto fc = [&](int c) { return c <= c0m ? c : c + 2; };
    auto fr = [&](int r) { return r < r0m ? r : r + 2; };
    for (int c = 0; c < n; ++c) {
        X[fc(c)] = fr(Gm.X[c]);
        O[fc(c)] = fr(Gm.O[c]);
    }
    const int r0 = r0m + 2;
    O[c0m + 1] = r0 - 1;
    X[c0m + 1] = r0 - 2;
    X[c0m + 2] = r0 - 1;
    O[c0m + 2] = r0 - 2;
    return validate_grid(n + 2, std::move(X), std::move(O));
}

BirthData birth_map(const GridDiagram& Gm, const GridDiagram& Gp) {
    if (Gp.n != Gm.n + 2)
        throw GridError(GridErrorCode::NotABirth, "sizes do not differ by two");
    const int n = Gp.n;
    int c0 = -1, r0 = -1;
    for (int c = 0; c + 2 < n && c0 < 0; ++c) {
        for (int r = 2; r < n; ++r) {
            if (!(Gp.O[c] == r && Gp.O[c + 1] == r - 1 && Gp.X[c + 1] == r - 2 &&
                  Gp.X[c + 2] == r - 1 && Gp.O[c + 2] == r - 2))
                continue;
            // deleting the block must reproduce Gm
            std::vector<int> X(n - 2, -1), O(n - 2, -1);
            auto sc = [&](int v) { return v <= c ? v : v - 2; };
            auto sr = [&](int w) { return w <= r - 2 ? w : w - 2; };
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (v == c + 1 || v == c + 2) continue;
                X[sc(v)] = sr(Gp.X[v]);
                O[sc(v)] = sr(Gp.O[v]);
            }
            if (ok && X == Gm.X && O == Gm.O) {
                c0 = c;
                r0 = r;
                break;
            }
        }
    }
    if (c0 < 0)
        throw GridError(GridErrorCode::NotABirth,
                        "no birth block producing the smaller grid");

    BirthData D;
    D.Gm = Gm;
    D.Gp = Gp;
    D.c0 = c0;
    D.r0 = r0;
    const int a_col = c0 + 1, a_row = r0;
    const int b_col = c0 + 2, b_row = r0 - 1;
    D.in_NB = [a_col, a_row, b_col, b_row](const GridState& x) {
        return x.s[a_col] != a_row && x.s[b_col] == b_row;
    };
    auto in_NB = D.in_NB;
    auto drop = [c0, r0, n](const GridState& y) {
        GridState s;
        s.s.assign(n - 2, -1);
        for (int v = 0; v < n; ++v) {
            if (v == c0 + 1 || v == c0 + 2) continue;
            int w = y.s[v];
            s.s[v < c0 + 1 ? v : v - 2] = w <= r0 - 2 ? w : w - 2;
        }
        return s;
    };
    ChainMap B;
    B.name = "B_big";
    B.src = Gp;
    B.tgt = Gm;
    B.src_theory = B.tgt_theory = Theory::FilteredOBig;
    B.deg_m = -1;
    B.deg_twoA = 0;
    B.bigraded = false;
    GridDiagram GpCopy = Gp;
    B.eval = [GpCopy, in_NB, drop, c0, r0, n](const GridState& x) {
        ChainElement out;
        if (!in_NB(x)) return out;
        GridComplex C(GpCopy);
        C.for_each_rect(x, [&](const Rectangle& r, int p, int q) {
            if (r.o_count != 2) return;
            if (!cell_in(C, r, c0 + 1, r0 - 1) || !cell_in(C, r, c0 + 2, r0 - 2))
                return;  // O2, O3
            if (!cell_in(C, r, c0 + 1, r0 - 2) || !cell_in(C, r, c0 + 2, r0 - 1))
                return;  // X2, X3
            int dc = imod(c0 + 2 - r.c_sw, n);
            int dr = imod(r0 - 1 - r.r_sw, n);
            if (!(dc > 0 && dc < r.width && dr > 0 && dr < r.height))
                return;  // b interior
            GridState y = x;
            std::swap(y.s[p], y.s[q]);
            if (!(y.s[c0 + 1] == r0 && y.s[c0 + 2] == r0 - 1)) return;  // y in AB
            Monomial m;
            m.v_exp = r.interior_points - 1;  // b itself does not count
            out.add(drop(y).rank(), m);
        });
        return out;
    };
    D.B = B;
    return D;
}

ObstructionReport obstruct_cobordism(const GridDiagram& from, const GridDiagram& to,
                                     int jobs) {
    ObstructionReport rep;
    ClassicalInvariants cf = classical_invariants(from);
    ClassicalInvariants ct = classical_invariants(to);
    rep.rot_match = cf.rot == ct.rot;
    rep.chi = cf.tb - ct.tb;
    int dl = ct.components - cf.components;
    rep.parity_ok = (dl - rep.chi) % 2 == 0;
    rep.shift_a = -rep.chi;
    rep.shift_twoB = dl - rep.chi;

    LambdaReport lf = HomologyEngine(from, jobs).lambda_report();
    LambdaReport lt = HomologyEngine(to, jobs).lambda_report();
    rep.plus_vanishes_from = lf.plus.enhanced_vanishes;
    rep.minus_vanishes_from = lf.minus.enhanced_vanishes;
    rep.plus_vanishes_to = lt.plus.enhanced_vanishes;
    rep.minus_vanishes_to = lt.minus.enhanced_vanishes;

    if (!rep.rot_match || !rep.parity_ok) {
        rep.obstructed = true;
        rep.reason = "classical";
    } else if (rep.plus_vanishes_to && !rep.plus_vanishes_from) {
        rep.obstructed = true;
        rep.reason = "lambda_plus";
    } else if (rep.minus_vanishes_to && !rep.minus_vanishes_from) {
        rep.obstructed = true;
        rep.reason = "lambda_minus";
    }
    return rep;
}

}  // namespace gridhom
