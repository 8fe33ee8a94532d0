#include "gridhom/complex.hpp"

#include <algorithm>

namespace gridhom {

const char* theory_name(Theory t) {
    switch (t) {
        case Theory::TildeOX: return "tilde_OX";
        case Theory::TildeOXBig: return "tilde_OX_big";
        case Theory::FilteredO: return "filtered_O";
        case Theory::FilteredOBig: return "filtered_O_big";
        case Theory::MinusX: return "minus_X";
        case Theory::MinusXBig: return "minus_X_big";
    }
    return "?";
}

GridComplex::GridComplex(GridDiagram G) : G_(std::move(G)) {
    l_ = link_components(G_).count;
}

Bigrading GridComplex::gradings(const GridState& x) const {
    const int n = G_.n;
    const auto& s = x.s;
    const auto& X = G_.X;
    const auto& O = G_.O;
    // All pair-counting functions evaluated in the fundamental domain; the
    // half-integer marking offsets turn strict/non-strict comparisons into
    // the <= / < pairs below.
    int Ixx = 0, IxO = 0, IOx = 0, IOO = 0, IxX = 0, IXx = 0, IXX = 0;
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
            if (a < c && s[a] < s[c]) ++Ixx;
            if (a <= c && s[a] <= O[c]) ++IxO;
            if (c < a && O[c] < s[a]) ++IOx;
            if (a <= c && s[a] <= X[c]) ++IxX;
            if (c < a && X[c] < s[a]) ++IXx;
            if (a < c && O[a] < O[c]) ++IOO;
            if (a < c && X[a] < X[c]) ++IXX;
        }
    }
    // M = J(x,x) - 2 J(x,O) + J(O,O) + 1, with 2 J(x,O) = I(x,O) + I(O,x).
    int M = Ixx - IxO - IOx + IOO + 1;
    int MX = Ixx - IxX - IXx + IXX + 1;
    return {M, (M - MX) - (n - l_)};
}

void GridComplex::for_each_rect(
    const GridState& x,
    const std::function<void(const Rectangle&, int, int)>& f) const {
    const int n = G_.n;
    Rectangle r;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            r.c_sw = p;
            r.r_sw = x.s[p];
            r.c_ne = q;
            r.r_ne = x.s[q];
            r.width = (q - p + n) % n;
            r.height = (x.s[q] - x.s[p] + n) % n;
            r.x_count = 0;
            r.o_count = 0;
            r.o_cols.clear();
            r.interior_points = 0;
            for (int d = 0; d < r.width; ++d) {
                int c = (p + d) % n;
                if (in_rows(r, G_.X[c])) ++r.x_count;
                if (in_rows(r, G_.O[c])) {
                    ++r.o_count;
                    r.o_cols.push_back(c);
                }
                // Interior lattice points: columns strictly inside, heights
                // strictly inside (the SW lines are boundary).
                if (d > 0 && in_rows(r, x.s[c]) && x.s[c] != r.r_sw)
                    ++r.interior_points;
            }
            f(r, p, q);
        }
    }
}

ChainElement GridComplex::differential(const GridState& x, Theory t) const {
    ChainElement out;
    const bool big = theory_big(t);
    const bool blockX = theory_blocks_X(t);
    const bool blockO = theory_blocks_O(t);
    const bool withV = theory_has_V(t);
    for_each_rect(x, [&](const Rectangle& r, int p, int q) {
        if (blockX && r.x_count) return;
        if (blockO && r.o_count) return;
        if (!big && r.interior_points) return;
        Monomial m;
        if (big) m.v_exp = r.interior_points;
        if (withV)
            for (int c : r.o_cols) m = m.times_V(c);
        GridState y = x;
        std::swap(y.s[p], y.s[q]);
        out.add(y.rank(), m);
    });
    return out;
}

ChainElement GridComplex::differential_element(const ChainElement& e, Theory t) const {
    ChainElement out;
    for (auto& [r, poly] : e.terms) {
        ChainElement d = differential(GridState::unrank(r, G_.n), t);
        for (auto& mono : poly.terms) out.add_scaled(mono, d);
    }
    return out;
}

std::vector<Rectangle> rectangles(const GridDiagram& G, const GridState& x,
                                  const GridState& y) {
    std::vector<Rectangle> out;
    if (x.s.size() != y.s.size()) return out;
    std::vector<int> diff;
    for (size_t c = 0; c < x.s.size(); ++c)
        if (x.s[c] != y.s[c]) diff.push_back(static_cast<int>(c));
    if (diff.size() != 2) return out;
    int p = diff[0], q = diff[1];
    if (y.s[p] != x.s[q] || y.s[q] != x.s[p]) return out;
    GridComplex C(G);
    C.for_each_rect(x, [&](const Rectangle& r, int rp, int rq) {
        if ((rp == p && rq == q) || (rp == q && rq == p)) out.push_back(r);
    });
    return out;
}

}  // namespace gridhom
