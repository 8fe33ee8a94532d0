#include "gridhom/combined.hpp"

#include <algorithm>

namespace gridhom {

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

bool is_row_swap(const GridDiagram& A, const GridDiagram& B, int i) {
    const int n = A.n, j = (i + 1) % n;
    for (int c = 0; c < n; ++c) {
        int xa = A.X[c];
        if (B.X[c] != (xa == i ? j : xa == j ? i : xa)) return false;
        int oa = A.O[c];
        if (B.O[c] != (oa == i ? j : oa == j ? i : oa)) return false;
    }
    return true;
}

// Two markings of type `t` trade adjacent rows; everything else equal.
bool is_marker_swap(const GridDiagram& A, const GridDiagram& B, Marker t,
                    int& lower_row, int& col_lower, int& col_upper) {
    const auto& PA = t == Marker::X ? A.X : A.O;
    const auto& PB = t == Marker::X ? B.X : B.O;
    const auto& QA = t == Marker::X ? A.O : A.X;
    const auto& QB = t == Marker::X ? B.O : B.X;
    if (QA != QB) return false;
    const int n = A.n;
    std::vector<int> diff;
    for (int c = 0; c < n; ++c)
        if (PA[c] != PB[c]) diff.push_back(c);
    if (diff.size() != 2) return false;
    int ca = diff[0], cb = diff[1];
    if (PA[ca] != PB[cb] || PA[cb] != PB[ca]) return false;
    int ra = PA[ca], rb = PA[cb];
    if (imod(rb - ra, n) == 1) {
        lower_row = ra;
        col_lower = ca;   // in row `lower_row` of A
        col_upper = cb;
    } else if (imod(ra - rb, n) == 1) {
        lower_row = rb;
        col_lower = cb;
        col_upper = ca;
    } else {
        return false;
    }
    return true;
}

CombinedDiagram::Strip build_strip(const GridDiagram& Gm, const GridDiagram& Gp,
                                   CombinedDiagram::Kind kind, int i,
                                   std::vector<CombinedDiagram::LineMark> marks) {
    CombinedDiagram::Strip S;
    S.minus = Gm;
    S.plus = Gp;
    S.n = Gm.n;
    S.strip = i;
    S.line = (i + 1) % S.n;
    const int P = 8 * S.n;
    std::sort(marks.begin(), marks.end(),
              [](const auto& a, const auto& b) { return a.col < b.col; });
    S.line_marks = marks;

    // The curve order required at a mark drawn on the line: a marking in the
    // lower strip row of `minus` lies below alpha' and above alpha.
    auto req_prime_over = [](const CombinedDiagram::LineMark& m) {
        return m.in_minus_lower;
    };

    const int K = static_cast<int>(marks.size());
    std::vector<int> boundary;  // k: order flips between marks[k], marks[k+1]
    for (int k = 0; k < K; ++k)
        if (req_prime_over(marks[k]) != req_prime_over(marks[(k + 1) % K]))
            boundary.push_back(k);
    if (boundary.size() != 2)
        throw GridError(GridErrorCode::Internal, "combined diagram: bad mark layout");

    // Crossing in the gap following marks[k]: in the first interior cell of
    // the gap when the gap is at least two lines wide, else in the right
    // half of the mark's own cell.
    auto crossing_after = [&](int k) {
        int u = marks[k].col, w = marks[(k + 1) % K].col;
        bool interior = imod(w - u, S.n) >= 2;
        return interior ? imod(8 * (u + 1) + 2, P) : imod(8 * u + 6, P);
    };

    int a_boundary = -1;
    if (kind == CombinedDiagram::Kind::Commutation) {
        // a sits where, scanning rightward, the order flips to alpha'-over
        // (entering the arc of minus' lower-row pair).
        for (int k : boundary)
            if (!req_prime_over(marks[k]) && req_prime_over(marks[(k + 1) % K]))
                a_boundary = k;
    } else {
        // Pinches: prefer the arc free of the strip rows' unswapped markings
        // (the O columns for an X swap); the canonical-state pentagon and
        // triangle live there.
        Marker other = kind == CombinedDiagram::Kind::XSwap ? Marker::O : Marker::X;
        const auto& other_row_of =
            other == Marker::O ? Gm.o_row : Gm.x_row;
        int u0 = other_row_of[S.strip], u1 = other_row_of[S.line];
        auto arc_free = [&](int k) {
            int from = 8 * marks[k].col + 4;
            int to = 8 * marks[(k + 1) % K].col + 4;
            int len = imod(to - from, P);
            for (int u : {u0, u1}) {
                int d = imod(8 * u + 4 - from, P);
                if (d > 0 && d < len) return false;
            }
            return true;
        };
        bool f0 = arc_free(boundary[0]), f1 = arc_free(boundary[1]);
        if (f0 != f1)
            a_boundary = f0 ? boundary[0] : boundary[1];
        else {
            S.tracking_form = false;
            for (int k : boundary)
                if (!req_prime_over(marks[k])) a_boundary = k;
        }
        int u = marks[a_boundary].col, w = marks[(a_boundary + 1) % K].col;
        if (imod(w - u, S.n) < 2) S.tracking_form = false;
    }
    int b_boundary = boundary[0] == a_boundary ? boundary[1] : boundary[0];
    S.a_pos = crossing_after(a_boundary);
    S.b_pos = crossing_after(b_boundary);

    // Order on the (a, b) arc, read off any mark inside it.
    int ab = imod(S.b_pos - S.a_pos, P);
    bool found = false;
    for (auto& m : marks) {
        int d = imod(8 * m.col + 4 - S.a_pos, P);
        if (d > 0 && d < ab) {
            S.alpha_over_after_a = !req_prime_over(m);
            found = true;
            break;
        }
    }
    if (!found)
        throw GridError(GridErrorCode::Internal, "combined diagram: empty crossing arc");

    // Markings still drawn in cells (everything not on the doubled line).
    S.cell_x_row = Gm.X;
    S.cell_o_row = Gm.O;
    for (auto& m : marks)
        (m.type == Marker::X ? S.cell_x_row : S.cell_o_row)[m.col] = -1;
    return S;
}

}  // namespace

bool CombinedDiagram::Strip::alpha_over_at(int pos) const {
    const int P = 8 * n;
    int d = imod(pos - a_pos, P);
    int ab = imod(b_pos - a_pos, P);
    return (d > 0 && d < ab) ? alpha_over_after_a : !alpha_over_after_a;
}

CombinedDiagram combined_diagram(const GridDiagram& Gm, const GridDiagram& Gp) {
    if (Gm.n != Gp.n)
        throw GridError(GridErrorCode::NotRelated, "grids have different sizes");
    if (Gm == Gp)
        throw GridError(GridErrorCode::NotRelated, "grids are identical");
    const int n = Gm.n;

    CombinedDiagram cd;
    cd.minus = Gm;
    cd.plus = Gp;

    auto commutation_marks = [&](const GridDiagram& A, int i) {
        int j = (i + 1) % n;
        std::vector<CombinedDiagram::LineMark> marks;
        marks.push_back({A.x_row[i], Marker::X, true});
        marks.push_back({A.o_row[i], Marker::O, true});
        marks.push_back({A.x_row[j], Marker::X, false});
        marks.push_back({A.o_row[j], Marker::O, false});
        return marks;
    };

    for (int i = 0; i < n; ++i) {
        if (is_row_swap(Gm, Gp, i)) {
            if (!commutation_legal(Gm, Axis::Row, i))
                throw GridError(GridErrorCode::IllegalCommutation,
                                "rows share a column span endpoint or interleave");
            cd.axis = Axis::Row;
            cd.kind = CombinedDiagram::Kind::Commutation;
            cd.index = i;
            cd.strip = build_strip(Gm, Gp, cd.kind, i, commutation_marks(Gm, i));
            return cd;
        }
    }
    {
        GridDiagram Tm = transpose(Gm), Tp = transpose(Gp);
        for (int i = 0; i < n; ++i) {
            if (is_row_swap(Tm, Tp, i)) {
                if (!commutation_legal(Gm, Axis::Col, i))
                    throw GridError(GridErrorCode::IllegalCommutation,
                                    "columns share a row span endpoint or interleave");
                cd.axis = Axis::Col;
                cd.kind = CombinedDiagram::Kind::Commutation;
                cd.index = i;
                cd.strip = build_strip(Tm, Tp, cd.kind, i, commutation_marks(Tm, i));
                return cd;
            }
        }
    }
    for (Marker t : {Marker::X, Marker::O}) {
        int lower_row, col_lower, col_upper;
        if (is_marker_swap(Gm, Gp, t, lower_row, col_lower, col_upper)) {
            cd.axis = Axis::Row;
            cd.kind = t == Marker::X ? CombinedDiagram::Kind::XSwap
                                     : CombinedDiagram::Kind::OSwap;
            cd.index = lower_row;
            std::vector<CombinedDiagram::LineMark> marks = {
                {col_lower, t, true}, {col_upper, t, false}};
            cd.strip = build_strip(Gm, Gp, cd.kind, lower_row, std::move(marks));
            return cd;
        }
    }
    throw GridError(GridErrorCode::NotRelated,
                    "grids do not differ by one commutation or marker swap");
}

namespace {

void fill_counts(const CombinedDiagram::Strip& S, const GridState& x, Pentagon& p,
                 int h) {
    const int n = S.n;
    const int w = p.rightward ? imod(p.cq - p.cp, n) : imod(p.cp - p.cq, n);
    int rows_start, rows_len;
    if (p.below) {
        rows_start = h;
        rows_len = imod(S.strip - h, n) + 1;
    } else {
        rows_start = S.line;
        rows_len = imod(h - S.line, n);
    }
    auto in_rows = [&](int r) { return r >= 0 && imod(r - rows_start, n) < rows_len; };
    for (int d = 0; d < w; ++d) {
        int c = p.rightward ? (p.cp + d) % n : imod(p.cp - 1 - d, n);
        if (in_rows(S.cell_x_row[c])) ++p.x_count;
        if (in_rows(S.cell_o_row[c])) {
            ++p.o_count;
            p.o_mult.emplace_back(c, 1);
        }
    }
    for (int d = 1; d < w; ++d) {
        int c = p.rightward ? (p.cp + d) % n : imod(p.cp - d, n);
        int v = x.s[c];
        if (p.below) {
            int iv = imod(v - h, n);
            if (iv > 0 && iv <= imod(S.strip - h, n)) ++p.interior_points;
        } else {
            int iv = imod(v - S.line, n);
            if (iv > 0 && iv < imod(h - S.line, n)) ++p.interior_points;
        }
    }
}

}  // namespace

std::vector<Pentagon> pentagons_from(const CombinedDiagram::Strip& S, StripSide side,
                                     const GridState& x) {
    const int n = S.n, P = 8 * n;
    const bool src_is_alpha = side == StripSide::PlusState;
    std::vector<Pentagon> out;
    int cp = -1;
    for (int c = 0; c < n; ++c)
        if (x.s[c] == S.line) {
            cp = c;
            break;
        }
    if (cp < 0)
        throw GridError(GridErrorCode::Internal, "state has no point on the line");

    for (int cq = 0; cq < n; ++cq) {
        if (cq == cp) continue;
        const int h = x.s[cq];
        for (int dir = 0; dir < 2; ++dir) {
            const bool right = dir == 0;
            const int from = 8 * cp;
            const int span = right ? imod(8 * cq - from, P) : imod(from - 8 * cq, P);
            auto arc_dist = [&](int q) {
                return right ? imod(q - from, P) : imod(from - q, P);
            };
            const int da = arc_dist(S.a_pos);
            const int db = arc_dist(S.b_pos);

            if (da < span && !(db < span)) {
                // Ordinary pentagon: the on-line edge follows the envelope
                // through a, which pins the shape to one side of the line.
                int sample = imod(from + (right ? 1 : -1), P);
                bool alpha_over = S.alpha_over_at(sample);
                bool src_under = src_is_alpha ? !alpha_over : alpha_over;
                Pentagon p;
                p.cp = cp;
                p.cq = cq;
                p.rightward = right;
                p.below = src_under;
                fill_counts(S, x, p, h);
                out.push_back(std::move(p));
            }

            // Long pentagons: height one, wrapping once around horizontally.
            const bool below_long = h == S.strip;
            const bool above_long = h == (S.line + 1) % n;
            if (!below_long && !above_long) continue;
            const int L = span + P;
            for (int lift = 0; lift < 2; ++lift) {
                int ts = da + lift * P;
                if (ts <= 0 || ts >= L) continue;
                int approach = imod(S.a_pos - (right ? 1 : -1), P);
                bool alpha_over = S.alpha_over_at(approach);
                bool src_under = src_is_alpha ? !alpha_over : alpha_over;
                if (src_under != below_long) continue;
                Pentagon p;
                p.cp = cp;
                p.cq = cq;
                p.rightward = right;
                p.below = below_long;
                p.is_long = true;
                p.long_switch = lift;
                const int row = below_long ? S.strip : S.line;
                const int w = span / 8;
                for (int c = 0; c < n; ++c) {
                    int dc = right ? imod(8 * c - from, P) : imod(from - 8 * (c + 1), P);
                    int mult = dc / 8 < w ? 2 : 1;
                    if (S.cell_x_row[c] == row) p.x_count += mult;
                    if (S.cell_o_row[c] == row) {
                        p.o_count += mult;
                        p.o_mult.emplace_back(c, mult);
                    }
                }
                for (auto& m : S.line_marks) {
                    int pos = 8 * m.col + 4;
                    int t0 = arc_dist(pos);
                    int cnt = 0;
                    for (int hit = 0; hit < 2; ++hit) {
                        int th = t0 + hit * P;
                        if (th <= 0 || th >= L) continue;
                        bool cur_alpha = (th < ts) == src_is_alpha;
                        bool pass_over = cur_alpha == S.alpha_over_at(pos);
                        if (pass_over == below_long) ++cnt;
                    }
                    if (!cnt) continue;
                    if (m.type == Marker::X)
                        p.x_count += cnt;
                    else {
                        p.o_count += cnt;
                        p.o_mult.emplace_back(m.col, cnt);
                    }
                }
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

bool triangle_exists(const CombinedDiagram::Strip& S, StripSide side,
                     const GridState& x) {
    const int n = S.n, P = 8 * n;
    const bool src_is_alpha = side == StripSide::PlusState;
    int cstar = -1;
    for (int c = 0; c < n; ++c)
        if (x.s[c] == S.line) {
            cstar = c;
            break;
        }
    const int target = 8 * cstar;
    for (int dir = 0; dir < 2; ++dir) {
        const bool right = dir == 0;
        int span = right ? imod(target - S.b_pos, P) : imod(S.b_pos - target, P);
        int da = right ? imod(S.a_pos - S.b_pos, P) : imod(S.b_pos - S.a_pos, P);
        if (da < span) continue;  // sliver would pinch at the other crossing
        // Boundary orientation visits x, b, y in this order.
        int sample = imod(S.b_pos + (right ? 1 : -1), P);
        bool alpha_over = S.alpha_over_at(sample);
        bool x_over = src_is_alpha ? alpha_over : !alpha_over;
        if (x_over != right) return false;
        for (auto& m : S.line_marks) {
            if (m.type != Marker::O) continue;
            int d = right ? imod(8 * m.col + 4 - S.b_pos, P)
                          : imod(S.b_pos - 8 * m.col - 4, P);
            if (d > 0 && d < span) return false;
        }
        return true;
    }
    return false;
}

}  // namespace gridhom
