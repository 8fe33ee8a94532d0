#include "gridhom/grid.hpp"

#include <algorithm>
#include <sstream>

namespace gridhom {

namespace {

bool is_permutation_of_range(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace

GridDiagram validate_grid(int n, std::vector<int> X, std::vector<int> O) {
    if (n < 2) throw GridError(GridErrorCode::SizeTooSmall, "grid size must be >= 2");
    if (!is_permutation_of_range(X, n))
        throw GridError(GridErrorCode::NotPermutation, "X is not a permutation of 0..n-1");
    if (!is_permutation_of_range(O, n))
        throw GridError(GridErrorCode::NotPermutation, "O is not a permutation of 0..n-1");
    for (int c = 0; c < n; ++c)
        if (X[c] == O[c])
            throw GridError(GridErrorCode::SharedSquare,
                            "X and O share the square in column " + std::to_string(c));
    GridDiagram G;
    G.n = n;
    G.X = std::move(X);
    G.O = std::move(O);
    G.x_row = perm_inverse(G.X);
    G.o_row = perm_inverse(G.O);
    return G;
}

ComponentLabeling link_components(const GridDiagram& G) {
    // Follow the link: column segment X->O, then row segment O->X. The
    // column-to-column step is c -> x_row[O[c]].
    ComponentLabeling L;
    L.column_component.assign(G.n, -1);
    for (int c0 = 0; c0 < G.n; ++c0) {
        if (L.column_component[c0] >= 0) continue;
        int id = L.count++;
        int rep = c0;
        int c = c0;
        do {
            L.column_component[c] = id;
            rep = std::min(rep, c);
            c = G.x_row[G.O[c]];
        } while (c != c0);
        L.rep_o_column.push_back(rep);
    }
    return L;
}

GridState canonical_x_minus(const GridDiagram& G) { return {G.X}; }

GridState canonical_x_plus(const GridDiagram& G) {
    std::vector<int> s(G.n);
    for (int c = 0; c < G.n; ++c) s[(c + 1) % G.n] = (G.X[c] + 1) % G.n;
    return {s};
}

ClassicalInvariants classical_invariants(const GridDiagram& G) {
    ClassicalInvariants inv;
    inv.components = link_components(G).count;

    // Orientations: row segments run O -> X, column segments X -> O.
    // Away-directions at a marking classify its corner; NE and SW corners of
    // the grid projection become the cusps of the front.
    auto corner_of = [](bool away_east, bool away_north) {
        // {W,S}->NE  {E,S}->NW  {W,N}->SE  {E,N}->SW
        if (!away_east && !away_north) return Corner::NE;
        if (away_east && !away_north) return Corner::NW;
        if (!away_east && away_north) return Corner::SE;
        return Corner::SW;
    };
    for (int c = 0; c < G.n; ++c) {
        int r = G.X[c];
        bool h_east = G.o_row[r] > c;   // toward the O of this row
        bool v_north = G.O[c] > r;      // toward the O of this column
        Corner k = corner_of(h_east, v_north);
        if (k == Corner::NE) ++inv.cusps_down;  // X at a NE corner
        if (k == Corner::SW) ++inv.cusps_up;    // X at a SW corner
    }
    for (int c = 0; c < G.n; ++c) {
        int r = G.O[c];
        bool h_east = G.x_row[r] > c;
        bool v_north = G.X[c] > r;
        Corner k = corner_of(h_east, v_north);
        if (k == Corner::NE) ++inv.cusps_up;    // O at a NE corner
        if (k == Corner::SW) ++inv.cusps_down;  // O at a SW corner
    }

    // Writhe of the front: grid crossings have vertical over horizontal; the
    // front flips every crossing, negating the sign.
    int wr = 0;
    for (int c = 0; c < G.n; ++c) {
        int ylo = std::min(G.X[c], G.O[c]), yhi = std::max(G.X[c], G.O[c]);
        int sy = G.O[c] > G.X[c] ? +1 : -1;
        for (int r = ylo + 1; r < yhi; ++r) {
            int xlo = std::min(G.x_row[r], G.o_row[r]);
            int xhi = std::max(G.x_row[r], G.o_row[r]);
            if (xlo < c && c < xhi) {
                int sx = G.x_row[r] > G.o_row[r] ? +1 : -1;
                wr += sy * sx;  // = -(grid sign)
            }
        }
    }
    inv.writhe = wr;
    inv.tb = wr - (inv.cusps_up + inv.cusps_down) / 2;
    inv.rot = (inv.cusps_down - inv.cusps_up) / 2;
    inv.sl = inv.tb - inv.rot;
    return inv;
}

bool commutation_legal(const GridDiagram& G, Axis axis, int i) {
    int n = G.n;
    int j = (i + 1) % n;
    int a, b, c, d;
    if (axis == Axis::Row) {
        a = G.x_row[i], b = G.o_row[i], c = G.x_row[j], d = G.o_row[j];
    } else {
        a = G.X[i], b = G.O[i], c = G.X[j], d = G.O[j];
    }
    if (a == c || a == d || b == c || b == d) return false;
    // Interleaving test on the circle: the pair {a,b} must not alternate
    // with {c,d}.
    std::vector<std::pair<int, int>> pts = {{a, 0}, {b, 0}, {c, 1}, {d, 1}};
    std::sort(pts.begin(), pts.end());
    return pts[0].second != pts[2].second;  // alternating = interleaved = illegal
}

namespace {

GridDiagram stabilize(const GridDiagram& G, Marker marker, Corner corner, int col) {
    if (col < 0 || col >= G.n)
        throw GridError(GridErrorCode::OutOfRange, "stabilization column out of range");
    const int n = G.n, m = n + 1;
    const int r0 = marker == Marker::X ? G.X[col] : G.O[col];
    auto fc = [&](int c) { return c + (c > col ? 1 : 0); };
    auto fr = [&](int r) { return r + (r > r0 ? 1 : 0); };

    std::vector<int> X(m, -1), O(m, -1);
    for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        X[fc(c)] = fr(G.X[c]);
        O[fc(c)] = fr(G.O[c]);
    }
    const bool empty_right = corner == Corner::SE || corner == Corner::NE;
    const bool empty_top = corner == Corner::NW || corner == Corner::NE;
    // The split column's other marking moves to the half-column holding the
    // empty cell, and the split row's other marking to that half-row.
    if (marker == Marker::X) {
        O[col + (empty_right ? 1 : 0)] = fr(G.O[col]);
        O[fc(G.o_row[r0])] = r0 + (empty_top ? 1 : 0);
    } else {
        X[col + (empty_right ? 1 : 0)] = fr(G.X[col]);
        X[fc(G.x_row[r0])] = r0 + (empty_top ? 1 : 0);
    }
    // Block markings: the doubled marker on the diagonal avoiding the empty
    // cell, the single marking of the other type opposite the empty cell.
    auto put = [&](std::vector<int>& P, int c, int r) { P[c] = r; };
    std::vector<int>& D = marker == Marker::X ? X : O;  // doubled type
    std::vector<int>& S = marker == Marker::X ? O : X;  // single type
    switch (corner) {
        case Corner::SE: put(D, col + 1, r0 + 1); put(D, col, r0); put(S, col, r0 + 1); break;
        case Corner::NW: put(D, col, r0); put(D, col + 1, r0 + 1); put(S, col + 1, r0); break;
        case Corner::SW: put(D, col, r0 + 1); put(D, col + 1, r0); put(S, col + 1, r0 + 1); break;
        case Corner::NE: put(D, col, r0 + 1); put(D, col + 1, r0); put(S, col, r0); break;
    }
    return validate_grid(m, std::move(X), std::move(O));
}

GridDiagram destabilize(const GridDiagram& G, Marker marker, Corner corner, int col, int row) {
    const int n = G.n;
    if (n < 3 || col < 0 || col + 1 >= n || row < 0 || row + 1 >= n)
        throw GridError(GridErrorCode::OutOfRange, "destabilization block out of range");
    // The expected pattern in the 2x2 block with lower-left cell (col,row).
    auto at = [&](int c, int r, Marker t) {
        return t == Marker::X ? G.X[c] == r : G.O[c] == r;
    };
    Marker D = marker;
    Marker S = marker == Marker::X ? Marker::O : Marker::X;
    bool ok = false;
    switch (corner) {
        case Corner::SE:
            ok = at(col, row, D) && at(col + 1, row + 1, D) && at(col, row + 1, S);
            break;
        case Corner::NW:
            ok = at(col, row, D) && at(col + 1, row + 1, D) && at(col + 1, row, S);
            break;
        case Corner::SW:
            ok = at(col, row + 1, D) && at(col + 1, row, D) && at(col + 1, row + 1, S);
            break;
        case Corner::NE:
            ok = at(col, row + 1, D) && at(col + 1, row, D) && at(col, row, S);
            break;
    }
    if (!ok)
        throw GridError(GridErrorCode::NoSuchPattern,
                        "no destabilization pattern of the requested type at the block");
    auto shrink_c = [&](int c) { return c <= col ? c : (c == col + 1 ? col : c - 1); };
    auto shrink_r = [&](int r) { return r <= row ? r : (r == row + 1 ? row : r - 1); };
    std::vector<int> X(n - 1, -1), O(n - 1, -1);
    auto in_block = [&](int c, int r) {
        return (c == col || c == col + 1) && (r == row || r == row + 1);
    };
    for (int c = 0; c < n; ++c) {
        if (!in_block(c, G.X[c])) X[shrink_c(c)] = shrink_r(G.X[c]);
        if (!in_block(c, G.O[c])) O[shrink_c(c)] = shrink_r(G.O[c]);
    }
    (marker == Marker::X ? X : O)[col] = row;
    try {
        return validate_grid(n - 1, std::move(X), std::move(O));
    } catch (const GridError&) {
        throw GridError(GridErrorCode::NoSuchPattern,
                        "block is not an inserted stabilization square");
    }
}

}  // namespace

GridDiagram apply_move(const GridDiagram& G, const GridMove& m) {
    const int n = G.n;
    switch (m.kind) {
        case GridMove::Kind::CyclicRow: {
            int d = m.dir > 0 ? 1 : n - 1;
            std::vector<int> X(n), O(n);
            for (int c = 0; c < n; ++c) {
                X[c] = (G.X[c] + d) % n;
                O[c] = (G.O[c] + d) % n;
            }
            return validate_grid(n, std::move(X), std::move(O));
        }
        case GridMove::Kind::CyclicCol: {
            int d = m.dir > 0 ? 1 : n - 1;
            std::vector<int> X(n), O(n);
            for (int c = 0; c < n; ++c) {
                X[(c + d) % n] = G.X[c];
                O[(c + d) % n] = G.O[c];
            }
            return validate_grid(n, std::move(X), std::move(O));
        }
        case GridMove::Kind::Commute: {
            int i = m.index;
            if (i < 0 || i >= n)
                throw GridError(GridErrorCode::OutOfRange, "commutation index out of range");
            if (!commutation_legal(G, m.axis, i))
                throw GridError(GridErrorCode::IllegalCommutation,
                                "segments interleave; commutation not allowed");
            int j = (i + 1) % n;
            std::vector<int> X = G.X, O = G.O;
            if (m.axis == Axis::Row) {
                for (int c = 0; c < n; ++c) {
                    if (X[c] == i) X[c] = j;
                    else if (X[c] == j) X[c] = i;
                    if (O[c] == i) O[c] = j;
                    else if (O[c] == j) O[c] = i;
                }
            } else {
                std::swap(X[i], X[j]);
                std::swap(O[i], O[j]);
            }
            return validate_grid(n, std::move(X), std::move(O));
        }
        case GridMove::Kind::Stabilize:
            return stabilize(G, m.marker, m.corner, m.index);
        case GridMove::Kind::Destabilize:
            return destabilize(G, m.marker, m.corner, m.index, m.row);
    }
    throw GridError(GridErrorCode::Internal, "unknown move");
}

GridDiagram transpose(const GridDiagram& G) {
    return validate_grid(G.n, G.x_row, G.o_row);
}

GridDiagram rotate180(const GridDiagram& G) {
    std::vector<int> X(G.n), O(G.n);
    for (int c = 0; c < G.n; ++c) {
        X[G.n - 1 - c] = G.n - 1 - G.X[c];
        O[G.n - 1 - c] = G.n - 1 - G.O[c];
    }
    return validate_grid(G.n, std::move(X), std::move(O));
}

std::string to_text(const GridDiagram& G) {
    std::ostringstream os;
    os << G.n << "\n";
    os << "X:";
    for (int v : G.X) os << ' ' << v;
    os << "\nO:";
    for (int v : G.O) os << ' ' << v;
    os << "\n";
    return os.str();
}

}  // namespace gridhom
