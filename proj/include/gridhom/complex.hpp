#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gridhom/grid.hpp"
#include "gridhom/poly.hpp"

namespace gridhom {

// The six differential regimes: which markings block a rectangle, whether
// non-empty rectangles are counted (Big), and the coefficient ring.
enum class Theory {
    TildeOX,      // empty rectangles, no X, no O; over F
    TildeOXBig,   // all rectangles, no X, no O; v^(double points)
    FilteredO,    // empty rectangles, no O
    FilteredOBig, // all rectangles, no O; v^(double points)
    MinusX,       // empty rectangles, no X; V-monomials
    MinusXBig,    // all rectangles, no X; V-monomials and v-powers
};

inline bool theory_big(Theory t) {
    return t == Theory::TildeOXBig || t == Theory::FilteredOBig || t == Theory::MinusXBig;
}
inline bool theory_blocks_X(Theory t) {
    return t == Theory::TildeOX || t == Theory::TildeOXBig || t == Theory::MinusX ||
           t == Theory::MinusXBig;
}
inline bool theory_blocks_O(Theory t) {
    return t == Theory::TildeOX || t == Theory::TildeOXBig || t == Theory::FilteredO ||
           t == Theory::FilteredOBig;
}
inline bool theory_has_V(Theory t) {
    return t == Theory::MinusX || t == Theory::MinusXBig;
}
const char* theory_name(Theory t);

struct Bigrading {
    int m = 0;     // Maslov
    int twoA = 0;  // doubled Alexander (half-integral for links)
    bool operator==(const Bigrading&) const = default;
    auto operator<=>(const Bigrading&) const = default;
};

// An embedded torus rectangle from x to y: the two x-points sit at its SW
// and NE corners.  Support is columns [c_sw, c_sw+width) x rows
// [r_sw, r_sw+height), all cyclic.
struct Rectangle {
    int c_sw = 0, r_sw = 0;
    int c_ne = 0, r_ne = 0;
    int width = 0, height = 0;
    int x_count = 0, o_count = 0;
    std::vector<int> o_cols;    // columns whose O marking lies in the support
    int interior_points = 0;    // #(Int(r) cap x)
};

class GridComplex {
public:
    explicit GridComplex(GridDiagram G);

    const GridDiagram& grid() const { return G_; }
    int n() const { return G_.n; }
    int components() const { return l_; }

    Bigrading gradings(const GridState& x) const;

    // Enumerates all n(n-1) rectangles leaving x: f(rect, q) where q is the
    // moving column holding the NE corner; y = x * (p q).
    void for_each_rect(const GridState& x,
                       const std::function<void(const Rectangle&, int, int)>& f) const;

    ChainElement differential(const GridState& x, Theory t) const;
    ChainElement differential_element(const ChainElement& e, Theory t) const;

    bool in_cols(const Rectangle& r, int c) const {
        return static_cast<unsigned>((c - r.c_sw + G_.n) % G_.n) <
               static_cast<unsigned>(r.width);
    }
    bool in_rows(const Rectangle& r, int rr) const {
        return static_cast<unsigned>((rr - r.r_sw + G_.n) % G_.n) <
               static_cast<unsigned>(r.height);
    }

private:
    GridDiagram G_;
    int l_;
};

// Rect(x, y): empty unless y = x * (transposition); otherwise the two
// complementary rectangles.
std::vector<Rectangle> rectangles(const GridDiagram& G, const GridState& x,
                                  const GridState& y);

}  // namespace gridhom
