#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridhom/perm.hpp"

namespace gridhom {

enum class GridErrorCode {
    SizeTooSmall,
    NotPermutation,
    SharedSquare,
    IllegalCommutation,
    NoSuchPattern,
    OutOfRange,
    NotRelated,
    NotACommutation,
    NotAnXSwap,
    NotAnOSwap,
    NotAStabilization,
    NotABirth,
    ParseError,
    Internal,
};

struct GridError : std::runtime_error {
    GridErrorCode code;
    GridError(GridErrorCode c, const std::string& msg)
        : std::runtime_error(msg), code(c) {}
};

// n x n grid diagram.  Rows are indexed 0..n-1 bottom to top, columns
// 0..n-1 left to right; X[c] / O[c] is the row of the marking in column c,
// drawn at the planar point (c+1/2, X[c]+1/2) of the torus [0,n) x [0,n).
struct GridDiagram {
    int n = 0;
    std::vector<int> X, O;          // column -> row
    std::vector<int> x_row, o_row;  // row -> column (derived views)

    bool operator==(const GridDiagram& o) const {
        return n == o.n && X == o.X && O == o.O;
    }
};

GridDiagram validate_grid(int n, std::vector<int> X, std::vector<int> O);

// Grid state: one point (c, s[c]) per column; a bijection between the
// vertical and horizontal circles.
struct GridState {
    std::vector<int> s;
    uint64_t rank() const { return perm_rank(s); }
    static GridState unrank(uint64_t r, int n) { return {perm_unrank(r, n)}; }
    bool operator==(const GridState&) const = default;
};

struct ComponentLabeling {
    int count = 0;
    std::vector<int> column_component;  // component id of the link strand
                                        // through the markings of column c
    std::vector<int> rep_o_column;      // chosen O-column k_i per component
};

ComponentLabeling link_components(const GridDiagram& G);

// x^- sits at the lower-left corners of the X markings, x^+ at the
// upper-right corners.
GridState canonical_x_minus(const GridDiagram& G);
GridState canonical_x_plus(const GridDiagram& G);

struct ClassicalInvariants {
    int tb = 0;
    int rot = 0;
    int sl = 0;  // tb - rot, the positive transverse pushoff
    int components = 0;
    int writhe = 0;  // of the front
    int cusps_up = 0, cusps_down = 0;
};

ClassicalInvariants classical_invariants(const GridDiagram& G);

// ---- Cromwell / Legendrian moves ----

enum class Axis { Row, Col };
enum class Marker { X, O };
enum class Corner { SE, NW, SW, NE };

struct GridMove {
    enum class Kind {
        CyclicRow,   // dir=+1: every row moves up one step (top row wraps to
                     // bottom); dir=-1 the inverse
        CyclicCol,   // dir=+1: every column moves right one step
        Commute,     // adjacent pair (index, index+1 mod n) on the given axis
        Stabilize,   // marker/corner at the marker's column `index`
        Destabilize  // inverse; (col,row) is the lower-left cell of the block
    };
    Kind kind;
    int dir = +1;
    Axis axis = Axis::Row;
    int index = 0;
    Marker marker = Marker::X;
    Corner corner = Corner::SE;
    int row = 0;

    static GridMove cyclic_row(int dir) { return {Kind::CyclicRow, dir, Axis::Row, 0, Marker::X, Corner::SE, 0}; }
    static GridMove cyclic_col(int dir) { return {Kind::CyclicCol, dir, Axis::Col, 0, Marker::X, Corner::SE, 0}; }
    static GridMove commute(Axis a, int i) { return {Kind::Commute, +1, a, i, Marker::X, Corner::SE, 0}; }
    static GridMove stabilize(Marker m, Corner c, int col) { return {Kind::Stabilize, +1, Axis::Row, col, m, c, 0}; }
    static GridMove destabilize(Marker m, Corner c, int col, int row) { return {Kind::Destabilize, +1, Axis::Row, col, m, c, row}; }
};

bool commutation_legal(const GridDiagram& G, Axis axis, int i);
GridDiagram apply_move(const GridDiagram& G, const GridMove& m);

// Diagram symmetries (used to transport stabilization-map kernels and to
// reduce column moves to row moves).
GridDiagram transpose(const GridDiagram& G);
GridDiagram rotate180(const GridDiagram& G);

std::string to_text(const GridDiagram& G);

}  // namespace gridhom
