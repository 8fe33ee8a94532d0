#pragma once

#include <vector>

#include "gridhom/complex.hpp"
#include "gridhom/grid.hpp"

namespace gridhom {

// Combined diagram of two grids differing by one row/column commutation or
// by an X/O swap in adjacent rows.  The doubled horizontal circle is
// resolved at eighth-of-a-cell precision on the circle [0, 8n): column line
// c sits at 8c, a marking drawn on the line at 8c+4, and the two curve
// crossings at quarter offsets 8c+2 / 8c+6.  alpha belongs to `plus`,
// alpha' to `minus`; the curves cross exactly at a_pos and b_pos.
struct CombinedDiagram {
    enum class Kind { Commutation, XSwap, OSwap };

    GridDiagram minus, plus;  // as given
    Axis axis = Axis::Row;
    Kind kind = Kind::Commutation;
    int index = 0;  // commuted/swapped lower row (or column, axis Col)

    struct LineMark {
        int col;
        Marker type;
        bool in_minus_lower;  // drawn in row `strip` of minus
    };

    // Native strip data; for Axis::Col this refers to the transposed pair.
    struct Strip {
        GridDiagram minus, plus;
        int n = 0;
        int strip = 0;  // lower strip row i
        int line = 0;   // (i+1) mod n, the doubled circle
        int a_pos = 0, b_pos = 0;
        bool alpha_over_after_a = false;
        // For swaps: the crossing a sits in an arc free of the unswapped
        // strip markings and at least two vertical lines wide, so the
        // canonical-state tracking of the pinch lemmas applies.
        bool tracking_form = true;
        std::vector<LineMark> line_marks;
        // markings present as ordinary cells (everything off the line);
        // row -1 means the column's marking of that type is drawn on the line
        std::vector<int> cell_x_row, cell_o_row;

        bool alpha_over_at(int pos) const;  // pos must avoid a_pos/b_pos
        bool posts_between(int from, int to, int q) const;  // q in open right arc
    } strip;
};

// Detects the relation between the two grids and builds the combined
// diagram.  Throws NotRelated / IllegalCommutation / NotAnXSwap / ...
CombinedDiagram combined_diagram(const GridDiagram& G_minus, const GridDiagram& G_plus);

// A pentagon of the combined diagram, from a state of `source` to the state
// obtained by transposing the moving columns.  Ordinary pentagons follow the
// curve envelope through the distinguished crossing; long pentagons are thin
// height-one shapes in the two-sheeted horizontal unrolling.
struct Pentagon {
    int cp = 0;        // moving column holding the source's on-line point
    int cq = 0;        // other moving column
    bool rightward = false;
    bool below = false;      // support on the lower strip side
    bool is_long = false;
    int long_switch = 0;     // which crossing lift switches curves (0/1)
    int x_count = 0, o_count = 0;            // with multiplicity for long shapes
    std::vector<std::pair<int, int>> o_mult; // column -> multiplicity
    int interior_points = 0;                 // ordinary shapes only
};

enum class StripSide { MinusState, PlusState };

// All pentagons (ordinary and long) leaving x, unfiltered.
std::vector<Pentagon> pentagons_from(const CombinedDiagram::Strip& S, StripSide side,
                                     const GridState& x);

// The triangle count through the crossing b: an O-swap state maps to the
// same permutation on the other side, with coefficient 0 or 1.
bool triangle_exists(const CombinedDiagram::Strip& S, StripSide side,
                     const GridState& x);

}  // namespace gridhom
