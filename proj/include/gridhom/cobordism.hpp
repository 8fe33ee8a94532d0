#pragma once

#include <functional>

#include "gridhom/chainmap.hpp"
#include "gridhom/combined.hpp"

namespace gridhom {

enum class CommutationVariant { Filtered, Minus };

// Pentagon-counting commutation map, from cd.minus to cd.plus.  The filtered
// variant counts O-free pentagons weighted by v^(double points) and O-free
// long pentagons weighted by v; the minus variant counts X-free shapes with
// the O-multiplicity V-monomials.  `mutate_drop_long` drops one long-pentagon
// contribution (the first in enumeration order) for mutation testing.
ChainMap commutation_map(const CombinedDiagram& cd, CommutationVariant variant,
                         bool mutate_drop_long = false);

// Pinch maps from cd.plus to cd.minus.
ChainMap pinch_map_X(const CombinedDiagram& cd);
ChainMap pinch_map_O(const CombinedDiagram& cd);

// X:SE stabilization block suite on the stabilized grid Gp (block lower-left
// cell (col,row)); X:NW is served by conjugating with the 180-degree
// rotation.  States split I/N by membership of the block's center point.
struct StabSuite {
    GridDiagram Gp;  // stabilized, size n
    GridDiagram G;   // destabilized, size n-1
    Corner corner = Corner::SE;
    int col = 0, row = 0;
    int v1_col = 0, v2_col = 0;  // columns of O1 and O2

    ChainMap HN;     // I -> N, rectangles through X2
    ChainMap HO1;    // N -> I, X-free rectangles through O1 (V1 dropped)
    ChainMap HO1X2;  // N -> N, rectangles through O1 and X2, plus long ones

    std::function<bool(const GridState&)> in_I;
    std::function<GridState(const GridState&)> lift;  // e': S(G) -> I
    std::function<GridState(const GridState&)> drop;  // e

    // Differential components of the unblocked enhanced theory on Gp.
    ChainElement d_II(const GridState& x) const;  // x in I
    ChainElement d_NN(const GridState& x) const;  // x in N, N part
    ChainElement d_NI(const GridState& x) const;  // x in N, I part
};

std::vector<std::pair<int, int>> find_stabilization_blocks(const GridDiagram& G,
                                                           Marker m, Corner c);
StabSuite stabilization_maps(const GridDiagram& Gp, Corner corner, int col, int row);

// X:SW / X:NE transported map H^I_{X2}: N -> I with the I ~ S(G)
// identification, for tracking the canonical classes through Legendrian
// stabilizations.
struct TransStabMaps {
    GridDiagram Gp, G;
    Corner corner;
    int col = 0, row = 0;
    int v2_col = 0;  // the U-action column on the stabilized side
    ChainMap HI;     // N -> I
    std::function<bool(const GridState&)> in_I;
    std::function<GridState(const GridState&)> drop;  // I -> S(G)
};
TransStabMaps transported_stab_maps(const GridDiagram& Gp, Corner corner, int col,
                                    int row);

// Birth block data and the induced filtered map Gp -> Gm.
struct BirthData {
    GridDiagram Gm, Gp;
    int c0 = 0, r0 = 0;  // O1 cell in Gp; block at cols c0+1..c0+2, rows r0-2..r0-1
    ChainMap B;
    std::function<bool(const GridState&)> in_NB;
};
BirthData birth_map(const GridDiagram& Gm, const GridDiagram& Gp);

// Inserts a birth block below-right of Gm's O in column c0m (used to build
// test pairs); returns the grown grid.
GridDiagram insert_birth_block(const GridDiagram& Gm, int c0m);

struct ObstructionReport {
    bool rot_match = false;
    int chi = 0;
    bool parity_ok = false;
    // vanishing of the enhanced classes at the two ends
    bool plus_vanishes_from = false, plus_vanishes_to = false;
    bool minus_vanishes_from = false, minus_vanishes_to = false;
    bool obstructed = false;
    std::string reason;  // "classical", "lambda_plus", "lambda_minus" or empty
    int shift_a = 0, shift_twoB = 0;
};

// Decides whether a decomposable Lagrangian cobordism from the link of
// `from` to the link of `to` is obstructed.
ObstructionReport obstruct_cobordism(const GridDiagram& from, const GridDiagram& to,
                                     int jobs = 1);

}  // namespace gridhom
