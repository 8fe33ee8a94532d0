#include "doctest.h"

#include <random>

#include "gridhom/gridio.hpp"
#include "gridhom/verify.hpp"

using namespace gridhom;

namespace {
const GridDiagram kUnknot = validate_grid(2, {1, 0}, {0, 1});
}

TEST_CASE("validation") {
    CHECK(kUnknot.n == 2);
    CHECK_THROWS_AS(validate_grid(2, {0, 1}, {0, 1}), GridError);
    try {
        validate_grid(2, {0, 1}, {0, 1});
    } catch (const GridError& e) {
        CHECK(e.code == GridErrorCode::SharedSquare);
    }
    try {
        validate_grid(3, {0, 0, 1}, {1, 2, 0});
    } catch (const GridError& e) {
        CHECK(e.code == GridErrorCode::NotPermutation);
    }
    try {
        validate_grid(1, {0}, {0});
    } catch (const GridError& e) {
        CHECK(e.code == GridErrorCode::SizeTooSmall);
    }
}

TEST_CASE("link components") {
    CHECK(link_components(kUnknot).count == 1);
    // Two split hopf-free circles: hand-traced two 2-cycles.
    GridDiagram G = validate_grid(4, {1, 0, 3, 2}, {0, 1, 2, 3});
    auto L = link_components(G);
    CHECK(L.count == 2);
    CHECK(L.column_component[0] == L.column_component[1]);
    CHECK(L.column_component[2] == L.column_component[3]);
    CHECK(L.column_component[0] != L.column_component[2]);
    // Marking partition: every column belongs to exactly one component, so
    // markings-per-component sums to 2n.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        GridDiagram R = random_grid(5, rng);
        auto lab = link_components(R);
        std::vector<int> count(lab.count, 0);
        for (int c = 0; c < R.n; ++c) count[lab.column_component[c]] += 2;
        int total = 0;
        for (int v : count) total += v;
        CHECK(total == 2 * R.n);
    }
}

TEST_CASE("canonical states") {
    CHECK(canonical_x_minus(kUnknot).s == std::vector<int>{1, 0});
    CHECK(canonical_x_plus(kUnknot).s == std::vector<int>{1, 0});
    GridDiagram G3 = validate_grid(3, {0, 1, 2}, {1, 2, 0});
    CHECK(canonical_x_minus(G3).s == std::vector<int>{0, 1, 2});
    CHECK(canonical_x_plus(G3).s == std::vector<int>{0, 1, 2});
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        GridDiagram R = random_grid(6, rng);
        // both canonical states are permutations (unrank/rank round-trips)
        GridState xp = canonical_x_plus(R), xm = canonical_x_minus(R);
        CHECK(GridState::unrank(xp.rank(), R.n).s == xp.s);
        CHECK(GridState::unrank(xm.rank(), R.n).s == xm.s);
    }
}

TEST_CASE("classical invariants of the unknot grid") {
    ClassicalInvariants inv = classical_invariants(kUnknot);
    CHECK(inv.tb == -1);
    CHECK(inv.rot == 0);
    CHECK(inv.sl == -1);
    CHECK(inv.writhe == 0);
    CHECK(inv.cusps_up + inv.cusps_down == 2);
}

TEST_CASE("sl = tb - rot always") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        GridDiagram R = random_grid(4 + static_cast<int>(rng() % 3), rng);
        ClassicalInvariants inv = classical_invariants(R);
        CHECK(inv.sl == inv.tb - inv.rot);
        CHECK(inv.tb == inv.writhe - (inv.cusps_up + inv.cusps_down) / 2);
        CHECK(inv.rot == (inv.cusps_down - inv.cusps_up) / 2);
    }
}

TEST_CASE("stabilization types act on tb and rot as expected") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        GridDiagram R = random_grid(2 + static_cast<int>(rng() % 4), rng);
        ClassicalInvariants base = classical_invariants(R);
        int col = static_cast<int>(rng() % R.n);
        // Legendrian-type preserving
        for (Corner c : {Corner::SE, Corner::NW}) {
            ClassicalInvariants s = classical_invariants(
                apply_move(R, GridMove::stabilize(Marker::X, c, col)));
            CHECK(s.tb == base.tb);
            CHECK(s.rot == base.rot);
        }
        for (Corner c : {Corner::SE, Corner::NW}) {
            ClassicalInvariants s = classical_invariants(
                apply_move(R, GridMove::stabilize(Marker::O, c, col)));
            CHECK(s.tb == base.tb);
            CHECK(s.rot == base.rot);
        }
        // positive stabilization: tb-1, rot+1; negative: tb-1, rot-1
        ClassicalInvariants ne = classical_invariants(
            apply_move(R, GridMove::stabilize(Marker::X, Corner::NE, col)));
        CHECK(ne.tb == base.tb - 1);
        CHECK(ne.rot == base.rot + 1);
        ClassicalInvariants sw = classical_invariants(
            apply_move(R, GridMove::stabilize(Marker::X, Corner::SW, col)));
        CHECK(sw.tb == base.tb - 1);
        CHECK(sw.rot == base.rot - 1);
        CHECK(sw.sl == base.sl);  // transverse type preserved
        // component count preserved by any stabilization
        CHECK(classical_invariants(
                  apply_move(R, GridMove::stabilize(Marker::X, Corner::NE, col)))
                  .components == base.components);
    }
}

TEST_CASE("2x2 unknot X:SE stabilization matches the block pattern") {
    GridDiagram s = apply_move(kUnknot, GridMove::stabilize(Marker::X, Corner::SE, 0));
    REQUIRE(s.n == 3);
    int col = 0, row = 1;  // stabilized at the X in column 0, row 1
    CHECK(s.O[col] == row + 1);
    CHECK(s.X[col + 1] == row + 1);
    CHECK(s.X[col] == row);
    CHECK(s.O[col + 1] != row);
}

TEST_CASE("cyclic moves invert") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
        GridDiagram R = random_grid(5, rng);
        CHECK(apply_move(apply_move(R, GridMove::cyclic_row(+1)), GridMove::cyclic_row(-1)) == R);
        CHECK(apply_move(apply_move(R, GridMove::cyclic_col(+1)), GridMove::cyclic_col(-1)) == R);
        CHECK(link_components(apply_move(R, GridMove::cyclic_row(+1))).count ==
              link_components(R).count);
    }
}

TEST_CASE("commutation legality") {
    // disjoint spans commute
    GridDiagram G = validate_grid(4, {1, 0, 3, 2}, {0, 1, 2, 3});
    CHECK(commutation_legal(G, Axis::Row, 2));
    // interleaved spans do not; shared columns do not
    GridDiagram H = validate_grid(4, {0, 1, 2, 3}, {1, 2, 3, 0});
    // rows 0,1: X cols {0,1}, O col of row0 = 3, row1 = 0 -> shared column 0
    CHECK_FALSE(commutation_legal(H, Axis::Row, 0));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        GridDiagram R = random_grid(5, rng);
        for (int k = 0; k < R.n; ++k) {
            if (!commutation_legal(R, Axis::Row, k)) continue;
            GridDiagram R2 = apply_move(R, GridMove::commute(Axis::Row, k));
            CHECK(link_components(R2).count == link_components(R).count);
            CHECK(apply_move(R2, GridMove::commute(Axis::Row, k)) == R);
        }
    }
}

TEST_CASE("stabilize/destabilize round trips for all types") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 25; ++i) {
        GridDiagram R = random_grid(2 + static_cast<int>(rng() % 4), rng);
        int col = static_cast<int>(rng() % R.n);
        for (Marker m : {Marker::X, Marker::O}) {
            for (Corner c : {Corner::SE, Corner::NW, Corner::SW, Corner::NE}) {
                int row = (m == Marker::X ? R.X : R.O)[col];
                GridDiagram s = apply_move(R, GridMove::stabilize(m, c, col));
                CHECK(link_components(s).count == link_components(R).count);
                GridDiagram back = apply_move(s, GridMove::destabilize(m, c, col, row));
                CHECK(back == R);
            }
        }
    }
    // destabilizing a block that is not there
    CHECK_THROWS_AS(apply_move(validate_grid(3, {2, 1, 0}, {1, 0, 2}),
                               GridMove::destabilize(Marker::X, Corner::SE, 0, 0)),
                    GridError);
}

TEST_CASE("grid file formats") {
    GridDiagram a = parse_grid("{\"n\": 2, \"X\": [1,0], \"O\": [0,1]}", "t");
    GridDiagram b = parse_grid("% comment\n2\nX: 1 0\nO: 0 1\n", "t");
    CHECK(a == b);
    CHECK(a == kUnknot);
    CHECK_THROWS_AS(parse_grid("2\nX: 1 0\n", "t"), GridError);
    CHECK_THROWS_AS(parse_grid("2\nX: 1 zebra\nO: 0 1\n", "t"), GridError);
    CHECK_THROWS_AS(parse_grid("{\"n\": 2}", "t"), GridError);
    // round-trip through both serializers
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        GridDiagram R = random_grid(6, rng);
        CHECK(parse_grid(to_text(R), "t") == R);
        CHECK(parse_grid(grid_to_json(R), "t") == R);
    }
}

TEST_CASE("transpose and rotation are involutions") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 20; ++i) {
        GridDiagram R = random_grid(5, rng);
        CHECK(transpose(transpose(R)) == R);
        CHECK(rotate180(rotate180(R)) == R);
    }
}
