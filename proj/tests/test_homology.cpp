#include "doctest.h"

#include <random>

#include "gridhom/homology.hpp"
#include "gridhom/verify.hpp"

using namespace gridhom;

namespace {
const GridDiagram kUnknot = validate_grid(2, {1, 0}, {0, 1});
}

TEST_CASE("bigraded pieces of the 2x2 unknot") {
    HomologyEngine H(kUnknot);
    uint64_t r10 = GridState{{1, 0}}.rank();
    auto piece00 = H.bigraded_piece(Theory::TildeOXBig, {0, 0});
    REQUIRE(piece00.size() == 1);
    CHECK(piece00[0].rank == r10);
    CHECK(piece00[0].k == 0);
    auto piece20 = H.bigraded_piece(Theory::TildeOXBig, {2, 0});
    REQUIRE(piece20.size() == 1);
    CHECK(piece20[0].rank == r10);
    CHECK(piece20[0].k == 1);
    // reproducible ordering
    CHECK(H.bigraded_piece(Theory::TildeOXBig, {0, 0}) == piece00);
}

TEST_CASE("2x2 homology tables") {
    HomologyEngine H(kUnknot);
    BigradedDims tilde = H.homology_dims(Theory::TildeOX, 0);
    REQUIRE(tilde.dims.size() == 2);
    CHECK(tilde.dims.at({0, 0}) == 1);
    CHECK(tilde.dims.at({-1, -2}) == 1);

    int cutoff = 2;
    BigradedDims big = H.homology_dims(Theory::TildeOXBig, cutoff);
    for (int k = 0; k <= cutoff; ++k) {
        CHECK(big.dims.at({2 * k, 0}) == 1);
        CHECK(big.dims.at({2 * k - 1, -2}) == 1);
    }
}

TEST_CASE("lambda classes of the unknot do not vanish") {
    LambdaReport rep = HomologyEngine(kUnknot).lambda_report();
    CHECK_FALSE(rep.plus.enhanced_vanishes);
    CHECK_FALSE(rep.minus.enhanced_vanishes);
    CHECK_FALSE(rep.plus.classical_vanishes);
    CHECK_FALSE(rep.minus.classical_vanishes);
    CHECK(rep.plus.bigrading == Bigrading{0, 0});
    CHECK(rep.minus.bigrading == Bigrading{0, 0});
    CHECK(rep.implication_ok);
}

TEST_CASE("positive stabilization kills lambda+ only") {
    GridDiagram G = apply_move(kUnknot, GridMove::stabilize(Marker::X, Corner::NE, 0));
    LambdaReport rep = HomologyEngine(G).lambda_report();
    CHECK(rep.plus.enhanced_vanishes);
    CHECK(rep.plus.classical_vanishes);
    CHECK_FALSE(rep.minus.enhanced_vanishes);
    CHECK_FALSE(rep.minus.classical_vanishes);  // brute force at n=3
    // the shipped witness maps onto x+ exactly
    GridComplex C(G);
    ChainElement img =
        C.differential_element(rep.plus.witness_enhanced, Theory::TildeOXBig);
    ChainElement target;
    target.add(canonical_x_plus(G).rank(), Monomial{});
    CHECK(img == target);
}

TEST_CASE("negative stabilization kills lambda- only") {
    GridDiagram G = apply_move(kUnknot, GridMove::stabilize(Marker::X, Corner::SW, 1));
    LambdaReport rep = HomologyEngine(G).lambda_report();
    CHECK(rep.minus.enhanced_vanishes);
    CHECK_FALSE(rep.plus.enhanced_vanishes);
}

TEST_CASE("W-factor divisibility") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 15; ++i) {
        GridDiagram G = random_grid(2 + static_cast<int>(rng() % 3), rng);
        HomologyEngine H(G);
        int k = G.n - H.complex().components();
        CHECK(w_divisible(H.homology_dims(Theory::TildeOX, 0).dims, k, false));
        CHECK(w_divisible(
            H.homology_dims(Theory::TildeOXBig, H.default_v_cutoff()).dims, k, true));
    }
    // a table that is not divisible
    std::map<Bigrading, int> bad{{{0, 0}, 1}, {{-1, -2}, 2}};
    CHECK_FALSE(w_divisible(bad, 1, false));
}

TEST_CASE("shift relabels tables") {
    BigradedDims d;
    d.dims[{0, 0}] = 1;
    BigradedDims s = shift_dims(d, 1, 2);
    CHECK(s.dims.count({-1, -2}) == 1);
    BigradedDims back = shift_dims(s, -1, -2);
    CHECK(back.dims == d.dims);
    CHECK(shift_dims(d, 0, 0).dims == d.dims);
}

TEST_CASE("homology dimensions are move-invariant up to W factors (spot check)") {
    // tilde homology of a stabilized diagram = old tensor W
    GridDiagram G = apply_move(kUnknot, GridMove::stabilize(Marker::X, Corner::SE, 0));
    HomologyEngine H(G);
    BigradedDims t = H.homology_dims(Theory::TildeOX, 0);
    // unknot hat homology is one dimensional; n=3, l=1 gives W^2 = dims
    // 1,2,1 on the diagonal
    CHECK(t.dims.at({0, 0}) == 1);
    CHECK(t.dims.at({-1, -2}) == 2);
    CHECK(t.dims.at({-2, -4}) == 1);
}
