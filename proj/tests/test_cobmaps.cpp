#include "doctest.h"

#include <random>

#include "gridhom/cobordism.hpp"
#include "gridhom/verify.hpp"

using namespace gridhom;

namespace {
const GridDiagram kUnknot = validate_grid(2, {1, 0}, {0, 1});

ChainElement single(const GridState& x) {
    ChainElement e;
    e.add(x.rank(), Monomial{});
    return e;
}
}  // namespace

TEST_CASE("verify_chain_map basics") {
    GridDiagram G = validate_grid(3, {2, 0, 1}, {0, 1, 2});
    ChainMap zero;
    zero.name = "zero";
    zero.src = zero.tgt = G;
    zero.src_theory = zero.tgt_theory = Theory::TildeOXBig;
    zero.eval = [](const GridState&) { return ChainElement{}; };
    CHECK_FALSE(verify_chain_map(zero).has_value());
    CHECK_FALSE(verify_chain_map(identity_map(G, Theory::MinusXBig)).has_value());

    // a corrupted map must be flagged with a nonzero residue
    ChainMap bad = identity_map(G, Theory::TildeOXBig);
    bad.name = "corrupted";
    bad.eval = [](const GridState& x) {
        ChainElement e;
        e.add(x.rank(), Monomial{});
        if (x.rank() == 0) e.add(1, Monomial{});
        return e;
    };
    auto v = verify_chain_map(bad);
    REQUIRE(v.has_value());
    CHECK_FALSE(v->residue.is_zero());
}

TEST_CASE("combined diagram detection") {
    CHECK_THROWS_AS(combined_diagram(kUnknot, kUnknot), GridError);
    GridDiagram G = validate_grid(4, {1, 0, 3, 2}, {0, 1, 2, 3});
    GridDiagram Gp = apply_move(G, GridMove::commute(Axis::Row, 2));
    CombinedDiagram cd = combined_diagram(G, Gp);
    CHECK(cd.kind == CombinedDiagram::Kind::Commutation);
    CHECK(cd.axis == Axis::Row);
    // restriction to either side reproduces the inputs
    CHECK(cd.minus == G);
    CHECK(cd.plus == Gp);
    CHECK(cd.strip.minus == G);
    CHECK(cd.strip.plus == Gp);
}

TEST_CASE("commutation maps on a specific pair") {
    GridDiagram G = validate_grid(4, {1, 0, 3, 2}, {0, 1, 2, 3});
    GridDiagram Gp = apply_move(G, GridMove::commute(Axis::Row, 2));
    CombinedDiagram cd = combined_diagram(G, Gp);
    for (CommutationVariant v : {CommutationVariant::Filtered, CommutationVariant::Minus}) {
        ChainMap f = commutation_map(cd, v);
        CHECK_FALSE(verify_chain_map(f).has_value());
    }
    ChainMap cm = commutation_map(cd, CommutationVariant::Minus);
    CHECK(cm.eval(canonical_x_plus(G)) == single(canonical_x_plus(Gp)));
    CHECK(cm.eval(canonical_x_minus(G)) == single(canonical_x_minus(Gp)));
}

TEST_CASE("stabilization suite on every 3x3 stabilization of the unknot") {
    VerifyOptions opt;
    opt.max_n = 3;  // restricts the suite to the exhaustive 2x2 bases
    auto checks = run_verify_suite("stab", opt);
    REQUIRE(checks.size() == 1);
    INFO(checks[0].detail);
    CHECK(checks[0].pass);
}

TEST_CASE("pinch maps: exhaustive small cases") {
    VerifyOptions opt;
    opt.max_n = 5;
    auto checks = run_verify_suite("pinch", opt);
    REQUIRE(checks.size() == 1);
    INFO(checks[0].detail);
    CHECK(checks[0].pass);
}

TEST_CASE("commutation suite with mutation detection") {
    VerifyOptions opt;
    opt.max_n = 4;
    auto checks = run_verify_suite("comm", opt);
    REQUIRE(checks.size() == 1);
    INFO(checks[0].detail);
    CHECK(checks[0].pass);
}

TEST_CASE("birth suite including the two-step movie") {
    VerifyOptions opt;
    opt.max_n = 4;
    auto checks = run_verify_suite("birth", opt);
    REQUIRE(checks.size() == 1);
    INFO(checks[0].detail);
    CHECK(checks[0].pass);
}

TEST_CASE("birth map on the unknot configuration") {
    GridDiagram Gp = insert_birth_block(kUnknot, 0);
    REQUIRE(Gp.n == 4);
    BirthData D = birth_map(kUnknot, Gp);
    CHECK(D.B.eval(canonical_x_plus(Gp)) == single(canonical_x_plus(kUnknot)));
    CHECK(D.B.eval(canonical_x_minus(Gp)) == single(canonical_x_minus(kUnknot)));
    // states outside NB are annihilated
    int killed = 0;
    for_each_permutation(4, [&](const std::vector<int>& p, uint64_t) {
        GridState x{p};
        if (!D.in_NB(x)) {
            CHECK(D.B.eval(x).is_zero());
            ++killed;
        }
    });
    CHECK(killed > 0);
}

TEST_CASE("obstruction verdicts") {
    GridDiagram stab =
        apply_move(kUnknot, GridMove::stabilize(Marker::X, Corner::NE, 0));
    ObstructionReport r1 = obstruct_cobordism(kUnknot, stab);
    CHECK(r1.obstructed);
    CHECK(r1.plus_vanishes_to);
    CHECK_FALSE(r1.plus_vanishes_from);

    ObstructionReport r2 = obstruct_cobordism(kUnknot, kUnknot);
    CHECK_FALSE(r2.obstructed);
    CHECK(r2.chi == 0);
    CHECK(r2.shift_a == 0);
    CHECK(r2.shift_twoB == 0);

    // classically infeasible: rotation numbers differ
    ObstructionReport r3 = obstruct_cobordism(stab, kUnknot);
    CHECK(r3.obstructed);
    CHECK_FALSE(r3.rot_match);
    CHECK(r3.reason.find("classical") != std::string::npos);

    // classically feasible but obstructed by the enhanced class: one positive
    // and one negative stabilization restore rot = 0
    GridDiagram both =
        apply_move(stab, GridMove::stabilize(Marker::X, Corner::SW, 0));
    ObstructionReport r4 = obstruct_cobordism(kUnknot, both);
    CHECK(r4.rot_match);
    CHECK(r4.parity_ok);
    CHECK(r4.obstructed);
    CHECK(r4.reason == "lambda_plus");
    CHECK(r4.shift_a == -r4.chi);
}
