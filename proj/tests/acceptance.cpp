// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria parameters (corpus sizes, seeds, tolerances) are pinned
// here and match the project's contract.

#include <chrono>
#include <cstdio>
#include <random>

#include "gridhom/cobordism.hpp"
#include "gridhom/homology.hpp"
#include "gridhom/verify.hpp"

using namespace gridhom;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const char* what, bool pass, double secs,
            const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", idx,
                what, secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr uint64_t kSeed = 20260801;

VerifyOptions options() {
    VerifyOptions opt;
    opt.seed = kSeed;
    opt.max_n = 5;
    opt.random_grids = 200;
    opt.jobs = 4;
    return opt;
}

void run_suite_criterion(int idx, const char* what, const char* suite,
                         double budget_secs) {
    auto t0 = Clock::now();
    auto checks = run_verify_suite(suite, options());
    double secs = secs_since(t0);
    bool pass = secs < budget_secs;
    std::string detail;
    for (auto& c : checks) {
        pass = pass && c.pass;
        if (!c.pass) detail += c.name + ": " + c.detail + "; ";
    }
    if (secs >= budget_secs) detail += "over time budget";
    report(idx, what, pass, secs, detail);
}

GridDiagram unknot() { return validate_grid(2, {1, 0}, {0, 1}); }

void criterion3_ground_truth() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    GridDiagram U = unknot();
    GridComplex C(U);
    if (!(C.gradings(GridState{{1, 0}}) == Bigrading{0, 0}) ||
        !(C.gradings(GridState{{0, 1}}) == Bigrading{-1, -2})) {
        pass = false;
        detail += "M/A table mismatch; ";
    }
    HomologyEngine H(U);
    BigradedDims t = H.homology_dims(Theory::TildeOX, 0);
    if (!(t.dims.size() == 2 && t.dims.count({0, 0}) && t.dims.count({-1, -2}) &&
          t.dims.at({0, 0}) == 1 && t.dims.at({-1, -2}) == 1)) {
        pass = false;
        detail += "tilde homology is not F(0,0)+F(-1,-1); ";
    }
    LambdaReport rep = H.lambda_report();
    if (rep.plus.enhanced_vanishes || rep.minus.enhanced_vanishes) {
        pass = false;
        detail += "enhanced unknot classes vanished; ";
    }
    ClassicalInvariants inv = classical_invariants(U);
    if (inv.tb != -1 || inv.rot != 0) {
        pass = false;
        detail += "tb/rot mismatch; ";
    }
    report(3, "2x2 unknot ground truth", pass, secs_since(t0), detail);
}

void criterion7_implication() {
    auto t0 = Clock::now();
    bool pass = true;
    long long grids = 0;
    std::string detail;
    auto check_grid = [&](const GridDiagram& G) {
        if (!pass) return;
        ++grids;
        try {
            LambdaReport rep = HomologyEngine(G, 4).lambda_report();
            if (!rep.implication_ok) pass = false;
        } catch (const GridError& e) {
            pass = false;
            detail = e.what();
        }
    };
    // the full corpus processed by criteria 1-6: every n=3 grid, every n=4
    // grid, the seeded n=4/5 random corpus, and the stabilized corpus of
    // criterion 5
    for_each_permutation(3, [&](const std::vector<int>& X, uint64_t) {
        for_each_permutation(3, [&](const std::vector<int>& O, uint64_t) {
            for (int c = 0; c < 3; ++c)
                if (X[c] == O[c]) return;
            check_grid(validate_grid(3, X, O));
        });
    });
    for_each_permutation(4, [&](const std::vector<int>& X, uint64_t) {
        for_each_permutation(4, [&](const std::vector<int>& O, uint64_t) {
            for (int c = 0; c < 4; ++c)
                if (X[c] == O[c]) return;
            check_grid(validate_grid(4, X, O));
        });
    });
    std::mt19937_64 rng(kSeed);
    for (int n = 4; n <= 5; ++n)
        for (int i = 0; i < 200; ++i) check_grid(random_grid(n, rng));
    std::mt19937_64 rng5(kSeed + 5);
    for (int i = 0; i < 50; ++i) {
        int n0 = 2 + static_cast<int>(rng5() % 3);
        GridDiagram G = random_grid(n0, rng5);
        int col = static_cast<int>(rng5() % n0);
        check_grid(apply_move(G, GridMove::stabilize(Marker::X, Corner::NE, col)));
        check_grid(apply_move(G, GridMove::stabilize(Marker::X, Corner::SW, col)));
    }
    report(7, "enhanced => classical vanishing implication", pass, secs_since(t0),
           detail + std::to_string(grids) + " grids");
}

void criterion9_obstruction() {
    auto t0 = Clock::now();
    GridDiagram U = unknot();
    GridDiagram S = apply_move(U, GridMove::stabilize(Marker::X, Corner::NE, 0));
    auto ta = Clock::now();
    ObstructionReport r1 = obstruct_cobordism(U, S, 4);
    double t1 = secs_since(ta);
    auto tb = Clock::now();
    ObstructionReport r2 = obstruct_cobordism(U, U, 4);
    double t2 = secs_since(tb);
    bool pass = r1.obstructed && !r2.obstructed && t1 < 1.0 && t2 < 1.0;
    report(9, "obstruction end to end", pass, secs_since(t0),
           "stabilized: " + std::string(r1.obstructed ? "OBSTRUCTED" : "no") +
               ", identity: " + (r2.obstructed ? "OBSTRUCTED" : "clear"));
}

void criterion10_performance() {
    auto t0 = Clock::now();
    std::vector<int> X8(8), O8(8);
    for (int i = 0; i < 8; ++i) X8[i] = i, O8[i] = (i + 2) % 8;
    GridDiagram G8 = validate_grid(8, X8, O8);
    auto ta = Clock::now();
    LambdaReport r8 = HomologyEngine(G8, 4).lambda_report();
    double t8 = secs_since(ta);
    (void)r8;
    bool pass8 = t8 < 60.0;

    std::vector<int> X9(9), O9(9);
    for (int i = 0; i < 9; ++i) X9[i] = i, O9[i] = (i + 2) % 9;
    GridDiagram G9 = validate_grid(9, X9, O9);
    auto tb = Clock::now();
    LambdaReport r9 = HomologyEngine(G9, 4).lambda_report();
    double t9 = secs_since(tb);
    (void)r9;
    bool pass9 = t9 < 900.0;

    report(10, "n=8 and n=9 vanishing decisions within budget", pass8 && pass9,
           secs_since(t0),
           "n=8: " + std::to_string(t8) + "s, n=9: " + std::to_string(t9) + "s");
}

}  // namespace

int main() {
    run_suite_criterion(1, "d^2 = 0 across the corpus, all six differentials", "d2",
                        60.0);
    run_suite_criterion(2, "grading homogeneity of every differential term",
                        "grading", 300.0);
    criterion3_ground_truth();
    run_suite_criterion(4, "W-factor divisibility for 50 seeded grids", "w", 300.0);
    run_suite_criterion(5, "stabilization vanishing for 50 seeded grids", "lambda",
                        600.0);
    {
        auto t0 = Clock::now();
        bool pass = true;
        std::string detail;
        for (const char* s : {"comm", "stab", "pinch", "birth"}) {
            for (auto& c : run_verify_suite(s, options())) {
                pass = pass && c.pass;
                if (!c.pass) detail += c.name + ": " + c.detail + "; ";
            }
        }
        double secs = secs_since(t0);
        if (secs >= 600.0) {
            pass = false;
            detail += "over time budget";
        }
        report(6, "chain-map suites (commutation, stabilization, pinch, birth)",
               pass, secs, detail);
    }
    criterion7_implication();
    run_suite_criterion(8, "Legendrian/transverse invariance smoke", "invariance",
                        1200.0);
    criterion9_obstruction();
    criterion10_performance();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures ? 1 : 0;
}
