#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gridhom/grid.hpp"

namespace gridhom {

struct SuiteCheck {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    uint64_t seed = 1;
    int max_n = 5;
    int jobs = 1;
    int random_grids = 200;  // corpus size per random size
};

// Uniform valid grid from the seeded generator.
GridDiagram random_grid(int n, std::mt19937_64& rng);

// suite: one of d2 | grading | comm | stab | pinch | birth | lambda | w |
// invariance | all.
std::vector<SuiteCheck> run_verify_suite(const std::string& suite,
                                         const VerifyOptions& opt);

}  // namespace gridhom
