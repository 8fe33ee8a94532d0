#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gridhom/bitmatrix.hpp"
#include "gridhom/complex.hpp"

namespace gridhom {

// v^k * state, a generator of a bigraded piece of a fully blocked theory.
struct PieceGenerator {
    uint64_t rank = 0;
    int k = 0;
    auto operator<=>(const PieceGenerator&) const = default;
};

struct BigradedDims {
    Theory theory = Theory::TildeOX;
    int n = 0, l = 0;
    int v_cutoff = 0;  // 0 for the non-enhanced theory
    std::map<Bigrading, int> dims;
};

// Relabels (M, A) by (-a, -b); twoB is the doubled second shift.
BigradedDims shift_dims(const BigradedDims& d, int a, int twoB);

// Exact divisibility of a dimension table by the W^(tensor k) convolution
// (W has one generator at (0,0) and one at (-1,-1)).  `windowed` skips the
// finite-support check above the table top (used for the v-truncated
// enhanced tables).
bool w_divisible(const std::map<Bigrading, int>& dims, int k, bool windowed);

struct VanishingResult {
    bool vanishes = false;
    ChainElement witness;  // with d(witness) = class, when vanishes
};

struct LambdaSide {
    Bigrading bigrading;
    bool enhanced_vanishes = false;
    bool classical_vanishes = false;
    ChainElement witness_enhanced, witness_classical;
};

struct LambdaReport {
    LambdaSide plus, minus;
    bool implication_ok = true;  // enhanced = 0 implies classical = 0
};

class HomologyEngine {
public:
    explicit HomologyEngine(GridDiagram G, int jobs = 1);

    const GridComplex& complex() const { return C_; }
    int min_maslov() const { return minM_; }
    int max_maslov() const { return maxM_; }
    int default_v_cutoff() const { return 2 * (maxM_ - minM_); }

    // Basis of the (m, 2a) piece, ordered by (state rank, v-exponent).
    std::vector<PieceGenerator> bigraded_piece(Theory t, Bigrading bg) const;

    // Matrix of the differential from the (m, 2a) piece to the
    // (m-1, 2a) piece; rows = target basis, columns = source basis.
    BitMatrix boundary_matrix(Theory t, Bigrading from) const;

    BigradedDims homology_dims(Theory t, int v_cutoff) const;

    // Exact image-membership decision for a homogeneous cycle.
    VanishingResult class_vanishes(Theory t, const ChainElement& c) const;

    LambdaReport lambda_report() const;

private:
    std::vector<uint64_t> states_at(Bigrading bg) const;

    GridComplex C_;
    int jobs_;
    int minM_ = 0, maxM_ = 0;
    std::map<Bigrading, std::vector<uint64_t>> by_bigrading_;
};

}  // namespace gridhom
