#include "gridhom/homology.hpp"

#include <algorithm>
#include <thread>

namespace gridhom {

BigradedDims shift_dims(const BigradedDims& d, int a, int twoB) {
    BigradedDims r = d;
    r.dims.clear();
    for (auto& [bg, v] : d.dims) r.dims[{bg.m - a, bg.twoA - twoB}] = v;
    return r;
}

bool w_divisible(const std::map<Bigrading, int>& dims, int k, bool windowed) {
    if (k == 0) return true;
    // Binomials C(k, j).
    std::vector<long long> binom(k + 1, 1);
    for (int j = 1; j <= k; ++j) binom[j] = binom[j - 1] * (k - j + 1) / j;
    // Lines of constant (twoA - 2M); along a line the convolution couples
    // (m) with (m+1 .. m+k).
    std::map<int, std::map<int, long long>> lines;  // key -> m -> dim
    for (auto& [bg, v] : dims)
        if (v) lines[bg.twoA - 2 * bg.m][bg.m] = v;
    for (auto& [key, D] : lines) {
        int lo = D.begin()->first, hi = D.rbegin()->first;
        std::map<int, long long> H;
        auto Dat = [&](int m) -> long long {
            auto it = D.find(m);
            return it == D.end() ? 0 : it->second;
        };
        auto Hat = [&](int m) -> long long {
            auto it = H.find(m);
            return it == H.end() ? 0 : it->second;
        };
        for (int m = lo; m <= hi; ++m) {
            long long h = Dat(m);
            for (int j = 0; j < k; ++j) h -= binom[j] * Hat(m + j);
            if (h) H[m + k] = h;
            if (h < 0) return false;
            if (!windowed && h && m + k > hi) return false;
        }
    }
    return true;
}

HomologyEngine::HomologyEngine(GridDiagram G, int jobs)
    : C_(std::move(G)), jobs_(std::max(1, jobs)) {
    const int n = C_.n();
    const uint64_t total = factorial(n);
    const int nthreads =
        static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(jobs_), total));
    std::vector<std::map<Bigrading, std::vector<uint64_t>>> local(nthreads);
    std::vector<std::thread> threads;
    for (int t = 0; t < nthreads; ++t) {
        uint64_t begin = total * t / nthreads;
        uint64_t end = total * (t + 1) / nthreads;
        threads.emplace_back([&, t, begin, end] {
            GridState x = GridState::unrank(begin, n);
            for (uint64_t r = begin; r < end; ++r) {
                local[t][C_.gradings(x)].push_back(r);
                // next permutation in rank order
                if (r + 1 < end) {
                    auto& p = x.s;
                    int i = n - 2;
                    while (i >= 0 && p[i] > p[i + 1]) --i;
                    int j = n - 1;
                    while (p[j] < p[i]) --j;
                    std::swap(p[i], p[j]);
                    std::reverse(p.begin() + i + 1, p.end());
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    // Thread ranges are ascending, so plain concatenation keeps each bucket
    // sorted by rank.
    for (auto& m : local)
        for (auto& [bg, v] : m) {
            auto& dst = by_bigrading_[bg];
            dst.insert(dst.end(), v.begin(), v.end());
        }
    minM_ = by_bigrading_.begin()->first.m;
    maxM_ = minM_;
    for (auto& [bg, v] : by_bigrading_) maxM_ = std::max(maxM_, bg.m);
}

std::vector<uint64_t> HomologyEngine::states_at(Bigrading bg) const {
    auto it = by_bigrading_.find(bg);
    return it == by_bigrading_.end() ? std::vector<uint64_t>{} : it->second;
}

std::vector<PieceGenerator> HomologyEngine::bigraded_piece(Theory t,
                                                           Bigrading bg) const {
    if (t != Theory::TildeOX && t != Theory::TildeOXBig)
        throw GridError(GridErrorCode::Internal,
                        "bigraded pieces exist only for the fully blocked theories");
    std::vector<PieceGenerator> basis;
    if (t == Theory::TildeOX) {
        for (uint64_t r : states_at(bg)) basis.push_back({r, 0});
        return basis;
    }
    for (int k = 0; bg.m - 2 * k >= minM_; ++k)
        for (uint64_t r : states_at({bg.m - 2 * k, bg.twoA})) basis.push_back({r, k});
    std::sort(basis.begin(), basis.end());
    return basis;
}

BitMatrix HomologyEngine::boundary_matrix(Theory t, Bigrading from) const {
    auto src = bigraded_piece(t, from);
    auto tgt = bigraded_piece(t, {from.m - 1, from.twoA});
    std::map<PieceGenerator, int> index;
    for (size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = static_cast<int>(i);
    BitMatrix M(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    const int n = C_.n();
    const int nthreads = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(jobs_), src.size() ? src.size() : 1));
    std::vector<std::thread> threads;
    for (int th = 0; th < nthreads; ++th) {
        threads.emplace_back([&, th] {
            for (size_t j = th; j < src.size(); j += nthreads) {
                GridState x = GridState::unrank(src[j].rank, n);
                ChainElement dx = C_.differential(x, t);
                for (auto& [yr, poly] : dx.terms)
                    for (auto& mono : poly.terms) {
                        auto it = index.find({yr, src[j].k + mono.v_exp});
                        if (it != index.end())
                            M.set(it->second, static_cast<int>(j));
                    }
            }
        });
    }
    for (auto& th : threads) th.join();
    return M;
}

BigradedDims HomologyEngine::homology_dims(Theory t, int v_cutoff) const {
    BigradedDims out;
    out.theory = t;
    out.n = C_.n();
    out.l = C_.components();
    out.v_cutoff = t == Theory::TildeOXBig ? v_cutoff : 0;

    std::vector<Bigrading> grades;
    if (t == Theory::TildeOX) {
        for (auto& [bg, v] : by_bigrading_) grades.push_back(bg);
    } else {
        // Uniform window per Alexander line so every reported line is
        // complete up to the cutoff top.
        std::map<int, int> min_m;
        for (auto& [bg, v] : by_bigrading_) {
            auto it = min_m.find(bg.twoA);
            if (it == min_m.end() || bg.m < it->second) min_m[bg.twoA] = bg.m;
        }
        for (auto& [twoA, lo] : min_m)
            for (int m = lo; m <= maxM_ + 2 * v_cutoff; ++m)
                grades.push_back({m, twoA});
    }

    std::map<Bigrading, int> boundary_rank;
    auto rank_at = [&](Bigrading bg) {
        auto it = boundary_rank.find(bg);
        if (it != boundary_rank.end()) return it->second;
        int r = boundary_matrix(t, bg).rank();
        boundary_rank[bg] = r;
        return r;
    };
    for (auto bg : grades) {
        int dim = static_cast<int>(bigraded_piece(t, bg).size());
        if (!dim) continue;
        int h = dim - rank_at(bg) - rank_at({bg.m + 1, bg.twoA});
        if (h) out.dims[bg] = h;
    }
    return out;
}

VanishingResult HomologyEngine::class_vanishes(Theory t, const ChainElement& c) const {
    if (c.is_zero())
        return {true, ChainElement{}};
    // Homogeneity: all terms in one bigrading.
    const int n = C_.n();
    std::optional<Bigrading> bg;
    for (auto& [r, poly] : c.terms)
        for (auto& mono : poly.terms) {
            if (!mono.V_exps.empty())
                throw GridError(GridErrorCode::Internal,
                                "class_vanishes expects a fully blocked element");
            Bigrading g = C_.gradings(GridState::unrank(r, n));
            g.m += 2 * mono.v_exp;
            if (bg && !(g == *bg))
                throw GridError(GridErrorCode::Internal, "element is not homogeneous");
            bg = g;
        }
    // Cycle check.
    ChainElement dc;
    for (auto& [r, poly] : c.terms) {
        ChainElement d = C_.differential(GridState::unrank(r, n), t);
        for (auto& mono : poly.terms) dc.add_scaled(mono, d);
    }
    if (!dc.is_zero())
        throw GridError(GridErrorCode::Internal, "element is not a cycle");

    auto src = bigraded_piece(t, {bg->m + 1, bg->twoA});
    auto tgt = bigraded_piece(t, *bg);
    std::map<PieceGenerator, int> index;
    for (size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = static_cast<int>(i);
    BitMatrix M = boundary_matrix(t, {bg->m + 1, bg->twoA});
    std::vector<uint8_t> b(tgt.size(), 0);
    for (auto& [r, poly] : c.terms)
        for (auto& mono : poly.terms) {
            auto it = index.find({r, mono.v_exp});
            if (it == index.end())
                throw GridError(GridErrorCode::Internal, "term outside its piece");
            b[it->second] ^= 1;
        }
    auto x = M.solve(b);
    if (!x) return {false, ChainElement{}};
    VanishingResult res;
    res.vanishes = true;
    for (size_t j = 0; j < x->size(); ++j)
        if ((*x)[j]) {
            Monomial m;
            m.v_exp = src[j].k;
            res.witness.add(src[j].rank, m);
        }
    // The witness must map to c exactly.
    ChainElement check;
    for (auto& [r, poly] : res.witness.terms) {
        ChainElement d = C_.differential(GridState::unrank(r, n), t);
        for (auto& mono : poly.terms) check.add_scaled(mono, d);
    }
    check.add(c);
    if (!check.is_zero())
        throw GridError(GridErrorCode::Internal, "witness verification failed");
    return res;
}

LambdaReport HomologyEngine::lambda_report() const {
    LambdaReport rep;
    auto side = [&](const GridState& x) {
        LambdaSide s;
        s.bigrading = C_.gradings(x);
        ChainElement c;
        c.add(x.rank(), Monomial{});
        // x+- must be cycles in both fully blocked theories; class_vanishes
        // verifies this rather than assuming it.
        auto big = class_vanishes(Theory::TildeOXBig, c);
        auto classical = class_vanishes(Theory::TildeOX, c);
        s.enhanced_vanishes = big.vanishes;
        s.classical_vanishes = classical.vanishes;
        s.witness_enhanced = big.witness;
        s.witness_classical = classical.witness;
        return s;
    };
    rep.plus = side(canonical_x_plus(C_.grid()));
    rep.minus = side(canonical_x_minus(C_.grid()));
    // Enhanced vanishing forces non-enhanced vanishing; a violation here is
    // a bug, not data.
    rep.implication_ok = (!rep.plus.enhanced_vanishes || rep.plus.classical_vanishes) &&
                         (!rep.minus.enhanced_vanishes || rep.minus.classical_vanishes);
    if (!rep.implication_ok)
        throw GridError(GridErrorCode::Internal,
                        "enhanced class vanished while the classical class did not");
    return rep;
}

}  // namespace gridhom
