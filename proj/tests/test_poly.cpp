#include "doctest.h"

#include <random>

#include "gridhom/poly.hpp"

using namespace gridhom;

namespace {

CoeffPoly random_poly(std::mt19937_64& rng) {
    CoeffPoly p;
    int terms = static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        m.v_exp = static_cast<int>(rng() % 3);
        for (int c = 0; c < 3; ++c)
            if (rng() % 2) m = m.times_V(c, 1 + static_cast<int>(rng() % 2));
        p.add_term(m);
    }
    return p;
}

}  // namespace

TEST_CASE("characteristic two") {
    Monomial v1 = Monomial{}.times_V(0);
    CoeffPoly p = CoeffPoly::mono(v1) + CoeffPoly::one();
    CHECK((p + p).is_zero());
}

TEST_CASE("monomial products") {
    Monomial v;
    v.v_exp = 1;
    Monomial V1 = Monomial{}.times_V(0);
    CoeffPoly prod = CoeffPoly::mono(v) * CoeffPoly::mono(V1);
    REQUIRE(prod.terms.size() == 1);
    CHECK(prod.terms[0].v_exp == 1);
    CHECK(prod.terms[0].exp_of(0) == 1);
}

TEST_CASE("frobenius") {
    Monomial v;
    v.v_exp = 1;
    CoeffPoly one_plus_v = CoeffPoly::one() + CoeffPoly::mono(v);
    CoeffPoly sq = one_plus_v * one_plus_v;
    Monomial v2;
    v2.v_exp = 2;
    CoeffPoly expect = CoeffPoly::one() + CoeffPoly::mono(v2);
    CHECK(sq == expect);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        CoeffPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + p).is_zero());
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("chain element bookkeeping") {
    ChainElement e;
    e.add(3, Monomial{});
    e.add(3, Monomial{});
    CHECK(e.is_zero());
    e.add(4, Monomial{}.times_V(1));
    ChainElement f;
    Monomial v;
    v.v_exp = 2;
    f.add_scaled(v, e);
    REQUIRE(f.terms.count(4) == 1);
    CHECK(f.terms.at(4).terms[0].v_exp == 2);
    CHECK(f.terms.at(4).terms[0].exp_of(1) == 1);
}

TEST_CASE("variable relabeling") {
    ChainElement e;
    e.add(0, Monomial{}.times_V(0).times_V(2));
    std::vector<int> var_map = {2, 1, 0};
    ChainElement out;
    out.add_scaled(Monomial{}, e, &var_map);
    Monomial expect = Monomial{}.times_V(2).times_V(0);
    CHECK(out.terms.at(0) == CoeffPoly::mono(expect));
}
