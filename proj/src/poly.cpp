#include "gridhom/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gridhom {

Monomial Monomial::times_V(int col, int k) const {
    Monomial m = *this;
    for (auto& [c, e] : m.V_exps) {
        if (c == col) {
            e += k;
            return m;
        }
    }
    m.V_exps.emplace_back(col, k);
    std::sort(m.V_exps.begin(), m.V_exps.end());
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.v_exp = v_exp + o.v_exp;
    auto a = V_exps.begin(), b = o.V_exps.begin();
    while (a != V_exps.end() || b != o.V_exps.end()) {
        if (b == o.V_exps.end() || (a != V_exps.end() && a->first < b->first))
            m.V_exps.push_back(*a++);
        else if (a == V_exps.end() || b->first < a->first)
            m.V_exps.push_back(*b++);
        else {
            m.V_exps.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return m;
}

Monomial Monomial::relabel(const std::vector<int>& var_map) const {
    Monomial m;
    m.v_exp = v_exp;
    for (auto& [c, e] : V_exps) m.V_exps.emplace_back(var_map[c], e);
    std::sort(m.V_exps.begin(), m.V_exps.end());
    return m;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool any = false;
    if (v_exp) {
        os << 'v';
        if (v_exp > 1) os << '^' << v_exp;
        any = true;
    }
    for (auto& [c, e] : V_exps) {
        if (any) os << '*';
        os << 'V' << (c + 1);
        if (e > 1) os << '^' << e;
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

void CoeffPoly::add_term(const Monomial& m) {
    auto it = std::lower_bound(terms.begin(), terms.end(), m);
    if (it != terms.end() && *it == m)
        terms.erase(it);
    else
        terms.insert(it, m);
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
    CoeffPoly r;
    std::set_symmetric_difference(terms.begin(), terms.end(), o.terms.begin(),
                                  o.terms.end(), std::back_inserter(r.terms));
    return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
    CoeffPoly r;
    for (auto& a : terms)
        for (auto& b : o.terms) r.add_term(a * b);
    return r;
}

CoeffPoly poly_add(const CoeffPoly& p, const CoeffPoly& q) { return p + q; }
CoeffPoly poly_mul(const CoeffPoly& p, const CoeffPoly& q) { return p * q; }

std::string CoeffPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << terms[i].str();
    }
    return os.str();
}

void ChainElement::add(std::uint64_t rank, const Monomial& m) {
    auto& p = terms[rank];
    p.add_term(m);
    if (p.is_zero()) terms.erase(rank);
}

void ChainElement::add(std::uint64_t rank, const CoeffPoly& p) {
    for (auto& m : p.terms) add(rank, m);
}

void ChainElement::add(const ChainElement& o) {
    for (auto& [r, p] : o.terms) add(r, p);
}

void ChainElement::add_scaled(const Monomial& m, const ChainElement& o,
                              const std::vector<int>* var_map) {
    for (auto& [r, p] : o.terms)
        for (auto& t : p.terms)
            add(r, var_map ? m * t.relabel(*var_map) : m * t);
}

std::string ChainElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [r, p] : terms) {
        if (!first) os << " + ";
        os << '(' << p.str() << ")*s" << r;
        first = false;
    }
    return os.str();
}

}  // namespace gridhom
