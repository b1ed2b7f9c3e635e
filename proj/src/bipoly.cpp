#include "qfaul/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qfaul {

BiPoly BiPoly::monomial(Integer c, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
    BiPoly p;
    if (c != 0) p.terms_.emplace(Key{i, j}, std::move(c));
    return p;
}

BiPoly BiPoly::one_minus_monomial(int i, int j) {
    if (i == 0 && j == 0) throw std::invalid_argument("one_minus_monomial: constant monomial");
    BiPoly p = constant(1);
    p.insert({i, j}, Integer(-1));
    return p;
}

BiPoly BiPoly::one_plus_monomial(int i, int j) {
    if (i == 0 && j == 0) throw std::invalid_argument("one_plus_monomial: constant monomial");
    BiPoly p = constant(1);
    p.insert({i, j}, Integer(1));
    return p;
}

BiPoly BiPoly::from_poly_in_y(const HalfQPoly& p) {
    BiPoly r;
    const auto& cs = p.coeffs();
    for (size_t e = 0; e < cs.size(); ++e)
        if (cs[e] != 0) r.terms_.emplace(Key{0, static_cast<int>(e)}, cs[e]);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) insert(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) insert(k, Integer(-c));
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const Integer& c) const {
    if (c == 0) return {};
    BiPoly r = *this;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly base = *this;
    BiPoly r = constant(1);
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

namespace {

std::string monomial_str(const BiPoly::Key& k, const Integer& c) {
    std::ostringstream os;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0) os << "-";
    bool printed = false;
    if (mag != 1 || (k.first == 0 && k.second == 0)) {
        os << mag.get_str();
        printed = true;
    }
    if (k.first > 0) {
        if (printed) os << "*";
        os << "x";
        if (k.first > 1) os << "^" << k.first;
        printed = true;
    }
    if (k.second > 0) {
        if (printed) os << "*";
        os << "y";
        if (k.second > 1) os << "^" << k.second;
    }
    return os.str();
}

}  // namespace

std::string BiPoly::lowest_monomial() const {
    if (is_zero()) return "0";
    const std::pair<const Key, Integer>* best = nullptr;
    for (const auto& term : terms_) {
        if (!best) {
            best = &term;
            continue;
        }
        int td = term.first.first + term.first.second;
        int bd = best->first.first + best->first.second;
        if (td < bd || (td == bd && term.first < best->first)) best = &term;
    }
    return monomial_str(best->first, best->second);
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        std::string m = monomial_str(k, c);
        if (!first && c < 0) m = m.substr(1);
        os << m;
        first = false;
    }
    return os.str();
}

}  // namespace qfaul
