#ifndef QFAUL_BIPOLY_HPP
#define QFAUL_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "qfaul/halfq_poly.hpp"
#include "qfaul/numeric.hpp"

namespace qfaul {

// Sparse bivariate polynomial over Integer in the formal variables x, y.
// Zero coefficients are never stored; the empty map is the zero polynomial.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (x-exponent, y-exponent)

    BiPoly() = default;

    static BiPoly constant(Integer c) { return monomial(std::move(c), 0, 0); }
    static BiPoly monomial(Integer c, int i, int j);
    // 1 - x^i y^j (either exponent may be zero, not both).
    static BiPoly one_minus_monomial(int i, int j);
    static BiPoly one_plus_monomial(int i, int j);
    // Embed a univariate polynomial as a polynomial in y alone; exponents are
    // taken verbatim from the t-representation of p.
    static BiPoly from_poly_in_y(const HalfQPoly& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Integer>& terms() const { return terms_; }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    BiPoly operator*(const Integer& c) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    BiPoly pow(int e) const;

    // Lowest offending monomial for witness reports: minimal total degree,
    // ties broken lexicographically by (x-exponent, y-exponent).
    std::string lowest_monomial() const;
    std::string to_string() const;

private:
    void insert(const Key& k, const Integer& c) {
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Key, Integer> terms_;
};

}  // namespace qfaul

#endif
