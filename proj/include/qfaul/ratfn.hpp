#ifndef QFAUL_RATFN_HPP
#define QFAUL_RATFN_HPP

#include "qfaul/halfq_poly.hpp"
#include "qfaul/numeric.hpp"

namespace qfaul {

// Rational function num/den over HalfQPoly, kept canonical at all times:
// den is nonzero with positive leading coefficient, gcd(num, den) is a unit
// (integer contents included), and zero is stored as 0/1.
class RatFn {
public:
    RatFn() : num_(), den_(Integer(1)) {}
    RatFn(HalfQPoly num) : num_(std::move(num)), den_(Integer(1)) {}
    RatFn(long c) : RatFn(HalfQPoly(c)) {}
    RatFn(HalfQPoly num, HalfQPoly den);

    static RatFn from_rational(const Rational& r);

    const HalfQPoly& num() const { return num_; }
    const HalfQPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == HalfQPoly(Integer(1)); }
    // The polynomial value; throws NonExactDivision when den != 1.
    HalfQPoly to_poly() const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFn inverse() const;
    RatFn pow(int e) const;  // negative exponents invert

    std::string to_string() const;

private:
    void normalize();

    HalfQPoly num_;
    HalfQPoly den_;
};

}  // namespace qfaul

#endif
