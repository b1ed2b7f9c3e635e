#include "qfaul/ratfn.hpp"

namespace qfaul {

RatFn::RatFn(HalfQPoly num, HalfQPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFn: zero denominator");
    normalize();
}

RatFn RatFn::from_rational(const Rational& r) {
    return RatFn(HalfQPoly(Integer(r.get_num())), HalfQPoly(Integer(r.get_den())));
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = HalfQPoly(Integer(1));
        return;
    }
    HalfQPoly g = poly_gcd(num_, den_);
    if (!(g == HalfQPoly(Integer(1)))) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

HalfQPoly RatFn::to_poly() const {
    if (!is_polynomial()) throw NonExactDivision(num_, den_);
    return num_;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFn: division by zero");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw std::invalid_argument("RatFn: inverse of zero");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFn base = *this;
    RatFn r{HalfQPoly(Integer(1))};
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::string RatFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace qfaul
