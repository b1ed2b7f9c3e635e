#ifndef QFAUL_HALFQ_POLY_HPP
#define QFAUL_HALFQ_POLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qfaul/numeric.hpp"

namespace qfaul {

// Univariate polynomial with Integer coefficients over the variable t, where
// t stands for q^(1/2).  Every q-exponent is carried as an even t-exponent, so
// expressions involving q^(1/2), q^(n+1/2), ... stay integral.  Stored dense,
// ascending; no trailing zero coefficient; the empty vector is the zero
// polynomial.
class HalfQPoly {
public:
    HalfQPoly() = default;
    HalfQPoly(long c) : HalfQPoly(Integer(c)) {}
    HalfQPoly(Integer c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit HalfQPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static HalfQPoly monomial(Integer c, int e);
    static HalfQPoly one_minus_t(int e);  // 1 - t^e, e >= 1
    static HalfQPoly one_plus_t(int e);   // 1 + t^e, e >= 1
    // 1 + t^step + t^(2 step) + ... + t^((count-1) step); zero when count == 0.
    static HalfQPoly geometric(int count, int step);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree in t; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(int e) const {
        if (e < 0 || e >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<size_t>(e)];
    }
    const Integer& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    HalfQPoly operator-() const;
    HalfQPoly& operator+=(const HalfQPoly& o);
    HalfQPoly& operator-=(const HalfQPoly& o);
    friend HalfQPoly operator+(HalfQPoly a, const HalfQPoly& b) { return a += b; }
    friend HalfQPoly operator-(HalfQPoly a, const HalfQPoly& b) { return a -= b; }
    friend HalfQPoly operator*(const HalfQPoly& a, const HalfQPoly& b);
    HalfQPoly& operator*=(const HalfQPoly& o) { return *this = *this * o; }
    HalfQPoly operator*(const Integer& c) const;
    bool operator==(const HalfQPoly& o) const { return coeffs_ == o.coeffs_; }

    HalfQPoly pow(int e) const;
    // Multiply by t^k, k >= 0.
    HalfQPoly shifted(int k) const;

    Integer eval_at_one() const;
    // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    Integer content() const;
    HalfQPoly primitive_part() const;
    bool all_coeffs_nonnegative() const;

    // Debug/witness rendering in the t variable, ascending powers.
    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

// Exact division failed: the quotient does not exist over Integer
// coefficients.  Carries both operands for diagnosis.
class NonExactDivision : public std::runtime_error {
public:
    NonExactDivision(HalfQPoly dividend, HalfQPoly divisor);
    const HalfQPoly& dividend() const { return dividend_; }
    const HalfQPoly& divisor() const { return divisor_; }

private:
    HalfQPoly dividend_;
    HalfQPoly divisor_;
};

// Quotient q with a = b * q exactly; throws NonExactDivision otherwise.
HalfQPoly exact_div(const HalfQPoly& a, const HalfQPoly& b);

// Polynomial gcd (subresultant remainder sequence).  The result carries the
// integer content gcd, is primitive otherwise, and has a positive leading
// coefficient; gcd(0, 0) = 0.
HalfQPoly poly_gcd(const HalfQPoly& a, const HalfQPoly& b);

}  // namespace qfaul

#endif
