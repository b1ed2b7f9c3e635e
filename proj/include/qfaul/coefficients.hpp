#ifndef QFAUL_COEFFICIENTS_HPP
#define QFAUL_COEFFICIENTS_HPP

#include <stdexcept>
#include <vector>

#include "qfaul/halfq_poly.hpp"

namespace qfaul {

// The six coefficient families.  P and G are polynomials in q (even t-powers
// after embedding); Q and H live in an unsubstituted variable u that the
// closed formulas later evaluate at u = q^(1/2), so their stored exponents are
// already t-exponents.  P_general/Q_general extend P/Q with the order r.
enum class CoeffFamily { P, Q, G, H, P_general, Q_general };

class UnsupportedIndex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IntegralityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoeffId {
    CoeffFamily family = CoeffFamily::P;
    int m = 0;
    int s = 0;
    int r = 0;  // general families only
    // Throws UnsupportedIndex outside the supported ranges.  G and H stop at
    // s = m-1: their closed forms divide by m-s and nothing defines s = m.
    void validate() const;
};

struct DivisorFactor {
    HalfQPoly base;
    int exponent;  // negative exponent means the factor multiplies instead
    bool operator==(const DivisorFactor&) const = default;
};

struct CoeffResult {
    HalfQPoly bar;      // the unreduced double sum, t-representation
    HalfQPoly reduced;  // the table polynomial, t-representation
    int sign;           // (-1)^s relating the two
    std::vector<DivisorFactor> divisor_profile;
};

// The unreduced P-family double sum, embedded as a polynomial in t (its
// variable is q, so exponents are doubled).
HalfQPoly pbar(int m, int s);

// Same sum in its own variable: exponent k of the raw polynomial is the
// k-th power of the closed form's variable.  Used by the bivariate identity
// checks, which work in that variable directly.
HalfQPoly coeff_bar_raw(const CoeffId& id);

// Bar polynomial, reduction by the family's divisor profile, and sign.
// Throws NonExactDivision if a divisibility claim fails and
// IntegralityViolation if the rational weights fail to clear.
CoeffResult coeff(const CoeffId& id);

// Independent route to the P-family bar polynomials: solve the (m+1)x(m+1)
// linear system with the Vandermonde-style matrix over rational functions and
// clear the product factors.  Returns bar polynomials for s = 0..m in the
// t-representation.  Throws SingularSystem if the solve degenerates.
std::vector<HalfQPoly> coeff_via_linear_system(int m);

}  // namespace qfaul

#endif
