#ifndef QFAUL_ORACLES_HPP
#define QFAUL_ORACLES_HPP

#include <stdexcept>

#include "qfaul/halfq_poly.hpp"

namespace qfaul {

// Brute-force reference values for the three power-sum families, computed
// straight from their defining sums by polynomial arithmetic alone.  These are
// the ground truth every closed form in the library is checked against.
//
// All results are polynomials in t = q^(1/2); a q-exponent j appears as t^(2j).

// Which defining sum a power-sum request refers to.
enum class PowerSumFamily { S, T, S_general };

struct PowerSumSpec {
    PowerSumFamily family = PowerSumFamily::S;
    int m = 1;  // power index, >= 1
    int n = 0;  // upper summation limit, >= 0
    int r = 0;  // generalization order, S_general only
    // Enforces m >= 1, n >= 0, r >= 0, r == 0 unless S_general, and the
    // hypothesis r <= m carried by the generalized family.
    void validate() const;
};

// sum_{k=1..n} [(1-q^{2k})/(1-q^2)] [(1-q^k)/(1-q)]^{m-1} q^{(m+1)(n-k)/2}
HalfQPoly sum_S(int m, int n);

// sum_{k=1..n} (-1)^{n-k} [(1-q^k)/(1-q)]^m q^{m(n-k)/2}
HalfQPoly sum_T(int m, int n);

// sum_{k=1..n} [(1-q^{(2r+2)k})/(1-q^{2r+2})] [(1-q^k)/(1-q)]^{m-1}
//              q^{(m+2r+1)(n-k)/2}
HalfQPoly sum_S_general(int m, int n, int r);

// Partial-fraction right sides of the summation lemmas, evaluated exactly as
// rational functions and returned as the polynomial they reduce to.  Each one
// must agree with the matching brute-force sum.

// Equals sum_S(m, n); m >= 1.
HalfQPoly lemma_main_rhs(int m, int n);

// Odd-exponent variant, defined for even m only; equals sum_S(m, n).
HalfQPoly lemma_oddq_rhs(int m, int n);

// Equals sum_T(2m, n); m >= 1.
HalfQPoly lemma_tmn_rhs(int m, int n);

// Equals sum_T(2m-1, n); m >= 1.  The right side depends on the parity of n.
HalfQPoly lemma_todd_rhs(int m, int n);

}  // namespace qfaul

#endif
