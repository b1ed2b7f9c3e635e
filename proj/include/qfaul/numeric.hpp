#ifndef QFAUL_NUMERIC_HPP
#define QFAUL_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>

namespace qfaul {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Binomial coefficient with the convention used throughout:
//   C(n, k) = 0 for k < 0,
//   C(n, 0) = 1 for every n (negative n included),
//   C(n, k) = 0 for n < 0, k > 0, and for 0 <= n < k.
inline Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < 0 || n < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer int_pow(const Integer& base, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// lcm(1..n); lcm of the empty range is 1.
inline Integer lcm_upto(long n) {
    Integer l = 1;
    for (long i = 2; i <= n; ++i) {
        Integer g = int_gcd(l, Integer(i));
        l = l / g * i;
    }
    return l;
}

}  // namespace qfaul

#endif
