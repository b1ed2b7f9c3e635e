#include "qfaul/oracles.hpp"

#include "qfaul/ratfn.hpp"

namespace qfaul {

namespace {

// 1 - t^e, with the degenerate 1 - t^0 = 0 allowed (it shows up at n = 0).
HalfQPoly one_minus_pow(int e) { return e == 0 ? HalfQPoly() : HalfQPoly::one_minus_t(e); }

}  // namespace

void PowerSumSpec::validate() const {
    if (m < 1) throw std::invalid_argument("PowerSumSpec: power index must be >= 1");
    if (n < 0) throw std::invalid_argument("PowerSumSpec: upper limit must be >= 0");
    if (r < 0) throw std::invalid_argument("PowerSumSpec: order must be >= 0");
    if (family != PowerSumFamily::S_general && r != 0)
        throw std::invalid_argument("PowerSumSpec: r applies to the generalized family only");
    if (family == PowerSumFamily::S_general && r > m)
        throw std::invalid_argument("PowerSumSpec: generalized family requires r <= m");
}

HalfQPoly sum_S(int m, int n) { return sum_S_general(m, n, 0); }

HalfQPoly sum_T(int m, int n) {
    if (m < 1) throw std::invalid_argument("sum_T: power must be >= 1");
    if (n < 0) throw std::invalid_argument("sum_T: upper limit must be >= 0");
    HalfQPoly acc;
    for (int k = 1; k <= n; ++k) {
        // [(1-q^k)/(1-q)]^m = (1 + t^2 + ... + t^{2(k-1)})^m
        HalfQPoly term = HalfQPoly::geometric(k, 2).pow(m).shifted(m * (n - k));
        if ((n - k) % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

HalfQPoly sum_S_general(int m, int n, int r) {
    if (m < 1) throw std::invalid_argument("sum_S_general: power must be >= 1");
    if (n < 0) throw std::invalid_argument("sum_S_general: upper limit must be >= 0");
    if (r < 0) throw std::invalid_argument("sum_S_general: order must be >= 0");
    HalfQPoly acc;
    for (int k = 1; k <= n; ++k) {
        // (1-q^{(2r+2)k})/(1-q^{2r+2}) = 1 + t^{4r+4} + ... (k terms)
        HalfQPoly term = HalfQPoly::geometric(k, 4 * r + 4);
        term *= HalfQPoly::geometric(k, 2).pow(m - 1);
        acc += term.shifted((m + 2 * r + 1) * (n - k));
    }
    return acc;
}

HalfQPoly lemma_main_rhs(int m, int n) {
    if (m < 1) throw std::invalid_argument("lemma_main_rhs: power must be >= 1");
    if (n < 0) throw std::invalid_argument("lemma_main_rhs: upper limit must be >= 0");
    RatFn acc;
    HalfQPoly base_den = HalfQPoly::one_minus_t(4) * HalfQPoly::one_minus_t(2).pow(m - 1);
    for (int r = 0; r <= m / 2; ++r) {
        Integer c = binomial(m - 1, r) - binomial(m - 1, r - 2);
        if (c == 0) continue;
        int e = m + 1 - 2 * r;  // the exponent (m+1)/2 - r, in t units
        HalfQPoly num = one_minus_pow(e * n);
        HalfQPoly second = (m % 2 == 0) ? HalfQPoly::one_plus_t(e * (n + 1))
                                        : HalfQPoly::one_minus_t(e * (n + 1));
        num = num * second;
        num = num.shifted(2 * r * n) * c;
        if (r % 2 != 0) num = -num;
        acc += RatFn(std::move(num), base_den * HalfQPoly::one_minus_t(e));
    }
    return acc.to_poly();
}

HalfQPoly lemma_oddq_rhs(int m, int n) {
    if (m < 1 || m % 2 != 0)
        throw std::invalid_argument("lemma_oddq_rhs: defined for even powers only");
    if (n < 0) throw std::invalid_argument("lemma_oddq_rhs: upper limit must be >= 0");
    RatFn acc;
    HalfQPoly base_den = HalfQPoly::one_minus_t(4) * HalfQPoly::one_minus_t(2).pow(m - 1);
    for (int r = 0; r <= m / 2; ++r) {
        Integer c = binomial(m - 1, r) - binomial(m - 1, r - 2);
        if (c == 0) continue;
        int e = m + 1 - 2 * r;
        HalfQPoly num = HalfQPoly::one_minus_t(e * (2 * n + 1)).shifted(2 * n * r) * c;
        if (r % 2 != 0) num = -num;
        acc += RatFn(std::move(num), base_den * HalfQPoly::one_minus_t(e));
    }
    return acc.to_poly();
}

HalfQPoly lemma_tmn_rhs(int m, int n) {
    if (m < 1) throw std::invalid_argument("lemma_tmn_rhs: index must be >= 1");
    if (n < 0) throw std::invalid_argument("lemma_tmn_rhs: upper limit must be >= 0");
    RatFn acc;
    HalfQPoly base_den = HalfQPoly::one_minus_t(2).pow(2 * m);
    for (int r = 0; r <= m - 1; ++r) {
        Integer c = binomial(2 * m, r);
        int e = m - r;
        HalfQPoly num = one_minus_pow(2 * n * e) * HalfQPoly::one_minus_t(2 * (n + 1) * e);
        num = num.shifted(2 * r * n) * c;
        if (r % 2 != 0) num = -num;
        acc += RatFn(std::move(num), base_den * HalfQPoly::one_plus_t(2 * e));
    }
    return acc.to_poly();
}

HalfQPoly lemma_todd_rhs(int m, int n) {
    if (m < 1) throw std::invalid_argument("lemma_todd_rhs: index must be >= 1");
    if (n < 0) throw std::invalid_argument("lemma_todd_rhs: upper limit must be >= 0");
    RatFn acc;
    HalfQPoly base_den = HalfQPoly::one_minus_t(2).pow(2 * m - 1);
    for (int r = 0; r <= m - 1; ++r) {
        Integer c = binomial(2 * m - 1, r);
        int e = 2 * m - 2 * r - 1;  // the exponent m - r - 1/2, in t units
        HalfQPoly den = base_den * HalfQPoly::one_plus_t(e);

        HalfQPoly first = HalfQPoly::one_minus_t(e).shifted((2 * m - 1) * n) * c;
        if ((n + r + 1) % 2 != 0) first = -first;
        acc += RatFn(std::move(first), den);

        HalfQPoly second = HalfQPoly::one_minus_t((2 * n + 1) * e).shifted(2 * r * n) * c;
        if (r % 2 != 0) second = -second;
        acc += RatFn(std::move(second), den);
    }
    return acc.to_poly();
}

}  // namespace qfaul
