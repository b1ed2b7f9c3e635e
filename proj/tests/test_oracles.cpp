#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qfaul/numeric.hpp"
#include "qfaul/oracles.hpp"

using namespace qfaul;

namespace {

HalfQPoly poly(std::vector<long> cs) {
    std::vector<Integer> v(cs.begin(), cs.end());
    return HalfQPoly(std::move(v));
}

// Lift a polynomial in q to the t-representation (t^2 = q).
HalfQPoly from_q(std::vector<long> qs) {
    std::vector<Integer> v(qs.empty() ? 0 : 2 * qs.size() - 1, Integer(0));
    for (size_t i = 0; i < qs.size(); ++i) v[2 * i] = qs[i];
    return HalfQPoly(std::move(v));
}

Integer classical_sum(int m, int n) {
    Integer acc = 0;
    for (int k = 1; k <= n; ++k) acc += int_pow(Integer(k), m);
    return acc;
}

Integer classical_alternating(int m, int n) {
    Integer acc = 0;
    for (int k = 1; k <= n; ++k) {
        Integer term = int_pow(Integer(k), m);
        acc += ((n - k) % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("power sums at small indices") {
    // 1 + q + q^2: the three summands of the squares' q-analogue collapse.
    CHECK(sum_S(1, 2) == from_q({1, 1, 1}));
    CHECK(sum_S(3, 1) == poly({1}));
    CHECK(sum_S(1, 1) == poly({1}));

    // Half powers of q show up for even m: S_{2,2} = 1 + q + q^{3/2} + q^2 + q^3.
    CHECK(sum_S(2, 2) == poly({1, 0, 1, 1, 1, 0, 1}));

    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(sum_S(m, 0).is_zero());
        CHECK(sum_S(m, 1) == poly({1}));
    }
}

TEST_CASE("alternating sums at small indices") {
    CHECK(sum_T(2, 2) == from_q({1, 1, 1}));
    // T_{1,2} = -q^{1/2} + (1 + q).
    CHECK(sum_T(1, 2) == poly({1, -1, 1}));
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(sum_T(m, 0).is_zero());
        CHECK(sum_T(m, 1) == poly({1}));
    }
}

TEST_CASE("generalized sums") {
    CHECK(sum_S_general(4, 1, 1) == poly({1}));
    CHECK(sum_S_general(5, 2, 1) == from_q({1, 4, 6, 4, 3, 4, 6, 4, 1}));
    for (int m = 1; m <= 5; ++m)
        for (int n = 0; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(sum_S_general(m, n, 0) == sum_S(m, n));
        }
    for (int r = 0; r <= 3; ++r) CHECK(sum_S_general(3, 0, r).is_zero());
}

TEST_CASE("classical values at t=1") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(sum_S(m, n).eval_at_one() == classical_sum(m, n));
            CHECK(sum_T(m, n).eval_at_one() == classical_alternating(m, n));
            CHECK(sum_S_general(m, n, 2).eval_at_one() == classical_sum(m, n));
        }
}

TEST_CASE("degree and positivity of power sums") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            HalfQPoly p = sum_S(m, n);
            CHECK(p.all_coeffs_nonnegative());
            CHECK(p.degree() == 2 * (m + 1) * (n - 1));
            CHECK(p.coeff(0) == 1);
        }
}

TEST_CASE("summation lemma closed forms match the sums") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(lemma_main_rhs(m, n) == sum_S(m, n));
            if (m % 2 == 0) CHECK(lemma_oddq_rhs(m, n) == sum_S(m, n));
        }
}

TEST_CASE("alternating lemma closed forms match the sums") {
    // The odd-power lemma's right side flips shape with the parity of n, so
    // the n-grid must cover both parities.
    for (int m = 1; m <= 5; ++m)
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(lemma_tmn_rhs(m, n) == sum_T(2 * m, n));
            CHECK(lemma_todd_rhs(m, n) == sum_T(2 * m - 1, n));
        }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(sum_S(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sum_S(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(sum_T(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sum_S_general(2, 3, -1), std::invalid_argument);

    PowerSumSpec ok{PowerSumFamily::S_general, 3, 5, 2};
    CHECK_NOTHROW(ok.validate());
    PowerSumSpec bad_r{PowerSumFamily::S, 3, 5, 1};
    CHECK_THROWS_AS(bad_r.validate(), std::invalid_argument);
    PowerSumSpec big_r{PowerSumFamily::S_general, 2, 5, 3};
    CHECK_THROWS_AS(big_r.validate(), std::invalid_argument);
    PowerSumSpec bad_m{PowerSumFamily::S, 0, 5, 0};
    CHECK_THROWS_AS(bad_m.validate(), std::invalid_argument);
}
