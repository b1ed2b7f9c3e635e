#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qfaul/coefficients.hpp"
#include "qfaul/numeric.hpp"

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

// reduced * (divided factors) == sign * bar * (multiplied factors).
bool recomposes(const CoeffResult& res) {
    HalfQPoly lhs = res.reduced;
    HalfQPoly rhs = res.sign < 0 ? -res.bar : res.bar;
    for (const auto& f : res.divisor_profile) {
        if (f.exponent > 0)
            lhs *= f.base.pow(f.exponent);
        else if (f.exponent < 0)
            rhs *= f.base.pow(-f.exponent);
    }
    return lhs == rhs;
}

}  // namespace

TEST_CASE("table spot checks") {
    CHECK(coeff({CoeffFamily::P, 0, 0, 0}).reduced == poly({1}));
    CHECK(coeff({CoeffFamily::P, 3, 1, 0}).reduced == from_q({2, 2}));
    CHECK(coeff({CoeffFamily::P, 4, 2, 0}).reduced == from_q({5, 13, 13, 5}));
    CHECK(coeff({CoeffFamily::P, 5, 1, 0}).reduced == from_q({4, 6, 6, 4}));

    // Q and H live in the variable the formulas read at q^(1/2); their stored
    // exponents are the table exponents unchanged.
    CHECK(coeff({CoeffFamily::Q, 1, 0, 0}).reduced == poly({1}));
    CHECK(coeff({CoeffFamily::Q, 3, 1, 0}).reduced == poly({2, 1, 2}));
    CHECK(coeff({CoeffFamily::Q, 4, 1, 0}).reduced == poly({3, 2, 4, 2, 3}));
    CHECK(coeff({CoeffFamily::Q, 4, 2, 0}).reduced ==
          poly({5, 6, 15, 11, 15, 6, 5}));

    CHECK(coeff({CoeffFamily::G, 2, 1, 0}).reduced == from_q({2}));
    CHECK(coeff({CoeffFamily::G, 4, 2, 0}).reduced == from_q({10, 24, 24, 10}));
    CHECK(coeff({CoeffFamily::H, 3, 1, 0}).reduced == poly({3, 2, 3}));
    CHECK(coeff({CoeffFamily::H, 4, 2, 0}).reduced ==
          poly({10, 15, 30, 26, 30, 15, 10}));
}

TEST_CASE("factored display forms") {
    // (q+1)(9q^4+19q^3+29q^2+19q+9)
    CHECK(coeff({CoeffFamily::P, 5, 2, 0}).reduced ==
          from_q({1, 1}) * from_q({9, 19, 29, 19, 9}));
    // 5(q+1)^2(7q^4+14q^3+20q^2+14q+7)
    CHECK(coeff({CoeffFamily::G, 5, 3, 0}).reduced ==
          from_q({1, 1}) * from_q({1, 1}) * from_q({7, 14, 20, 14, 7}) *
              Integer(5));
    // 2(3q^2+2q+3) in the unsubstituted variable.
    CHECK(coeff({CoeffFamily::H, 3, 2, 0}).reduced ==
          poly({3, 2, 3}) * Integer(2));
}

TEST_CASE("structural facts") {
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(coeff({CoeffFamily::P, m, m, 0}).reduced.is_zero());
        CHECK(coeff({CoeffFamily::Q, m, m, 0}).reduced.is_zero());
    }
    for (int m = 0; m <= 6; ++m)
        for (int s = 0; s <= m; ++s) {
            CAPTURE(m);
            CAPTURE(s);
            Integer want = binomial(m + s - 2, s) - binomial(m + s - 2, s - 2);
            CHECK(coeff({CoeffFamily::P, m, s, 0}).reduced.coeff(0) == want);
            if (m >= 1)
                CHECK(coeff({CoeffFamily::Q, m, s, 0}).reduced.coeff(0) == want);
        }
    for (int m = 2; m <= 6; ++m)
        for (int s = 1; s < m; ++s) {
            CAPTURE(m);
            CAPTURE(s);
            // In stored exponents both degrees read s(2m-3-s): the P family
            // doubles its q-degree s(2m-3-s)/2, Q keeps its own.
            CHECK(coeff({CoeffFamily::P, m, s, 0}).reduced.degree() ==
                  s * (2 * m - 3 - s));
            CHECK(coeff({CoeffFamily::Q, m, s, 0}).reduced.degree() ==
                  s * (2 * m - 3 - s));
        }
}

TEST_CASE("bar polynomial recomposition") {
    for (int m = 0; m <= 5; ++m)
        for (int s = 0; s <= m; ++s) {
            CAPTURE(m);
            CAPTURE(s);
            CHECK(recomposes(coeff({CoeffFamily::P, m, s, 0})));
            if (m >= 1) CHECK(recomposes(coeff({CoeffFamily::Q, m, s, 0})));
            if (m >= 1 && s < m) {
                CHECK(recomposes(coeff({CoeffFamily::G, m, s, 0})));
                CHECK(recomposes(coeff({CoeffFamily::H, m, s, 0})));
            }
        }
    for (int m = 0; m <= 5; ++m)
        for (int r = 0; r <= m; ++r)
            for (int s = 0; s <= m; ++s) {
                CAPTURE(m);
                CAPTURE(r);
                CAPTURE(s);
                CHECK(recomposes(coeff({CoeffFamily::P_general, m, s, r})));
                if (r < m)
                    CHECK(recomposes(coeff({CoeffFamily::Q_general, m, s, r})));
            }
}

TEST_CASE("generalized families extend the plain ones") {
    for (int m = 0; m <= 5; ++m)
        for (int s = 0; s <= m; ++s) {
            CAPTURE(m);
            CAPTURE(s);
            CHECK(coeff({CoeffFamily::P_general, m, s, 0}).reduced ==
                  coeff({CoeffFamily::P, m, s, 0}).reduced);
            if (m >= 1)
                CHECK(coeff({CoeffFamily::Q_general, m, s, 0}).reduced ==
                      coeff({CoeffFamily::Q, m, s, 0}).reduced);
        }

    // First generalized entry: the whole denominator power turns around and
    // multiplies instead, giving (1-q)^{2r}.
    CHECK(coeff({CoeffFamily::P_general, 3, 0, 1}).reduced ==
          from_q({1, -1}).pow(2));
    CHECK(coeff({CoeffFamily::P_general, 4, 0, 2}).reduced ==
          from_q({1, -1}).pow(4));
}

TEST_CASE("independent linear-system route") {
    for (int m = 0; m <= 3; ++m) {
        std::vector<HalfQPoly> bars = coeff_via_linear_system(m);
        REQUIRE(static_cast<int>(bars.size()) == m + 1);
        for (int s = 0; s <= m; ++s) {
            CAPTURE(m);
            CAPTURE(s);
            CHECK(bars[static_cast<size_t>(s)] == pbar(m, s));
        }
    }
    CHECK_THROWS_AS(coeff_via_linear_system(-1), UnsupportedIndex);
}

TEST_CASE("pbar equals the bar inside coeff") {
    for (int m = 0; m <= 4; ++m)
        for (int s = 0; s <= m; ++s) {
            CAPTURE(m);
            CAPTURE(s);
            CHECK(pbar(m, s) == coeff({CoeffFamily::P, m, s, 0}).bar);
        }
    CHECK(pbar(0, 0) == poly({1}));
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(coeff({CoeffFamily::P, -1, 0, 0}), UnsupportedIndex);
    CHECK_THROWS_AS(coeff({CoeffFamily::P, 2, 3, 0}), UnsupportedIndex);
    CHECK_THROWS_AS(coeff({CoeffFamily::P, 2, 1, 1}), UnsupportedIndex);
    CHECK_THROWS_AS(coeff({CoeffFamily::Q, 0, 0, 0}), UnsupportedIndex);
    CHECK_THROWS_AS(coeff({CoeffFamily::G, 3, 3, 0}), UnsupportedIndex);
    CHECK_THROWS_AS(coeff({CoeffFamily::H, 3, 3, 0}), UnsupportedIndex);
    CHECK_THROWS_AS(coeff({CoeffFamily::P_general, 3, 0, 4}), UnsupportedIndex);
    CHECK_THROWS_AS(coeff({CoeffFamily::Q_general, 3, 0, 3}), UnsupportedIndex);
    CHECK_NOTHROW(coeff({CoeffFamily::P_general, 3, 0, 3}));
}
