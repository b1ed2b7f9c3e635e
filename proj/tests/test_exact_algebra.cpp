#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qfaul/bipoly.hpp"
#include "qfaul/halfq_poly.hpp"
#include "qfaul/numeric.hpp"
#include "qfaul/poly_matrix.hpp"
#include "qfaul/ratfn.hpp"

using namespace qfaul;

namespace {

HalfQPoly poly(std::vector<long> cs) {
    std::vector<Integer> v(cs.begin(), cs.end());
    return HalfQPoly(std::move(v));
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(3, -1) == 0);
    // Convention: choosing zero items is one way even from a negative count.
    CHECK(binomial(-2, 0) == 1);
    CHECK(binomial(-2, 1) == 0);

    CHECK(int_pow(Integer(3), 4) == 81);
    CHECK(int_pow(Integer(-2), 3) == -8);
    CHECK(int_pow(Integer(7), 0) == 1);

    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(6) == 60);
    CHECK(lcm_upto(10) == 2520);

    CHECK(make_rational(4, 6) == Rational(2, 3));
}

TEST_CASE("polynomial construction and normalization") {
    HalfQPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero == poly({}));
    CHECK(poly({0, 0, 0}).is_zero());

    HalfQPoly p = poly({1, 0, 2});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(5) == 0);
    CHECK(p.coeff(-1) == 0);
    CHECK(p.leading() == 2);
    CHECK_THROWS_AS(zero.leading(), std::logic_error);
}

TEST_CASE("polynomial factories") {
    CHECK(HalfQPoly::monomial(3, 2) == poly({0, 0, 3}));
    CHECK(HalfQPoly::monomial(0, 5).is_zero());
    CHECK(HalfQPoly::one_minus_t(1) == poly({1, -1}));
    CHECK(HalfQPoly::one_plus_t(3) == poly({1, 0, 0, 1}));
    CHECK(HalfQPoly::geometric(3, 2) == poly({1, 0, 1, 0, 1}));
    CHECK(HalfQPoly::geometric(0, 4).is_zero());
    CHECK(HalfQPoly::geometric(1, 4) == poly({1}));
}

TEST_CASE("ring arithmetic") {
    HalfQPoly a = poly({1, 2});
    HalfQPoly b = poly({-1, 0, 3});

    CHECK(a + b == poly({0, 2, 3}));
    CHECK(a - b == poly({2, 2, -3}));
    CHECK(a * b == poly({-1, -2, 3, 6}));
    CHECK(-b == poly({1, 0, -3}));
    CHECK(a * HalfQPoly() == HalfQPoly());
    CHECK(a * Integer(2) == poly({2, 4}));
    CHECK(a - a == HalfQPoly());

    // (1-t)(1+t+t^2) = 1 - t^3
    CHECK(HalfQPoly::one_minus_t(1) * HalfQPoly::geometric(3, 1) ==
          HalfQPoly::one_minus_t(3));

    CHECK(a.pow(0) == poly({1}));
    CHECK(a.pow(3) == poly({1, 6, 12, 8}));
    CHECK(a.shifted(2) == poly({0, 0, 1, 2}));
    CHECK(poly({1, 1}).eval_at_one() == 2);
    CHECK(poly({3, -1, 4}).eval_at_one() == 6);
}

TEST_CASE("content and primitive part") {
    HalfQPoly p = poly({6, -4, 10});
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == poly({3, -2, 5}));
    CHECK(HalfQPoly().content() == 0);
    CHECK(poly({0, 7}).content() == 7);
    CHECK(poly({1, 2}).all_coeffs_nonnegative());
    CHECK_FALSE(poly({1, -2}).all_coeffs_nonnegative());
}

TEST_CASE("exact division") {
    HalfQPoly n = HalfQPoly::one_minus_t(6);
    CHECK(exact_div(n, HalfQPoly::one_minus_t(2)) == HalfQPoly::geometric(3, 2));
    CHECK(exact_div(n, n) == poly({1}));
    CHECK(exact_div(HalfQPoly(), poly({1, 1})).is_zero());

    CHECK_THROWS_AS(exact_div(poly({1, 1, 1}), poly({1, 1})), NonExactDivision);
    CHECK_THROWS_AS(exact_div(poly({1}), HalfQPoly()), NonExactDivision);
    CHECK_THROWS_AS(exact_div(poly({2, 2}), poly({4})), NonExactDivision);

    try {
        exact_div(poly({1, 1, 1}), poly({1, 1}));
        FAIL("expected NonExactDivision");
    } catch (const NonExactDivision& e) {
        CHECK(e.dividend() == poly({1, 1, 1}));
        CHECK(e.divisor() == poly({1, 1}));
    }
}

TEST_CASE("polynomial gcd") {
    CHECK(poly_gcd(HalfQPoly(), HalfQPoly()).is_zero());
    CHECK(poly_gcd(poly({1, 1}), HalfQPoly()) == poly({1, 1}));

    // gcd(1-t^4, 1-t^6) is 1-t^2 up to sign; the result is normalized to a
    // positive leading coefficient.
    CHECK(poly_gcd(HalfQPoly::one_minus_t(4), HalfQPoly::one_minus_t(6)) ==
          -HalfQPoly::one_minus_t(2));

    // Content travels through the gcd; leading coefficient is positive.
    CHECK(poly_gcd(poly({2, 2}), poly({4, 4})) == poly({2, 2}));
    CHECK(poly_gcd(poly({-1, -1}), poly({-1, -2, -1})) == poly({1, 1}));

    HalfQPoly a = poly({1, 1}) * poly({1, 0, 1});
    HalfQPoly b = poly({1, 1}) * poly({2, 3});
    CHECK(poly_gcd(a, b) == poly({1, 1}));
}

TEST_CASE("bivariate polynomials") {
    BiPoly zero;
    CHECK(zero.is_zero());

    BiPoly x = BiPoly::monomial(1, 1, 0);
    BiPoly y = BiPoly::monomial(1, 0, 1);
    BiPoly one = BiPoly::constant(1);

    CHECK(x + y - x - y == BiPoly());
    CHECK((one - x) * (one + x) == one - BiPoly::monomial(1, 2, 0));
    CHECK(BiPoly::one_minus_monomial(1, 1) == one - x * y);
    CHECK(BiPoly::one_plus_monomial(2, 0) == one + BiPoly::monomial(1, 2, 0));
    CHECK((x * y).pow(3) == BiPoly::monomial(1, 3, 3));
    CHECK(x.pow(0) == one);

    // (1-xy)(1+xy) = 1 - x^2 y^2
    CHECK(BiPoly::one_minus_monomial(1, 1) * BiPoly::one_plus_monomial(1, 1) ==
          BiPoly::one_minus_monomial(2, 2));

    BiPoly embedded = BiPoly::from_poly_in_y(poly({1, 0, 2}));
    CHECK(embedded == one + BiPoly::monomial(2, 0, 2));

    // Lowest monomial: minimal total degree, ties by x-exponent.
    BiPoly w = BiPoly::monomial(5, 2, 1) + BiPoly::monomial(-3, 1, 2) +
               BiPoly::monomial(7, 4, 0);
    CHECK(w.lowest_monomial() == "-3*x*y^2");
    CHECK(BiPoly().lowest_monomial() == "0");
}

TEST_CASE("rational function canonical form") {
    RatFn zero;
    CHECK(zero.is_zero());
    CHECK(zero.den() == HalfQPoly(1));

    // 2(1+t) / 4 reduces; integer content is cleared too.
    RatFn f(poly({2, 2}), poly({4}));
    CHECK(f.num() == poly({1, 1}));
    CHECK(f.den() == poly({2}));

    // (1-t^2)/(1-t) = (1+t)/1
    RatFn g(HalfQPoly::one_minus_t(2), HalfQPoly::one_minus_t(1));
    CHECK(g.is_polynomial());
    CHECK(g.to_poly() == poly({1, 1}));

    // Denominator sign is normalized to a positive leading coefficient.
    RatFn h(poly({1}), poly({-1, -1}));
    CHECK(h.den() == poly({1, 1}));
    CHECK(h.num() == poly({-1}));

    // Equal values built along different routes compare equal.
    RatFn a(poly({1}), poly({1, 1}));
    RatFn b(poly({1, -1}), poly({1, 0, -1}));  // (1-t)/(1-t^2)
    CHECK(a == b);

    CHECK_THROWS_AS(RatFn(poly({1}), HalfQPoly()), std::invalid_argument);
}

TEST_CASE("rational function arithmetic") {
    RatFn t(HalfQPoly::monomial(1, 1));
    RatFn one(1);
    RatFn half = RatFn::from_rational(Rational(1, 2));
    CHECK(half + half == one);
    CHECK(half.num() == poly({1}));
    CHECK(half.den() == poly({2}));

    RatFn f = one / (one - t);                   // 1/(1-t)
    RatFn g = one / (one + t);                   // 1/(1+t)
    CHECK(f + g == RatFn(poly({2}), HalfQPoly::one_minus_t(2)));
    CHECK(f - g == RatFn(poly({0, 2}), HalfQPoly::one_minus_t(2)));
    CHECK(f * g == RatFn(poly({1}), HalfQPoly::one_minus_t(2)));
    CHECK(f / g == RatFn(poly({1, 1}), poly({1, -1})));

    CHECK(f.inverse() == RatFn(HalfQPoly::one_minus_t(1)));
    CHECK(f.pow(-2) == RatFn(HalfQPoly::one_minus_t(1).pow(2)));
    CHECK(f.pow(0) == one);
    CHECK(t.pow(3) == RatFn(HalfQPoly::monomial(1, 3)));
    CHECK_THROWS_AS(RatFn().inverse(), std::invalid_argument);

    // Telescoping sum: sum over k of t^k (1-t) = 1 - t^4.
    RatFn acc;
    for (int k = 0; k < 4; ++k)
        acc += RatFn(HalfQPoly::monomial(1, k) * HalfQPoly::one_minus_t(1));
    CHECK(acc.to_poly() == HalfQPoly::one_minus_t(4));

    CHECK_THROWS_AS(f.to_poly(), NonExactDivision);
}

TEST_CASE("matrix determinant and product") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = RatFn(poly({1, 1}));
    m.at(0, 1) = RatFn(1);
    m.at(1, 0) = RatFn(HalfQPoly::monomial(1, 1));
    m.at(1, 1) = RatFn(1);
    // det = (1+t) - t = 1
    CHECK(det(m) == RatFn(1));

    PolyMatrix id = PolyMatrix::identity(2);
    CHECK(m * id == m);
    CHECK(det(id) == RatFn(1));

    PolyMatrix singular(2, 2);
    singular.at(0, 0) = RatFn(1);
    singular.at(0, 1) = RatFn(1);
    singular.at(1, 0) = RatFn(1);
    singular.at(1, 1) = RatFn(1);
    CHECK(det(singular).is_zero());

    CHECK_THROWS_AS(det(PolyMatrix(2, 3)), NonSquare);
}

TEST_CASE("elementary symmetric functions") {
    std::vector<RatFn> vals = {RatFn(1), RatFn(2), RatFn(3)};
    CHECK(elem_sym(vals, 0) == RatFn(1));
    CHECK(elem_sym(vals, 1) == RatFn(6));
    CHECK(elem_sym(vals, 2) == RatFn(11));
    CHECK(elem_sym(vals, 3) == RatFn(6));
    CHECK(elem_sym(vals, 4).is_zero());
}

TEST_CASE("vandermonde inverse at distinct points") {
    std::vector<RatFn> pts = {RatFn::from_rational(Rational(1, 2)), RatFn(2),
                              RatFn(HalfQPoly::monomial(1, 1))};
    PolyMatrix v = vandermonde(pts);
    CHECK(v.rows() == 3);
    // Column layout: powers n-1 .. 0, so the last column is all ones.
    CHECK(v.at(0, 2) == RatFn(1));
    CHECK(v.at(2, 0) == RatFn(HalfQPoly::monomial(1, 2)));

    CHECK(matrix_inverse_check(v, vandermonde_inverse(pts)));

    std::vector<RatFn> dup = {RatFn(1), RatFn(1)};
    CHECK_THROWS_AS(vandermonde_inverse(dup), DuplicatePoints);
}
