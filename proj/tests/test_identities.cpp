#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qfaul/identities.hpp"
#include "qfaul/numeric.hpp"
#include "qfaul/poly_matrix.hpp"
#include "qfaul/ratfn.hpp"

using namespace qfaul;

namespace {

void check_passes(const IdentityCase& c) {
    CAPTURE(c.name);
    CAPTURE(c.witness_summary);
    CHECK(c.pass);
    CHECK(c.witness_summary.empty());
    CHECK_FALSE(c.bivariate_witness.has_value());
    CHECK_FALSE(c.univariate_witness.has_value());
}

}  // namespace

TEST_CASE("partial-fraction expansion") {
    // m=0 reduces to 1/(1-xy) * (1-xy) = 1; larger m exercise the full
    // binomial-weighted double sum.
    for (int m : {0, 1, 2, 3, 6}) check_passes(check_mrsxy(m));
    CHECK(check_mrsxy(3).name == "mrsxy m=3");
    CHECK_THROWS_AS(check_mrsxy(-1), std::invalid_argument);
}

TEST_CASE("shifted expansions") {
    for (int m : {0, 1, 2, 5}) {
        check_passes(check_mrsxy0(m));
        check_passes(check_mrsxy00(m));
    }
}

TEST_CASE("weighted double-sum corollaries") {
    for (int m : {0, 1, 4}) check_passes(check_1x1yrs(m));
    // m=0 is the empty case: both sides vanish identically.
    for (int m : {0, 1, 2, 4}) check_passes(check_1x1yik(m));
}

TEST_CASE("binomial product difference stays nonnegative") {
    for (int m : {0, 1, 3, 8}) check_passes(check_ppos(m));
    CHECK(check_ppos(5).name == "ppos m=5");
}

TEST_CASE("inverse matrix of power points") {
    std::vector<RatFn> pts = {RatFn::from_rational(Rational(1, 2)),
                              RatFn::from_rational(Rational(-2, 3)), RatFn(3)};
    check_passes(check_vandermonde_inverse(pts));
    CHECK(check_vandermonde_inverse(pts).name == "vandermonde-inverse n=3");

    // Symbolic points: rational functions of t.
    std::vector<RatFn> sym;
    for (int i = 1; i <= 3; ++i)
        sym.emplace_back(
            HalfQPoly::one_minus_t(2 * i) * HalfQPoly::one_minus_t(2 * i + 2),
            HalfQPoly::monomial(1, 2 * i));
    check_passes(check_vandermonde_inverse(sym));

    std::vector<RatFn> dup = {RatFn(2), RatFn(2)};
    CHECK_THROWS_AS(check_vandermonde_inverse(dup), DuplicatePoints);
}

TEST_CASE("structured determinant closed form") {
    for (int n : {1, 2, 4}) check_passes(check_det_variant(n));
    CHECK(check_det_variant(2).name == "det-variant n=2");
    CHECK_THROWS_AS(check_det_variant(0), std::invalid_argument);
}

TEST_CASE("coefficient reconstruction identities") {
    for (int m : {0, 1, 2, 3}) check_passes(check_reconstruction_bivariate(CoeffFamily::P, m));
    for (int m : {1, 2, 3}) check_passes(check_reconstruction_bivariate(CoeffFamily::Q, m));
    for (int m : {1, 2, 4}) check_passes(check_reconstruction_bivariate(CoeffFamily::G, m));
    CHECK_THROWS_AS(check_reconstruction_bivariate(CoeffFamily::H, 2),
                    UnsupportedIndex);
}
