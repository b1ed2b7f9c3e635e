#ifndef QFAUL_IDENTITIES_HPP
#define QFAUL_IDENTITIES_HPP

#include <optional>
#include <span>
#include <string>

#include "qfaul/bipoly.hpp"
#include "qfaul/coefficients.hpp"
#include "qfaul/poly_matrix.hpp"

namespace qfaul {

// Outcome of one identity check.  Both sides are compared exactly after
// clearing denominators; on failure the difference polynomial is kept and the
// summary names its lowest-degree monomial.
struct IdentityCase {
    std::string name;
    bool pass = false;
    std::optional<BiPoly> bivariate_witness;
    std::optional<HalfQPoly> univariate_witness;
    std::string witness_summary;  // empty iff pass
};

// Partial-fraction expansion of (1 - x^{m+1} y^{m+1}) /
// ((1-xy)(1-x)^m(1-y)^m) as a double sum over binomial-weighted terms.
// Both sides are multiplied by (1-xy)(1-x)^{2m}(1-y)^{2m} and compared as
// bivariate polynomials.  m >= 0.
IdentityCase check_mrsxy(int m);

// The two shifted variants (top binomial raised by one on either index),
// with closed right sides; cleared with (1-xy)(1-x)^{2m+2}(1-y)^{2m+2}.
IdentityCase check_mrsxy0(int m);
IdentityCase check_mrsxy00(int m);

// (1-x^{m+1})(1-y^{m+1})/((1-x)(1-y))^{m+1} as a weighted double sum; the
// weights (m+1)/(m+1-r-s) are rational, so both sides are scaled by
// lcm(1..m+1) before clearing.
IdentityCase check_1x1yrs(int m);

// Expansion of (1-x^m)(1-y^m) with weights m/(m-k); scaled by lcm(1..m).
// Trivially true at m = 0 (both sides vanish).
IdentityCase check_1x1yik(int m);

// The three-term binomial identity behind the integrality of the rational
// weights, checked exhaustively over 0 <= r <= m, 0 <= s <= m-r.
IdentityCase check_ppos(int m);

// Inverse of the power matrix (x_i^{n-j}) via elementary symmetric
// functions.  Verifies A * A^{-1} = I exactly.  Throws DuplicatePoints.
IdentityCase check_vandermonde_inverse(std::span<const RatFn> points);

// Determinant of the structured matrix ((1-x^i)^{n+1-j}(1-x^{i+1})^{n+1-j}
// x^{i(j-1)}) against its closed product form.  n >= 1.
IdentityCase check_det_variant(int n);

// The bivariate identity that generates a coefficient family: alternating
// binomial sum on the left, bar-polynomial-weighted factored sum on the
// right, after multiplying both sides by the full denominator product.
// Supported families: P (m >= 0), Q (m >= 1), G (m >= 1).
IdentityCase check_reconstruction_bivariate(CoeffFamily family, int m);

}  // namespace qfaul

#endif
