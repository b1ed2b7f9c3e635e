#include "qfaul/identities.hpp"

#include <vector>

namespace qfaul {

namespace {

IdentityCase finish_bivariate(std::string name, const BiPoly& lhs, const BiPoly& rhs) {
    IdentityCase c;
    c.name = std::move(name);
    BiPoly diff = lhs - rhs;
    if (diff.is_zero()) {
        c.pass = true;
    } else {
        c.witness_summary = "lowest offending monomial: " + diff.lowest_monomial();
        c.bivariate_witness = std::move(diff);
    }
    return c;
}

IdentityCase finish_univariate(std::string name, const HalfQPoly& lhs, const HalfQPoly& rhs) {
    IdentityCase c;
    c.name = std::move(name);
    HalfQPoly diff = lhs - rhs;
    if (diff.is_zero()) {
        c.pass = true;
    } else {
        int e = 0;
        while (diff.coeff(e) == 0) ++e;
        c.witness_summary =
            "lowest offending monomial: " + diff.coeff(e).get_str() + "*t^" + std::to_string(e);
        c.univariate_witness = std::move(diff);
    }
    return c;
}

// powers[e] = base^e for e = 0..max.
std::vector<BiPoly> power_table(const BiPoly& base, int max) {
    std::vector<BiPoly> p;
    p.reserve(static_cast<size_t>(max) + 1);
    p.push_back(BiPoly::constant(1));
    for (int e = 1; e <= max; ++e) p.push_back(p.back() * base);
    return p;
}

std::string name_with_m(const char* base, int m) {
    return std::string(base) + " m=" + std::to_string(m);
}

}  // namespace

IdentityCase check_mrsxy(int m) {
    if (m < 0) throw std::invalid_argument("check_mrsxy: m must be >= 0");
    int M = 2 * m;
    auto px = power_table(BiPoly::one_minus_monomial(1, 0), M);
    auto py = power_table(BiPoly::one_minus_monomial(0, 1), M);
    BiPoly onexy = BiPoly::one_minus_monomial(1, 1);

    BiPoly lhs = BiPoly::one_minus_monomial(m + 1, m + 1) * px[static_cast<size_t>(M - m)] *
                 py[static_cast<size_t>(M - m)];
    BiPoly rhs;
    for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= m - r; ++s) {
            Integer w = binomial(m - r, s) * binomial(m - s, r);
            if (w == 0) continue;
            rhs += BiPoly::monomial(std::move(w), r, s) * onexy *
                   px[static_cast<size_t>(M - r - s)] * py[static_cast<size_t>(M - r - s)];
        }
    return finish_bivariate(name_with_m("mrsxy", m), lhs, rhs);
}

namespace {

// Shared engine for the two shifted variants: bump selects which top binomial
// gains +1.  The closed right side differs by an x<->y swap.
IdentityCase check_mrsxy_shifted(int m, bool bump_first) {
    int M = 2 * m + 2;
    auto px = power_table(BiPoly::one_minus_monomial(1, 0), M);
    auto py = power_table(BiPoly::one_minus_monomial(0, 1), M);
    BiPoly onexy = BiPoly::one_minus_monomial(1, 1);

    BiPoly sum;
    for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= m - r; ++s) {
            Integer w = bump_first ? binomial(m - r + 1, s) * binomial(m - s, r)
                                   : binomial(m - r, s) * binomial(m - s + 1, r);
            if (w == 0) continue;
            sum += BiPoly::monomial(std::move(w), r, s) * onexy *
                   px[static_cast<size_t>(M - r - s)] * py[static_cast<size_t>(M - r - s)];
        }

    // 1 - x^{m+2}y^{m+2} - v(1 - x^{m+1}y^{m+1}) - (1-xy) w^{m+1}, where
    // (v, w) = (x, y) for the first variant and (y, x) for the second.
    BiPoly closed = BiPoly::constant(1) - BiPoly::monomial(Integer(1), m + 2, m + 2);
    if (bump_first) {
        closed -= BiPoly::monomial(Integer(1), 1, 0) * BiPoly::one_minus_monomial(m + 1, m + 1);
        closed -= onexy * BiPoly::monomial(Integer(1), 0, m + 1);
    } else {
        closed -= BiPoly::monomial(Integer(1), 0, 1) * BiPoly::one_minus_monomial(m + 1, m + 1);
        closed -= onexy * BiPoly::monomial(Integer(1), m + 1, 0);
    }
    closed *= px[static_cast<size_t>(M - m - 1)] * py[static_cast<size_t>(M - m - 1)];

    return finish_bivariate(name_with_m(bump_first ? "mrsxy0" : "mrsxy00", m), sum, closed);
}

}  // namespace

IdentityCase check_mrsxy0(int m) {
    if (m < 0) throw std::invalid_argument("check_mrsxy0: m must be >= 0");
    return check_mrsxy_shifted(m, true);
}

IdentityCase check_mrsxy00(int m) {
    if (m < 0) throw std::invalid_argument("check_mrsxy00: m must be >= 0");
    return check_mrsxy_shifted(m, false);
}

IdentityCase check_1x1yrs(int m) {
    if (m < 0) throw std::invalid_argument("check_1x1yrs: m must be >= 0");
    int M = 2 * m + 2;
    Integer L = lcm_upto(m + 1);
    auto px = power_table(BiPoly::one_minus_monomial(1, 0), M);
    auto py = power_table(BiPoly::one_minus_monomial(0, 1), M);
    BiPoly onexy = BiPoly::one_minus_monomial(1, 1);

    BiPoly lhs = BiPoly::one_minus_monomial(m + 1, 0) * BiPoly::one_minus_monomial(0, m + 1) *
                 onexy * px[static_cast<size_t>(M - m - 1)] * py[static_cast<size_t>(M - m - 1)] *
                 L;
    BiPoly rhs;
    for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= m - r; ++s) {
            Integer w = L * (m + 1) / (m + 1 - r - s) * binomial(m - r, s) * binomial(m - s, r);
            if (w == 0) continue;
            rhs += BiPoly::monomial(std::move(w), r, s) * onexy *
                   px[static_cast<size_t>(M - r - s)] * py[static_cast<size_t>(M - r - s)];
        }
    return finish_bivariate(name_with_m("1x1yrs", m), lhs, rhs);
}

IdentityCase check_1x1yik(int m) {
    if (m < 0) throw std::invalid_argument("check_1x1yik: m must be >= 0");
    if (m == 0) {
        IdentityCase c;
        c.name = name_with_m("1x1yik", 0);
        c.pass = true;  // both sides are the zero polynomial
        return c;
    }
    Integer L = lcm_upto(m);
    auto px = power_table(BiPoly::one_minus_monomial(1, 0), m);
    auto py = power_table(BiPoly::one_minus_monomial(0, 1), m);

    BiPoly lhs =
        BiPoly::one_minus_monomial(m, 0) * BiPoly::one_minus_monomial(0, m) * L;
    BiPoly rhs;
    for (int k = 0; k <= m - 1; ++k)
        for (int i = 0; i <= k; ++i) {
            Integer w =
                L * m / (m - k) * binomial(m - k + i - 1, i) * binomial(m - i - 1, k - i);
            if (w == 0) continue;
            rhs += BiPoly::monomial(std::move(w), i, k - i) * px[static_cast<size_t>(m - k)] *
                   py[static_cast<size_t>(m - k)];
        }
    return finish_bivariate(name_with_m("1x1yik", m), lhs, rhs);
}

IdentityCase check_ppos(int m) {
    if (m < 0) throw std::invalid_argument("check_ppos: m must be >= 0");
    IdentityCase c;
    c.name = name_with_m("ppos", m);
    for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= m - r; ++s) {
            Rational lhs = make_rational(Integer(m + 1), Integer(m + 1 - r - s));
            Integer prod = binomial(m - r, s) * binomial(m - s, r);
            lhs *= Rational(prod);
            Integer rhs = binomial(m - r + 1, s) * binomial(m - s, r) +
                          binomial(m - r, s) * binomial(m - s + 1, r) -
                          binomial(m - r, s) * binomial(m - s, r);
            if (lhs != Rational(rhs)) {
                c.pass = false;
                c.witness_summary = "fails at r=" + std::to_string(r) + " s=" + std::to_string(s);
                return c;
            }
        }
    c.pass = true;
    return c;
}

IdentityCase check_vandermonde_inverse(std::span<const RatFn> points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw DuplicatePoints("check_vandermonde_inverse: coincident points");
    IdentityCase c;
    c.name = "vandermonde-inverse n=" + std::to_string(points.size());
    c.pass = matrix_inverse_check(vandermonde(points), vandermonde_inverse(points));
    if (!c.pass) c.witness_summary = "product differs from the identity matrix";
    return c;
}

IdentityCase check_det_variant(int n) {
    if (n < 1) throw std::invalid_argument("check_det_variant: n must be >= 1");
    PolyMatrix a(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            HalfQPoly e = HalfQPoly::one_minus_t(i).pow(n + 1 - j) *
                          HalfQPoly::one_minus_t(i + 1).pow(n + 1 - j);
            a.at(i - 1, j - 1) = RatFn(e.shifted(i * (j - 1)));
        }
    HalfQPoly lhs = det(a).to_poly();

    HalfQPoly rhs(Integer(1));
    for (int k = 1; k <= n; ++k)
        rhs *= HalfQPoly::one_minus_t(2 * k - 1).pow(n + 1 - k) *
               HalfQPoly::one_minus_t(2 * k).pow(n + 1 - k);
    rhs = rhs.shifted(n * (n * n - 1) / 6);
    if ((n * (n - 1) / 2) % 2 != 0) rhs = -rhs;

    return finish_univariate("det-variant n=" + std::to_string(n), lhs, rhs);
}

IdentityCase check_reconstruction_bivariate(CoeffFamily family, int m) {
    auto raw = [&](int s) { return coeff_bar_raw({family, m, s, 0}); };
    BiPoly lhs, rhs;
    std::string label;

    if (family == CoeffFamily::P) {
        if (m < 0) throw std::invalid_argument("reconstruction P: m must be >= 0");
        label = "reconstruction P";
        auto px = power_table(BiPoly::one_minus_monomial(1, 0), m + 1);
        auto pxy = power_table(BiPoly::one_minus_monomial(1, 1), m + 1);
        for (int k = 0; k <= m; ++k) {
            Integer c = binomial(2 * m, k) - binomial(2 * m, k - 2);
            BiPoly term = BiPoly::one_minus_monomial(m + 1 - k, 0) *
                          BiPoly::one_minus_monomial(m + 1 - k, m + 1 - k) *
                          BiPoly::monomial(c, k, 0);
            for (int j = 0; j <= m; ++j)
                if (j != k) term *= BiPoly::one_minus_monomial(0, m + 1 - j);
            if (k % 2 != 0) term = -term;
            lhs += term;
        }
        for (int s = 0; s <= m; ++s) {
            BiPoly term = BiPoly::from_poly_in_y(raw(s)) * BiPoly::monomial(Integer(1), s, 0) *
                          px[static_cast<size_t>(m + 1 - s)] * pxy[static_cast<size_t>(m + 1 - s)];
            for (int i = s + 1; i <= m; ++i) term *= BiPoly::one_minus_monomial(0, m + 1 - i);
            rhs += term;
        }
    } else if (family == CoeffFamily::Q) {
        if (m < 1) throw std::invalid_argument("reconstruction Q: m must be >= 1");
        label = "reconstruction Q";
        auto px = power_table(BiPoly::one_minus_monomial(1, 0), m);
        auto pxy2 = power_table(BiPoly::one_minus_monomial(1, 2), m);
        BiPoly onexy = BiPoly::one_minus_monomial(1, 1);
        for (int k = 0; k <= m; ++k) {
            Integer c = binomial(2 * m - 1, k) - binomial(2 * m - 1, k - 2);
            BiPoly term = BiPoly::one_minus_monomial(2 * m - 2 * k + 1, 2 * m - 2 * k + 1) *
                          BiPoly::monomial(c, k, 0);
            for (int j = 0; j <= m; ++j)
                if (j != k) term *= BiPoly::one_minus_monomial(0, 2 * m - 2 * j + 1);
            if (k % 2 != 0) term = -term;
            lhs += term;
        }
        for (int s = 0; s <= m; ++s) {
            BiPoly term = BiPoly::from_poly_in_y(raw(s)) * BiPoly::monomial(Integer(1), s, 0) *
                          px[static_cast<size_t>(m - s)] * pxy2[static_cast<size_t>(m - s)] *
                          onexy;
            for (int i = s + 1; i <= m; ++i) term *= BiPoly::one_minus_monomial(0, 2 * m - 2 * i + 1);
            rhs += term;
        }
    } else if (family == CoeffFamily::G) {
        if (m < 1) throw std::invalid_argument("reconstruction G: m must be >= 1");
        label = "reconstruction G";
        auto px = power_table(BiPoly::one_minus_monomial(1, 0), m);
        auto pxy = power_table(BiPoly::one_minus_monomial(1, 1), m);
        for (int r = 0; r <= m - 1; ++r) {
            BiPoly term = BiPoly::one_minus_monomial(m - r, 0) *
                          BiPoly::one_minus_monomial(m - r, m - r) *
                          BiPoly::monomial(binomial(2 * m, r), r, 0);
            for (int j = 0; j <= m - 1; ++j)
                if (j != r) term *= BiPoly::one_plus_monomial(0, m - j);
            if (r % 2 != 0) term = -term;
            lhs += term;
        }
        for (int s = 0; s <= m - 1; ++s) {
            BiPoly term = BiPoly::from_poly_in_y(raw(s)) * BiPoly::monomial(Integer(1), s, 0) *
                          px[static_cast<size_t>(m - s)] * pxy[static_cast<size_t>(m - s)];
            for (int i = s + 1; i <= m - 1; ++i) term *= BiPoly::one_plus_monomial(0, m - i);
            rhs += term;
        }
    } else {
        throw UnsupportedIndex("check_reconstruction_bivariate: family must be P, Q, or G");
    }

    return finish_bivariate(label + " m=" + std::to_string(m), lhs, rhs);
}

}  // namespace qfaul
