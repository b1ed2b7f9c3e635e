#include "qfaul/coefficients.hpp"

#include "qfaul/poly_matrix.hpp"
#include "qfaul/ratfn.hpp"

namespace qfaul {

void CoeffId::validate() const {
    bool general = family == CoeffFamily::P_general || family == CoeffFamily::Q_general;
    if (!general && r != 0)
        throw UnsupportedIndex("coeff: r applies to the generalized families only");
    switch (family) {
        case CoeffFamily::P:
            if (m < 0 || s < 0 || s > m) throw UnsupportedIndex("coeff P: need 0 <= s <= m");
            break;
        case CoeffFamily::Q:
            if (m < 1 || s < 0 || s > m) throw UnsupportedIndex("coeff Q: need m >= 1, 0 <= s <= m");
            break;
        case CoeffFamily::G:
            if (m < 1 || s < 0 || s >= m)
                throw UnsupportedIndex("coeff G: need m >= 1, 0 <= s <= m-1");
            break;
        case CoeffFamily::H:
            if (m < 1 || s < 0 || s >= m)
                throw UnsupportedIndex("coeff H: need m >= 1, 0 <= s <= m-1");
            break;
        case CoeffFamily::P_general:
            if (m < 0 || r < 0 || r > m || s < 0 || s > m)
                throw UnsupportedIndex("coeff Pr: need 0 <= r <= m, 0 <= s <= m");
            break;
        case CoeffFamily::Q_general:
            if (m < 1 || r < 0 || r >= m || s < 0 || s > m)
                throw UnsupportedIndex("coeff Qr: need 0 <= r < m, 0 <= s <= m");
            break;
    }
}

namespace {

// Divide every coefficient by d exactly.
HalfQPoly scale_div(const HalfQPoly& p, const Integer& d, const char* what) {
    if (p.is_zero()) return {};
    std::vector<Integer> cs = p.coeffs();
    for (auto& c : cs) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw IntegralityViolation(std::string(what) + ": rational weights do not clear");
        c /= d;
    }
    return HalfQPoly(std::move(cs));
}

// P-family bar sum in its own variable v (= q); the binomial top row is
// 2m - 2r with gap 2r + 2, which is the plain P family at r = 0.
HalfQPoly pbar_raw_general(int m, int s, int r) {
    HalfQPoly acc;
    for (int k = 0; k <= s; ++k) {
        Integer c = binomial(2 * m - 2 * r, k) - binomial(2 * m - 2 * r, k - 2 * r - 2);
        if (c == 0) continue;
        HalfQPoly prod(Integer(1));
        for (int j = 0; j <= s; ++j)
            if (j != k) prod *= HalfQPoly::one_minus_t(m + 1 - j);
        HalfQPoly inner;
        for (int i = 0; i <= s - k; ++i) {
            Integer w = Integer(m - k + 1) * binomial(m - s + i, i) * binomial(m - k - i, s - k - i);
            if (w != 0) inner += HalfQPoly::monomial(std::move(w), s - k - i);
        }
        HalfQPoly term = prod * inner * c;
        if (k % 2 != 0) term = -term;
        acc += term;
    }
    return scale_div(acc, Integer(m - s + 1), "P bar");
}

// Q-family bar sum in its own variable v (= u, evaluated at q^(1/2) later).
HalfQPoly qbar_raw_general(int m, int s, int r) {
    HalfQPoly acc;
    for (int k = 0; k <= s; ++k) {
        Integer c =
            binomial(2 * m - 2 * r - 1, k) - binomial(2 * m - 2 * r - 1, k - 2 * r - 2);
        if (c == 0) continue;
        HalfQPoly prod(Integer(1));
        for (int j = 0; j <= s; ++j)
            if (j != k) prod *= HalfQPoly::one_minus_t(2 * m - 2 * j + 1);
        HalfQPoly inner;
        for (int i = 0; i <= s - k; ++i) {
            Integer a = binomial(m - s + i, i);
            if (a == 0) continue;
            Integer even = binomial(m - k - i, s - k - i);
            if (even != 0) inner += HalfQPoly::monomial(a * even, 2 * (s - k - i));
            Integer odd = binomial(m - k - i - 1, s - k - i - 1);
            if (odd != 0) inner += HalfQPoly::monomial(a * odd, 2 * (s - k - i) - 1);
        }
        HalfQPoly term = prod * inner * c;
        if (k % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

HalfQPoly gbar_raw(int m, int s) {
    HalfQPoly acc;
    for (int k = 0; k <= s; ++k) {
        Integer c = binomial(2 * m, k);
        HalfQPoly prod(Integer(1));
        for (int j = 0; j <= s; ++j)
            if (j != k) prod *= HalfQPoly::one_plus_t(m - j);
        HalfQPoly inner;
        for (int i = 0; i <= s - k; ++i) {
            Integer w =
                Integer(m - k) * binomial(m - s + i - 1, i) * binomial(m - k - i - 1, s - k - i);
            if (w != 0) inner += HalfQPoly::monomial(std::move(w), s - k - i);
        }
        HalfQPoly term = prod * inner * c;
        if (k % 2 != 0) term = -term;
        acc += term;
    }
    return scale_div(acc, Integer(m - s), "G bar");
}

HalfQPoly hbar_raw(int m, int s) {
    HalfQPoly acc;
    for (int k = 0; k <= s; ++k) {
        Integer c = binomial(2 * m - 1, k);
        HalfQPoly prod(Integer(1));
        for (int j = 0; j <= s; ++j)
            if (j != k) prod *= HalfQPoly::one_plus_t(2 * m - 2 * j - 1);
        HalfQPoly inner;
        for (int i = 0; i <= s - k; ++i) {
            Integer a = binomial(m - s + i - 1, i);
            if (a == 0) continue;
            Integer even = binomial(m - k - i - 1, s - k - i);
            if (even != 0) inner += HalfQPoly::monomial(a * even, 2 * (s - k - i));
            Integer odd = binomial(m - k - i - 2, s - k - i - 1);
            if (odd != 0) inner += HalfQPoly::monomial(a * odd, 2 * (s - k - i) - 1);
        }
        HalfQPoly term = prod * inner * c;
        if (k % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

// Double all exponents: embeds a polynomial in q into the t-representation.
HalfQPoly embed_q(const HalfQPoly& p) {
    if (p.is_zero()) return {};
    std::vector<Integer> out(static_cast<size_t>(2 * p.degree()) + 1, Integer(0));
    const auto& cs = p.coeffs();
    for (size_t e = 0; e < cs.size(); ++e) out[2 * e] = cs[e];
    return HalfQPoly(std::move(out));
}

bool family_in_q(CoeffFamily f) {
    return f == CoeffFamily::P || f == CoeffFamily::G || f == CoeffFamily::P_general;
}

}  // namespace

HalfQPoly coeff_bar_raw(const CoeffId& id) {
    id.validate();
    switch (id.family) {
        case CoeffFamily::P: return pbar_raw_general(id.m, id.s, 0);
        case CoeffFamily::Q: return qbar_raw_general(id.m, id.s, 0);
        case CoeffFamily::G: return gbar_raw(id.m, id.s);
        case CoeffFamily::H: return hbar_raw(id.m, id.s);
        case CoeffFamily::P_general: return pbar_raw_general(id.m, id.s, id.r);
        case CoeffFamily::Q_general: return qbar_raw_general(id.m, id.s, id.r);
    }
    throw UnsupportedIndex("coeff: unknown family");
}

HalfQPoly pbar(int m, int s) {
    return embed_q(coeff_bar_raw({CoeffFamily::P, m, s, 0}));
}

CoeffResult coeff(const CoeffId& id) {
    id.validate();
    HalfQPoly raw = coeff_bar_raw(id);
    CoeffResult out;
    out.bar = family_in_q(id.family) ? embed_q(raw) : raw;
    out.sign = id.s % 2 == 0 ? 1 : -1;

    switch (id.family) {
        case CoeffFamily::P:
            out.divisor_profile = {{HalfQPoly::one_minus_t(2), 3 * id.s}};
            break;
        case CoeffFamily::Q:
            out.divisor_profile = {{HalfQPoly::one_minus_t(1), id.s},
                                   {HalfQPoly::one_minus_t(2), 2 * id.s}};
            break;
        case CoeffFamily::G:
            out.divisor_profile = {{HalfQPoly::one_minus_t(2), 2 * id.s}};
            break;
        case CoeffFamily::H:
            out.divisor_profile = {{HalfQPoly::one_plus_t(1), id.s},
                                   {HalfQPoly::one_minus_t(1), 2 * id.s}};
            break;
        case CoeffFamily::P_general:
            out.divisor_profile = {{HalfQPoly::one_minus_t(2), 3 * id.s - 2 * id.r}};
            break;
        case CoeffFamily::Q_general:
            out.divisor_profile = {{HalfQPoly::one_minus_t(1), id.s},
                                   {HalfQPoly::one_minus_t(2), 2 * id.s - 2 * id.r}};
            break;
    }

    HalfQPoly value = out.bar;
    if (out.sign < 0) value = -value;
    for (const auto& f : out.divisor_profile)
        if (f.exponent < 0) value *= f.base.pow(-f.exponent);
    for (const auto& f : out.divisor_profile)
        if (f.exponent > 0) value = exact_div(value, f.base.pow(f.exponent));
    out.reduced = value;
    return out;
}

std::vector<HalfQPoly> coeff_via_linear_system(int m) {
    if (m < 0) throw UnsupportedIndex("coeff_via_linear_system: m must be >= 0");
    int n = m + 1;

    std::vector<RatFn> points;
    points.reserve(n);
    for (int i = 1; i <= n; ++i)
        points.emplace_back(HalfQPoly::one_minus_t(2 * i) * HalfQPoly::one_minus_t(2 * i + 2),
                            HalfQPoly::monomial(Integer(1), 2 * i));

    PolyMatrix vinv(0, 0);
    try {
        vinv = vandermonde_inverse(points);
    } catch (const DuplicatePoints& e) {
        throw SingularSystem(e.what());
    }

    // Right side, divided through by the row factors that turn the system
    // matrix into the plain Vandermonde matrix.
    std::vector<RatFn> y;
    y.reserve(n);
    for (int i = 1; i <= n; ++i) {
        HalfQPoly b;
        for (int k = 1; k <= i; ++k) {
            HalfQPoly term =
                HalfQPoly::one_minus_t(4 * k) * HalfQPoly::one_minus_t(2 * k).pow(2 * m);
            b += term.shifted(2 * (m + 1) * (i - k));
        }
        HalfQPoly d = HalfQPoly::one_minus_t(2 * i) * HalfQPoly::one_minus_t(2 * i + 2);
        y.emplace_back(RatFn(std::move(b), d.shifted(2 * m * i)));
    }

    std::vector<HalfQPoly> bars;
    bars.reserve(n);
    HalfQPoly clearing(Integer(1));
    for (int j = 1; j <= n; ++j) {
        RatFn x;
        for (int i = 0; i < n; ++i) x += vinv.at(j - 1, i) * y[static_cast<size_t>(i)];
        clearing *= HalfQPoly::one_minus_t(2 * (m + 1 - (j - 1)));
        bars.push_back((x * RatFn(clearing)).to_poly());
    }
    return bars;
}

}  // namespace qfaul
