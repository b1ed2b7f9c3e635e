#include "qfaul/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfaul/coefficients.hpp"
#include "qfaul/formula.hpp"
#include "qfaul/identities.hpp"
#include "qfaul/oracles.hpp"
#include "qfaul/ratfn.hpp"

namespace qfaul {

namespace {

template <typename Fn>
void add_case(VerifyReport& rep, std::string name, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyCase c;
    c.name = std::move(name);
    c.pass = true;
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    c.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.cases.push_back(std::move(c));
}

void fail(VerifyCase& c, std::string detail) {
    c.pass = false;
    if (c.detail.empty()) c.detail = std::move(detail);
}

bool expect_equal(VerifyCase& c, const HalfQPoly& got, const HalfQPoly& want,
                  const std::string& where) {
    if (got == want) return true;
    fail(c, where + ": got " + got.to_string() + ", want " + want.to_string());
    return false;
}

// ---- frozen coefficient tables -------------------------------------------
//
// Ascending coefficient lists in each table's own variable.  The P and G
// entries are polynomials in q (stored internally with doubled exponents);
// the Q and H entries are polynomials in the auxiliary variable that the
// formulas later read at q^{1/2} (stored with verbatim exponents).

struct TableEntry {
    CoeffFamily family;
    int m;
    int s;
    std::vector<long> coeffs;
};

const std::vector<TableEntry>& frozen_tables() {
    static const std::vector<TableEntry> entries = {
        {CoeffFamily::P, 0, 0, {1}},
        {CoeffFamily::P, 1, 0, {1}},
        {CoeffFamily::P, 2, 0, {1}},
        {CoeffFamily::P, 2, 1, {1}},
        {CoeffFamily::P, 3, 0, {1}},
        {CoeffFamily::P, 3, 1, {2, 2}},
        {CoeffFamily::P, 3, 2, {2, 2}},
        {CoeffFamily::P, 4, 0, {1}},
        {CoeffFamily::P, 4, 1, {3, 4, 3}},
        {CoeffFamily::P, 4, 2, {5, 13, 13, 5}},
        {CoeffFamily::P, 4, 3, {5, 13, 13, 5}},
        {CoeffFamily::P, 5, 0, {1}},
        {CoeffFamily::P, 5, 1, {4, 6, 6, 4}},
        {CoeffFamily::P, 5, 2, {9, 28, 48, 48, 28, 9}},
        {CoeffFamily::P, 5, 3, {14, 64, 136, 172, 136, 64, 14}},
        {CoeffFamily::P, 5, 4, {14, 64, 136, 172, 136, 64, 14}},

        {CoeffFamily::Q, 1, 0, {1}},
        {CoeffFamily::Q, 2, 0, {1}},
        {CoeffFamily::Q, 2, 1, {1}},
        {CoeffFamily::Q, 3, 0, {1}},
        {CoeffFamily::Q, 3, 1, {2, 1, 2}},
        {CoeffFamily::Q, 3, 2, {2, 1, 2}},
        {CoeffFamily::Q, 4, 0, {1}},
        {CoeffFamily::Q, 4, 1, {3, 2, 4, 2, 3}},
        {CoeffFamily::Q, 4, 2, {5, 6, 15, 11, 15, 6, 5}},
        {CoeffFamily::Q, 4, 3, {5, 6, 15, 11, 15, 6, 5}},
        {CoeffFamily::Q, 5, 0, {1}},
        {CoeffFamily::Q, 5, 1, {4, 3, 6, 4, 6, 3, 4}},
        {CoeffFamily::Q, 5, 2, {9, 13, 33, 37, 61, 51, 61, 37, 33, 13, 9}},
        {CoeffFamily::Q, 5, 3,
         {14, 28, 84, 116, 202, 211, 265, 211, 202, 116, 84, 28, 14}},
        {CoeffFamily::Q, 5, 4,
         {14, 28, 84, 116, 202, 211, 265, 211, 202, 116, 84, 28, 14}},

        {CoeffFamily::G, 1, 0, {1}},
        {CoeffFamily::G, 2, 0, {1}},
        {CoeffFamily::G, 2, 1, {2}},
        {CoeffFamily::G, 3, 0, {1}},
        {CoeffFamily::G, 3, 1, {3, 3}},
        {CoeffFamily::G, 3, 2, {6, 6}},
        {CoeffFamily::G, 4, 0, {1}},
        {CoeffFamily::G, 4, 1, {4, 4, 4}},
        {CoeffFamily::G, 4, 2, {10, 24, 24, 10}},
        {CoeffFamily::G, 4, 3, {20, 48, 48, 20}},
        {CoeffFamily::G, 5, 0, {1}},
        {CoeffFamily::G, 5, 1, {5, 5, 5, 5}},
        {CoeffFamily::G, 5, 2, {15, 35, 60, 60, 35, 15}},
        {CoeffFamily::G, 5, 3, {35, 140, 275, 340, 275, 140, 35}},
        {CoeffFamily::G, 5, 4, {70, 280, 550, 680, 550, 280, 70}},

        {CoeffFamily::H, 1, 0, {1}},
        {CoeffFamily::H, 2, 0, {1}},
        {CoeffFamily::H, 2, 1, {2}},
        {CoeffFamily::H, 3, 0, {1}},
        {CoeffFamily::H, 3, 1, {3, 2, 3}},
        {CoeffFamily::H, 3, 2, {6, 4, 6}},
        {CoeffFamily::H, 4, 0, {1}},
        {CoeffFamily::H, 4, 1, {4, 3, 4, 3, 4}},
        {CoeffFamily::H, 4, 2, {10, 15, 30, 26, 30, 15, 10}},
        {CoeffFamily::H, 4, 3, {20, 30, 60, 52, 60, 30, 20}},
    };
    return entries;
}

char family_letter(CoeffFamily family) {
    switch (family) {
        case CoeffFamily::P: return 'P';
        case CoeffFamily::Q: return 'Q';
        case CoeffFamily::G: return 'G';
        case CoeffFamily::H: return 'H';
        case CoeffFamily::P_general: return 'P';
        case CoeffFamily::Q_general: return 'Q';
    }
    return '?';
}

HalfQPoly expected_table_poly(const TableEntry& e) {
    bool doubled =
        e.family == CoeffFamily::P || e.family == CoeffFamily::G;
    std::vector<Integer> cs;
    if (doubled) {
        cs.assign(2 * e.coeffs.size() - 1, Integer(0));
        for (size_t i = 0; i < e.coeffs.size(); ++i)
            cs[2 * i] = e.coeffs[i];
    } else {
        cs.assign(e.coeffs.begin(), e.coeffs.end());
    }
    return HalfQPoly(std::move(cs));
}

// ---- tables suite ----------------------------------------------------------

void suite_tables(VerifyReport& rep, const VerifyOptions& opts) {
    for (const auto& entry : frozen_tables()) {
        std::string name = std::string("tables/") + family_letter(entry.family) +
                           "[" + std::to_string(entry.m) + "," +
                           std::to_string(entry.s) + "]";
        add_case(rep, name, [&entry](VerifyCase& c) {
            CoeffResult res = coeff(CoeffId{entry.family, entry.m, entry.s, 0});
            expect_equal(c, res.reduced, expected_table_poly(entry), "value");
        });
    }

    add_case(rep, "structure/diagonal coefficients vanish",
             [&opts](VerifyCase& c) {
                 for (int m = 1; m <= opts.max_m; ++m) {
                     if (!coeff(CoeffId{CoeffFamily::P, m, m, 0}).reduced.is_zero())
                         fail(c, "P[" + std::to_string(m) + "," + std::to_string(m) +
                                     "] is nonzero");
                     if (!coeff(CoeffId{CoeffFamily::Q, m, m, 0}).reduced.is_zero())
                         fail(c, "Q[" + std::to_string(m) + "," + std::to_string(m) +
                                     "] is nonzero");
                 }
             });

    add_case(rep, "structure/constant terms", [&opts](VerifyCase& c) {
        for (int m = 0; m <= opts.max_m; ++m) {
            for (int s = 0; s <= m; ++s) {
                Integer want = binomial(m + s - 2, s) - binomial(m + s - 2, s - 2);
                if (coeff(CoeffId{CoeffFamily::P, m, s, 0}).reduced.coeff(0) != want)
                    fail(c, "P[" + std::to_string(m) + "," + std::to_string(s) +
                                "] constant term");
                if (m >= 1 &&
                    coeff(CoeffId{CoeffFamily::Q, m, s, 0}).reduced.coeff(0) != want)
                    fail(c, "Q[" + std::to_string(m) + "," + std::to_string(s) +
                                "] constant term");
            }
        }
    });

    add_case(rep, "structure/degrees", [&opts](VerifyCase& c) {
        for (int m = 2; m <= opts.max_m; ++m) {
            for (int s = 1; s < m; ++s) {
                int want = s * (2 * m - 3 - s);
                if (coeff(CoeffId{CoeffFamily::P, m, s, 0}).reduced.degree() != want)
                    fail(c, "P[" + std::to_string(m) + "," + std::to_string(s) +
                                "] degree");
                if (coeff(CoeffId{CoeffFamily::Q, m, s, 0}).reduced.degree() != want)
                    fail(c, "Q[" + std::to_string(m) + "," + std::to_string(s) +
                                "] degree");
            }
        }
    });

    add_case(rep, "structure/nonnegative coefficients", [&opts](VerifyCase& c) {
        auto check = [&c](CoeffFamily fam, int m, int s) {
            if (!coeff(CoeffId{fam, m, s, 0}).reduced.all_coeffs_nonnegative())
                fail(c, std::string(1, family_letter(fam)) + "[" +
                            std::to_string(m) + "," + std::to_string(s) +
                            "] has a negative coefficient");
        };
        for (int m = 0; m <= opts.max_m; ++m)
            for (int s = 0; s <= m; ++s) check(CoeffFamily::P, m, s);
        for (int m = 1; m <= opts.max_m; ++m)
            for (int s = 0; s <= m; ++s) check(CoeffFamily::Q, m, s);
        for (int m = 1; m <= opts.max_m; ++m)
            for (int s = 0; s <= m - 1; ++s) {
                check(CoeffFamily::G, m, s);
                check(CoeffFamily::H, m, s);
            }
    });
}

// ---- identities suite ------------------------------------------------------

void add_identity(VerifyReport& rep, IdentityCase (*check)(int), int arg) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyCase c;
    try {
        IdentityCase ic = check(arg);
        c.name = "identities/" + ic.name;
        c.pass = ic.pass;
        c.detail = ic.witness_summary;
    } catch (const std::exception& e) {
        c.name = "identities/arg=" + std::to_string(arg);
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    c.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.cases.push_back(std::move(c));
}

void suite_identities(VerifyReport& rep, const VerifyOptions& opts) {
    int mm = opts.max_m;
    for (int m = 0; m <= mm; ++m) add_identity(rep, check_mrsxy, m);
    for (int m = 0; m <= mm; ++m) add_identity(rep, check_mrsxy0, m);
    for (int m = 0; m <= mm; ++m) add_identity(rep, check_mrsxy00, m);
    for (int m = 0; m <= mm; ++m) add_identity(rep, check_1x1yrs, m);
    for (int m = 0; m <= mm; ++m) add_identity(rep, check_1x1yik, m);
    for (int m = 0; m <= mm; ++m) add_identity(rep, check_ppos, m);

    int vn_numeric = std::min(mm, 5);
    for (int n = 1; n <= vn_numeric; ++n) {
        add_case(rep,
                 "identities/vandermonde-inverse rational points n=" +
                     std::to_string(n),
                 [n](VerifyCase& c) {
                     static const long nums[] = {1, -2, 3, -5, 7};
                     static const long dens[] = {2, 3, 1, 1, 4};
                     std::vector<RatFn> pts;
                     for (int i = 0; i < n; ++i)
                         pts.push_back(RatFn::from_rational(
                             make_rational(nums[i], dens[i])));
                     IdentityCase ic = check_vandermonde_inverse(pts);
                     c.pass = ic.pass;
                     c.detail = ic.witness_summary;
                 });
    }
    int vn_symbolic = std::min(mm, 4);
    for (int n = 1; n <= vn_symbolic; ++n) {
        add_case(rep,
                 "identities/vandermonde-inverse symbolic points n=" +
                     std::to_string(n),
                 [n](VerifyCase& c) {
                     std::vector<RatFn> pts;
                     for (int i = 1; i <= n; ++i)
                         pts.emplace_back(HalfQPoly::one_minus_t(2 * i) *
                                              HalfQPoly::one_minus_t(2 * i + 2),
                                          HalfQPoly::monomial(1, 2 * i));
                     IdentityCase ic = check_vandermonde_inverse(pts);
                     c.pass = ic.pass;
                     c.detail = ic.witness_summary;
                 });
    }
    for (int n = 1; n <= std::min(mm, 5); ++n) add_identity(rep, check_det_variant, n);

    for (int m = 0; m <= std::min(mm, 6); ++m) {
        add_case(rep, "identities/reconstruction P m=" + std::to_string(m),
                 [m](VerifyCase& c) {
                     IdentityCase ic =
                         check_reconstruction_bivariate(CoeffFamily::P, m);
                     c.pass = ic.pass;
                     c.detail = ic.witness_summary;
                 });
    }
    for (int m = 1; m <= std::min(mm, 6); ++m) {
        add_case(rep, "identities/reconstruction Q m=" + std::to_string(m),
                 [m](VerifyCase& c) {
                     IdentityCase ic =
                         check_reconstruction_bivariate(CoeffFamily::Q, m);
                     c.pass = ic.pass;
                     c.detail = ic.witness_summary;
                 });
    }
    for (int m = 1; m <= std::min(mm, 5); ++m) {
        add_case(rep, "identities/reconstruction G m=" + std::to_string(m),
                 [m](VerifyCase& c) {
                     IdentityCase ic =
                         check_reconstruction_bivariate(CoeffFamily::G, m);
                     c.pass = ic.pass;
                     c.detail = ic.witness_summary;
                 });
    }
}

// ---- oracle suite ----------------------------------------------------------

Integer classical_power_sum(int m, int n) {
    Integer acc = 0;
    for (int k = 1; k <= n; ++k) acc += int_pow(Integer(k), m);
    return acc;
}

Integer classical_alternating_sum(int m, int n) {
    Integer acc = 0;
    for (int k = 1; k <= n; ++k) {
        Integer term = int_pow(Integer(k), m);
        if ((n - k) % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

// The first displayed worked example of the generalized family: the shifted
// fourth-power sum at r = 1, transcribed factor by factor (t = q^{1/2}).
HalfQPoly display_power4_shift1(int n) {
    auto var = [](int e) {
        return e == 0 ? HalfQPoly() : HalfQPoly::one_minus_t(e);
    };
    auto t1 = HalfQPoly::one_minus_t(1);
    auto t2 = HalfQPoly::one_minus_t(2);
    RatFn term1(var(2 * n).pow(3) * var(2 * n + 2).pow(3) * var(2 * n + 1),
                t2.pow(3) * HalfQPoly::one_minus_t(8) * HalfQPoly::one_minus_t(7));
    HalfQPoly head(std::vector<Integer>{1, 4, 4, 4, 1});
    RatFn a(head * t1, t2);
    RatFn b(var(2 * n) * var(2 * n + 2) * var(2 * n + 1),
            HalfQPoly::one_minus_t(5) * HalfQPoly::one_minus_t(7) *
                HalfQPoly::one_minus_t(8));
    RatFn bracket =
        RatFn(var(2 * n) * var(2 * n + 2) * HalfQPoly::monomial(1, 2 * n + 1),
              t2.pow(2)) -
        RatFn(t1 * HalfQPoly::monomial(1, 4 * n + 1), HalfQPoly::one_minus_t(3));
    return (term1 + a * b * bracket).to_poly();
}

// The second displayed worked example: the shifted fifth-power sum at r = 1.
HalfQPoly display_power5_shift1(int n) {
    auto var = [](int e) {
        return e == 0 ? HalfQPoly() : HalfQPoly::one_minus_t(e);
    };
    auto t2 = HalfQPoly::one_minus_t(2);
    auto t8 = HalfQPoly::one_minus_t(8);
    RatFn term1(var(2 * n).pow(4) * var(2 * n + 2).pow(4), t2.pow(4) * t8.pow(2));
    RatFn outer(var(2 * n).pow(2) * var(2 * n + 2).pow(2) * Integer(4),
                t2 * HalfQPoly::one_minus_t(6) * t8.pow(2));
    RatFn bracket = RatFn(HalfQPoly::one_plus_t(2) * var(2 * n) * var(2 * n + 2) *
                              HalfQPoly::monomial(1, 2 * n + 2),
                          t2.pow(2)) -
                    RatFn(HalfQPoly::monomial(1, 4 * n + 2));
    return (term1 + outer * bracket).to_poly();
}

void suite_oracle(VerifyReport& rep, const VerifyOptions& opts) {
    int mm = opts.max_m;
    int nn = opts.max_n;

    add_case(rep, "oracle/power-sum closed form", [&](VerifyCase& c) {
        for (int m = 1; m <= mm; ++m)
            for (int n = 0; n <= nn; ++n)
                if (!expect_equal(c, lemma_main_rhs(m, n), sum_S(m, n),
                                  "m=" + std::to_string(m) +
                                      " n=" + std::to_string(n)))
                    return;
    });

    add_case(rep, "oracle/power-sum closed form, even-power variant",
             [&](VerifyCase& c) {
                 for (int m = 2; m <= mm; m += 2)
                     for (int n = 0; n <= nn; ++n)
                         if (!expect_equal(c, lemma_oddq_rhs(m, n), sum_S(m, n),
                                           "m=" + std::to_string(m) +
                                               " n=" + std::to_string(n)))
                             return;
             });

    add_case(rep, "oracle/alternating-sum closed form, even powers",
             [&](VerifyCase& c) {
                 for (int m = 1; m <= std::min(mm, 5); ++m)
                     for (int n = 0; n <= nn; ++n)
                         if (!expect_equal(c, lemma_tmn_rhs(m, n), sum_T(2 * m, n),
                                           "m=" + std::to_string(m) +
                                               " n=" + std::to_string(n)))
                             return;
             });

    add_case(rep, "oracle/alternating-sum closed form, odd powers",
             [&](VerifyCase& c) {
                 for (int m = 1; m <= std::min(mm, 5); ++m)
                     for (int n = 0; n <= nn; ++n)
                         if (!expect_equal(c, lemma_todd_rhs(m, n),
                                           sum_T(2 * m - 1, n),
                                           "m=" + std::to_string(m) +
                                               " n=" + std::to_string(n)))
                             return;
             });

    add_case(rep, "oracle/classical limit at t=1", [&](VerifyCase& c) {
        for (int m = 1; m <= mm; ++m)
            for (int n = 0; n <= nn; ++n) {
                if (sum_S(m, n).eval_at_one() != classical_power_sum(m, n))
                    return fail(c, "power sum m=" + std::to_string(m) +
                                       " n=" + std::to_string(n));
                if (sum_T(m, n).eval_at_one() != classical_alternating_sum(m, n))
                    return fail(c, "alternating sum m=" + std::to_string(m) +
                                       " n=" + std::to_string(n));
            }
    });

    add_case(rep, "oracle/power-sum degree and positivity", [&](VerifyCase& c) {
        for (int m = 1; m <= mm; ++m)
            for (int n = 0; n <= nn; ++n) {
                HalfQPoly p = sum_S(m, n);
                if (!p.all_coeffs_nonnegative())
                    return fail(c, "negative coefficient at m=" +
                                       std::to_string(m) + " n=" + std::to_string(n));
                if (n >= 1 && p.degree() != 2 * (m + 1) * (n - 1))
                    return fail(c, "degree at m=" + std::to_string(m) +
                                       " n=" + std::to_string(n));
            }
    });

    for (int p = 1; p <= 2 * std::min(mm, 5) + 1; ++p) {
        add_case(rep, "oracle/formula vs power sum, power=" + std::to_string(p),
                 [&, p](VerifyCase& c) {
                     ClosedFormula f =
                         (p % 2 == 1)
                             ? build_formula(FormulaFamily::S_odd, (p - 1) / 2)
                             : build_formula(FormulaFamily::S_even, p / 2);
                     for (int n = 0; n <= nn; ++n)
                         if (!expect_equal(c, eval_formula_at(f, n), sum_S(p, n),
                                           "n=" + std::to_string(n)))
                             return;
                 });
    }

    for (int p = 1; p <= 2 * std::min(mm, 5); ++p) {
        add_case(rep,
                 "oracle/formula vs alternating sum, power=" + std::to_string(p),
                 [&, p](VerifyCase& c) {
                     ClosedFormula f =
                         (p % 2 == 0)
                             ? build_formula(FormulaFamily::T_even, p / 2)
                             : build_formula(FormulaFamily::T_odd, (p + 1) / 2);
                     for (int n = 0; n <= nn; ++n)
                         if (!expect_equal(c, eval_formula_at(f, n), sum_T(p, n),
                                           "n=" + std::to_string(n)))
                             return;
                 });
    }

    add_case(rep, "oracle/formula vs generalized sum", [&](VerifyCase& c) {
        for (int m = 0; m <= std::min(mm, 4); ++m)
            for (int r = 0; r <= 2; ++r) {
                ClosedFormula f =
                    build_formula(FormulaFamily::S_general_odd, m, r);
                for (int n = 0; n <= nn; ++n)
                    if (!expect_equal(c, eval_formula_at(f, n),
                                      sum_S_general(2 * m + 1, n, r),
                                      "odd m=" + std::to_string(m) +
                                          " r=" + std::to_string(r) +
                                          " n=" + std::to_string(n)))
                        return;
            }
        for (int m = 1; m <= std::min(mm, 4); ++m)
            for (int r = 0; r <= 2; ++r) {
                ClosedFormula f =
                    build_formula(FormulaFamily::S_general_even, m, r);
                for (int n = 0; n <= nn; ++n)
                    if (!expect_equal(c, eval_formula_at(f, n),
                                      sum_S_general(2 * m, n, r),
                                      "even m=" + std::to_string(m) +
                                          " r=" + std::to_string(r) +
                                          " n=" + std::to_string(n)))
                        return;
            }
    });

    add_case(rep, "oracle/generalized family reduces at r=0", [&](VerifyCase& c) {
        for (int m = 1; m <= mm; ++m)
            for (int n = 0; n <= nn; ++n)
                if (!expect_equal(c, sum_S_general(m, n, 0), sum_S(m, n),
                                  "sum m=" + std::to_string(m) +
                                      " n=" + std::to_string(n)))
                    return;
        for (int m = 0; m <= std::min(mm, 4); ++m) {
            if (build_formula(FormulaFamily::S_general_odd, m, 0).terms !=
                build_formula(FormulaFamily::S_odd, m).terms)
                return fail(c, "odd formula m=" + std::to_string(m));
            if (m >= 1 &&
                build_formula(FormulaFamily::S_general_even, m, 0).terms !=
                    build_formula(FormulaFamily::S_even, m).terms)
                return fail(c, "even formula m=" + std::to_string(m));
        }
    });

    add_case(rep, "oracle/displayed example, power 4 shift 1",
             [&](VerifyCase& c) {
                 for (int n = 0; n <= nn; ++n)
                     if (!expect_equal(c, display_power4_shift1(n),
                                       sum_S_general(4, n, 1),
                                       "n=" + std::to_string(n)))
                         return;
             });

    add_case(rep, "oracle/displayed example, power 5 shift 1",
             [&](VerifyCase& c) {
                 for (int n = 0; n <= nn; ++n)
                     if (!expect_equal(c, display_power5_shift1(n),
                                       sum_S_general(5, n, 1),
                                       "n=" + std::to_string(n)))
                         return;
             });
}

// ---- linear-system suite ---------------------------------------------------

void suite_linear_system(VerifyReport& rep, const VerifyOptions& opts) {
    for (int m = 0; m <= std::min(opts.max_m, 4); ++m) {
        add_case(rep, "linear-system/bar coefficients m=" + std::to_string(m),
                 [m](VerifyCase& c) {
                     std::vector<HalfQPoly> independent = coeff_via_linear_system(m);
                     if (static_cast<int>(independent.size()) != m + 1)
                         return fail(c, "expected " + std::to_string(m + 1) +
                                            " solutions");
                     for (int s = 0; s <= m; ++s)
                         if (!expect_equal(c, independent[static_cast<size_t>(s)],
                                           pbar(m, s), "s=" + std::to_string(s)))
                             return;
                 });
    }
}

}  // namespace

int VerifyReport::passed() const {
    int n = 0;
    for (const auto& c : cases)
        if (c.pass) ++n;
    return n;
}

int VerifyReport::failed() const {
    return static_cast<int>(cases.size()) - passed();
}

double VerifyReport::total_ms() const {
    double t = 0;
    for (const auto& c : cases) t += c.ms;
    return t;
}

std::string suite_name(VerifySuite suite) {
    switch (suite) {
        case VerifySuite::tables: return "tables";
        case VerifySuite::identities: return "identities";
        case VerifySuite::oracle: return "oracle";
        case VerifySuite::linear_system: return "linear-system";
        case VerifySuite::all: return "all";
    }
    return "?";
}

VerifyReport run_suite(VerifySuite suite, const VerifyOptions& opts) {
    if (opts.max_m < 0 || opts.max_n < 0)
        throw std::invalid_argument("run_suite: bounds must be nonnegative");
    VerifyReport rep;
    rep.suite = suite_name(suite);
    switch (suite) {
        case VerifySuite::tables:
            suite_tables(rep, opts);
            break;
        case VerifySuite::identities:
            suite_identities(rep, opts);
            break;
        case VerifySuite::oracle:
            suite_oracle(rep, opts);
            break;
        case VerifySuite::linear_system:
            suite_linear_system(rep, opts);
            break;
        case VerifySuite::all:
            suite_tables(rep, opts);
            suite_identities(rep, opts);
            suite_oracle(rep, opts);
            suite_linear_system(rep, opts);
            break;
    }
    return rep;
}

}  // namespace qfaul
