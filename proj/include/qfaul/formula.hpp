#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfaul/halfq_poly.hpp"

namespace qfaul {

// Closed-form families for the power sums. The *_odd / *_even split follows
// the parity of the power: S_odd covers powers 2m+1, S_even powers 2m,
// T_even powers 2m, T_odd powers 2m-1, and the general families cover the
// r-shifted sums with powers 2m-2r+1 and 2m-2r respectively.
enum class FormulaFamily {
  S_odd,
  S_even,
  T_even,
  T_odd,
  S_general_odd,
  S_general_even,
};

// Symbolic factor of a formula term. Exponent arguments are kept in t-units
// (t = q^{1/2}), so `arg` is twice the q-exponent it denotes:
//
//   one_minus_q_pow_n_plus : 1 - q^(n + arg/2)   (arg in {0, 1, 2})
//   one_minus_q_const      : 1 - q^(arg/2)
//   one_plus_q_const       : 1 + q^(arg/2)
//   q_pow_n_times          : q^((arg/2) n) = t^(arg n)
enum class FactorKind {
  one_minus_q_pow_n_plus,
  one_minus_q_const,
  one_plus_q_const,
  q_pow_n_times,
};

struct FormulaFactor {
  FactorKind kind;
  int arg = 0;
  int exponent = 1;

  bool operator==(const FormulaFactor&) const = default;
};

// One summand: sign * coeff * numerator / denominator, optionally carrying an
// extra (-1)^n that cannot be folded into the constant sign.
struct FormulaTerm {
  int sign = 1;
  bool parity_sign = false;
  HalfQPoly coeff;  // polynomial in t
  std::vector<FormulaFactor> numerator;
  std::vector<FormulaFactor> denominator;

  bool operator==(const FormulaTerm&) const = default;
};

struct ClosedFormula {
  FormulaFamily family;
  int m = 0;
  std::optional<int> r;
  // True when the coefficient polynomials were supplied in an auxiliary
  // variable u and are read here at u = q^{1/2}; in t-units this is the
  // identity map on exponents.
  bool coeffs_use_sqrt_q = false;
  std::vector<FormulaTerm> terms;

  // The power p of the sum 1^p + 2^p + ... this formula represents.
  int power() const;

  bool operator==(const ClosedFormula&) const = default;
};

enum class RenderFormat { text, latex, json };

// Assembles the closed formula for the given family. `r` is required for the
// general families and must be absent otherwise. Terms whose coefficient
// polynomial vanishes are dropped. Throws UnsupportedIndex (via the
// coefficient module) or std::invalid_argument on bad arguments.
ClosedFormula build_formula(FormulaFamily family, int m,
                            std::optional<int> r = std::nullopt);

// Substitutes a concrete n >= 0 and returns the exact polynomial value in t.
// Throws NonExactDivision if the formula were inconsistent with polynomiality.
HalfQPoly eval_formula_at(const ClosedFormula& f, long n);

// Deterministic rendering. `text` yields a single-line expression such as
// "(1-q^n)(1-q^(n+1)) / ((1-q)(1-q^2))"; `latex` yields a complete standalone
// document; `json` yields a schema_version 1 document that parse_formula_json
// can round-trip.
std::string render(const ClosedFormula& f, RenderFormat format);

// Inverse of render(..., json). Throws std::invalid_argument on malformed or
// unsupported input.
ClosedFormula parse_formula_json(const std::string& text);

std::string family_name(FormulaFamily family);

// Pretty-printers shared with the command-line tool. The q variants read the
// stored exponents as halves of q-exponents, so t^2 prints as "q" and t^3 as
// "q^(3/2)" (text) or "q^{\frac{3}{2}}" (latex). The plain variants print the
// stored exponents verbatim in the named variable.
std::string poly_to_q_string(const HalfQPoly& p);
std::string poly_to_q_latex(const HalfQPoly& p);
std::string poly_to_plain_string(const HalfQPoly& p, const std::string& var = "q");
std::string poly_to_plain_latex(const HalfQPoly& p, const std::string& var = "q");

}  // namespace qfaul
