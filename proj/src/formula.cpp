#include "qfaul/formula.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "qfaul/coefficients.hpp"
#include "qfaul/ratfn.hpp"

namespace qfaul {

namespace {

// Accumulates the net signed exponent of every distinct factor of one term,
// so that a factor appearing both above and below the line (or with a
// negative stated exponent, like (1-q)^{2m-3k} for large k) lands on exactly
// one side of the fraction.  std::map ordering doubles as the canonical
// factor order: kind rank first, then ascending argument.
class TermAccum {
public:
    void num(FactorKind kind, int arg, int e = 1) { add(kind, arg, e); }
    void den(FactorKind kind, int arg, int e = 1) { add(kind, arg, -e); }

    void finalize(FormulaTerm& term) const {
        for (const auto& [key, e] : net_) {
            if (e == 0) continue;
            FormulaFactor f{static_cast<FactorKind>(key.first), key.second,
                            e > 0 ? e : -e};
            (e > 0 ? term.numerator : term.denominator).push_back(f);
        }
    }

private:
    void add(FactorKind kind, int arg, int e) {
        if (e == 0) return;
        net_[{static_cast<int>(kind), arg}] += e;
    }

    std::map<std::pair<int, int>, int> net_;
};

HalfQPoly fetch_coeff(CoeffFamily family, int m, int s, int r) {
    return coeff(CoeffId{family, m, s, r}).reduced;
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void build_s_odd_terms(ClosedFormula& f, int m, int r, CoeffFamily family) {
    // Terms of  sum_k (-1)^k P_{m,k[,r]} (1-q^n)^{m+1-k} (1-q^{n+1})^{m+1-k}
    // q^{kn} / ((1-q^{2r+2}) (1-q)^{2m-3k} prod_{i<=k} (1-q^{m+1-i})).
    for (int k = 0; k <= m; ++k) {
        FormulaTerm term;
        term.sign = (k % 2 == 0) ? 1 : -1;
        term.coeff = fetch_coeff(family, m, k, r);
        if (term.coeff.is_zero()) continue;

        TermAccum a;
        a.num(FactorKind::one_minus_q_pow_n_plus, 0, m + 1 - k);
        a.num(FactorKind::one_minus_q_pow_n_plus, 2, m + 1 - k);
        if (k > 0) a.num(FactorKind::q_pow_n_times, 2 * k);
        a.den(FactorKind::one_minus_q_const, 4 * r + 4);
        a.den(FactorKind::one_minus_q_const, 2, 2 * m - 3 * k);
        for (int i = 0; i <= k; ++i)
            a.den(FactorKind::one_minus_q_const, 2 * (m + 1 - i));
        a.finalize(term);
        f.terms.push_back(std::move(term));
    }
}

void build_s_even_terms(ClosedFormula& f, int m, int r, CoeffFamily family) {
    // Terms of  sum_k (-1)^k Q_{m,k[,r]}(q^{1/2}) (1-q^{n+1/2}) (1-q^n)^{m-k}
    // (1-q^{n+1})^{m-k} (1-q^{1/2})^k q^{kn}
    // / ((1-q^{2r+2}) (1-q)^{2m-2k-1} prod_{i<=k} (1-q^{m-i+1/2})).
    for (int k = 0; k <= m; ++k) {
        FormulaTerm term;
        term.sign = (k % 2 == 0) ? 1 : -1;
        term.coeff = fetch_coeff(family, m, k, r);
        if (term.coeff.is_zero()) continue;

        TermAccum a;
        a.num(FactorKind::one_minus_q_pow_n_plus, 1);
        a.num(FactorKind::one_minus_q_pow_n_plus, 0, m - k);
        a.num(FactorKind::one_minus_q_pow_n_plus, 2, m - k);
        a.num(FactorKind::one_minus_q_const, 1, k);
        if (k > 0) a.num(FactorKind::q_pow_n_times, 2 * k);
        a.den(FactorKind::one_minus_q_const, 4 * r + 4);
        a.den(FactorKind::one_minus_q_const, 2, 2 * m - 2 * k - 1);
        for (int i = 0; i <= k; ++i)
            a.den(FactorKind::one_minus_q_const, 2 * (m - i) + 1);
        a.finalize(term);
        f.terms.push_back(std::move(term));
    }
}

void build_t_even_terms(ClosedFormula& f, int m) {
    // Terms of  sum_k (-1)^k G_{m,k} (1-q^n)^{m-k} (1-q^{n+1})^{m-k} q^{kn}
    // / ((1-q)^{2m-2k} prod_{i<=k} (1+q^{m-i})).
    for (int k = 0; k <= m - 1; ++k) {
        FormulaTerm term;
        term.sign = (k % 2 == 0) ? 1 : -1;
        term.coeff = fetch_coeff(CoeffFamily::G, m, k, 0);
        if (term.coeff.is_zero()) continue;

        TermAccum a;
        a.num(FactorKind::one_minus_q_pow_n_plus, 0, m - k);
        a.num(FactorKind::one_minus_q_pow_n_plus, 2, m - k);
        if (k > 0) a.num(FactorKind::q_pow_n_times, 2 * k);
        a.den(FactorKind::one_minus_q_const, 2, 2 * m - 2 * k);
        for (int i = 0; i <= k; ++i)
            a.den(FactorKind::one_plus_q_const, 2 * (m - i));
        a.finalize(term);
        f.terms.push_back(std::move(term));
    }
}

void build_t_odd_terms(ClosedFormula& f, int m) {
    // Leading term  (-1)^{m+n} H_{m,m-1}(q^{1/2}) q^{mn-n/2}
    // / ((1+q^{1/2})^m prod_{i<m} (1+q^{m-i-1/2})); the constant (-1)^m is
    // folded into the sign and parity_sign records the remaining (-1)^n.
    {
        FormulaTerm term;
        term.sign = (m % 2 == 0) ? 1 : -1;
        term.parity_sign = true;
        term.coeff = fetch_coeff(CoeffFamily::H, m, m - 1, 0);
        if (!term.coeff.is_zero()) {
            TermAccum a;
            a.num(FactorKind::q_pow_n_times, 2 * m - 1);
            a.den(FactorKind::one_plus_q_const, 1, m);
            for (int i = 0; i <= m - 1; ++i)
                a.den(FactorKind::one_plus_q_const, 2 * (m - i) - 1);
            a.finalize(term);
            f.terms.push_back(std::move(term));
        }
    }

    // Plus  (1-q^{n+1/2})/(1-q^{1/2}) sum_k (-1)^k H_{m,k}(q^{1/2})
    // (1-q^n)^{m-k-1} (1-q^{n+1})^{m-k-1} q^{kn}
    // / ((1-q)^{2m-2k-2} (1+q^{1/2})^{k+1} prod_{i<=k} (1+q^{m-i-1/2})).
    for (int k = 0; k <= m - 1; ++k) {
        FormulaTerm term;
        term.sign = (k % 2 == 0) ? 1 : -1;
        term.coeff = fetch_coeff(CoeffFamily::H, m, k, 0);
        if (term.coeff.is_zero()) continue;

        TermAccum a;
        a.num(FactorKind::one_minus_q_pow_n_plus, 1);
        a.num(FactorKind::one_minus_q_pow_n_plus, 0, m - k - 1);
        a.num(FactorKind::one_minus_q_pow_n_plus, 2, m - k - 1);
        if (k > 0) a.num(FactorKind::q_pow_n_times, 2 * k);
        a.den(FactorKind::one_minus_q_const, 1);
        a.den(FactorKind::one_minus_q_const, 2, 2 * m - 2 * k - 2);
        a.den(FactorKind::one_plus_q_const, 1, k + 1);
        for (int i = 0; i <= k; ++i)
            a.den(FactorKind::one_plus_q_const, 2 * (m - i) - 1);
        a.finalize(term);
        f.terms.push_back(std::move(term));
    }
}

HalfQPoly factor_value(const FormulaFactor& f, long n) {
    switch (f.kind) {
        case FactorKind::one_minus_q_pow_n_plus: {
            long e = 2 * n + f.arg;
            if (e == 0) return HalfQPoly();  // 1 - t^0
            return HalfQPoly::one_minus_t(static_cast<int>(e));
        }
        case FactorKind::one_minus_q_const:
            return HalfQPoly::one_minus_t(f.arg);
        case FactorKind::one_plus_q_const:
            return HalfQPoly::one_plus_t(f.arg);
        case FactorKind::q_pow_n_times:
            return HalfQPoly::monomial(1, static_cast<int>(f.arg * n));
    }
    throw std::logic_error("unreachable factor kind");
}

// ---- text rendering ----

std::string q_power_text(int arg) {
    // q^(arg/2), arg >= 1
    if (arg % 2 == 0) {
        int e = arg / 2;
        if (e == 1) return "q";
        return "q^" + std::to_string(e);
    }
    return "q^(" + std::to_string(arg) + "/2)";
}

std::string factor_text(const FormulaFactor& f) {
    std::string base;
    switch (f.kind) {
        case FactorKind::one_minus_q_pow_n_plus:
            if (f.arg == 0)
                base = "(1-q^n)";
            else if (f.arg % 2 == 0)
                base = "(1-q^(n+" + std::to_string(f.arg / 2) + "))";
            else
                base = "(1-q^(n+" + std::to_string(f.arg) + "/2))";
            break;
        case FactorKind::one_minus_q_const:
            base = "(1-" + q_power_text(f.arg) + ")";
            break;
        case FactorKind::one_plus_q_const:
            base = "(1+" + q_power_text(f.arg) + ")";
            break;
        case FactorKind::q_pow_n_times:
            if (f.arg % 2 == 0) {
                int k = f.arg / 2;
                base = (k == 1) ? "q^n" : "q^(" + std::to_string(k) + "n)";
            } else if (f.arg == 1) {
                base = "q^(n/2)";
            } else {
                base = "q^(" + std::to_string(f.arg) + "n/2)";
            }
            break;
    }
    if (f.exponent != 1) base += "^" + std::to_string(f.exponent);
    return base;
}

// Coefficient polynomials are stored in t but printed in q, so t^2 -> q and
// odd exponents fall back to explicit halves.
std::string poly_q_text(const HalfQPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        Integer c = p.coeff(e);
        if (c == 0) continue;
        bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << q_power_text(e);
        }
    }
    return os.str();
}

bool is_one(const HalfQPoly& p) { return p == HalfQPoly(1); }

// True when the polynomial is a single monomial c*t^e; such coefficients can
// be prefixed without parentheses.
bool is_monomial(const HalfQPoly& p) {
    if (p.is_zero()) return false;
    int nonzero = 0;
    for (int e = 0; e <= p.degree(); ++e)
        if (p.coeff(e) != 0) ++nonzero;
    return nonzero == 1;
}

std::string term_text(const FormulaTerm& t) {
    std::string out;
    if (t.parity_sign) out += "(-1)^n ";
    if (!is_one(t.coeff)) {
        if (is_monomial(t.coeff) && t.coeff.coeff(0) > 0) {
            out += poly_q_text(t.coeff);
        } else {
            out += "(" + poly_q_text(t.coeff) + ")";
        }
    }
    for (const auto& f : t.numerator) out += factor_text(f);
    if (out.empty() || (t.parity_sign && out == "(-1)^n ")) out += "1";
    if (!t.denominator.empty()) {
        out += " / ";
        if (t.denominator.size() == 1 &&
            t.denominator.front().kind != FactorKind::q_pow_n_times) {
            out += factor_text(t.denominator.front());
        } else {
            out += "(";
            for (const auto& f : t.denominator) out += factor_text(f);
            out += ")";
        }
    }
    return out;
}

std::string render_text(const ClosedFormula& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms) {
        if (first) {
            if (t.sign < 0) out += "-";
            first = false;
        } else {
            out += (t.sign < 0) ? " - " : " + ";
        }
        out += term_text(t);
    }
    return out;
}

// ---- LaTeX rendering ----

std::string q_power_latex(int arg) {
    if (arg % 2 == 0) {
        int e = arg / 2;
        if (e == 1) return "q";
        return "q^{" + std::to_string(e) + "}";
    }
    return "q^{\\frac{" + std::to_string(arg) + "}{2}}";
}

std::string factor_latex(const FormulaFactor& f) {
    std::string base;
    switch (f.kind) {
        case FactorKind::one_minus_q_pow_n_plus:
            if (f.arg == 0)
                base = "(1-q^{n})";
            else if (f.arg % 2 == 0)
                base = "(1-q^{n+" + std::to_string(f.arg / 2) + "})";
            else
                base = "(1-q^{n+\\frac{" + std::to_string(f.arg) + "}{2}})";
            break;
        case FactorKind::one_minus_q_const:
            base = "(1-" + q_power_latex(f.arg) + ")";
            break;
        case FactorKind::one_plus_q_const:
            base = "(1+" + q_power_latex(f.arg) + ")";
            break;
        case FactorKind::q_pow_n_times:
            if (f.arg % 2 == 0) {
                int k = f.arg / 2;
                base = (k == 1) ? "q^{n}"
                                : "q^{" + std::to_string(k) + "n}";
            } else {
                base = "q^{\\frac{" + std::to_string(f.arg) + "n}{2}}";
            }
            break;
    }
    if (f.exponent != 1) base += "^{" + std::to_string(f.exponent) + "}";
    return base;
}

std::string poly_q_latex(const HalfQPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        Integer c = p.coeff(e);
        if (c == 0) continue;
        bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? "-" : "+");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << q_power_latex(e);
        }
    }
    return os.str();
}

std::string term_latex(const FormulaTerm& t) {
    std::string coeff_str;
    if (!is_one(t.coeff)) {
        if (is_monomial(t.coeff) && t.coeff.coeff(0) > 0) {
            coeff_str = poly_q_latex(t.coeff);
        } else {
            coeff_str = "(" + poly_q_latex(t.coeff) + ")";
        }
    }
    std::string num = coeff_str;
    for (const auto& f : t.numerator) num += factor_latex(f);
    if (num.empty()) num = "1";
    std::string out;
    if (t.parity_sign) out += "(-1)^{n}";
    if (t.denominator.empty()) {
        out += num;
    } else {
        std::string den;
        for (const auto& f : t.denominator) den += factor_latex(f);
        out += "\\frac{" + num + "}{" + den + "}";
    }
    return out;
}

std::string formula_label(const ClosedFormula& f) {
    std::string letter =
        (f.family == FormulaFamily::T_even || f.family == FormulaFamily::T_odd)
            ? "T"
            : "S";
    std::string idx = std::to_string(f.power()) + ",n";
    if (f.r) idx += "," + std::to_string(*f.r);
    return letter + "_{" + idx + "}(q)";
}

std::string render_latex(const ClosedFormula& f) {
    std::ostringstream os;
    os << "\\documentclass{article}\n"
       << "\\usepackage{amsmath}\n"
       << "\\begin{document}\n"
       << "\\begin{align*}\n"
       << formula_label(f) << " &= ";
    if (f.terms.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& t : f.terms) {
            if (first) {
                if (t.sign < 0) os << "-";
                first = false;
            } else {
                os << " \\\\\n &\\quad " << (t.sign < 0 ? "- " : "+ ");
            }
            os << term_latex(t);
        }
    }
    os << "\n\\end{align*}\n"
       << "\\end{document}\n";
    return os.str();
}

// ---- JSON rendering and parsing ----

using json = nlohmann::ordered_json;

const char* kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::one_minus_q_pow_n_plus: return "one_minus_q_pow_n_plus";
        case FactorKind::one_minus_q_const: return "one_minus_q_const";
        case FactorKind::one_plus_q_const: return "one_plus_q_const";
        case FactorKind::q_pow_n_times: return "q_pow_n_times";
    }
    throw std::logic_error("unreachable factor kind");
}

const char* arg_field(FactorKind k) {
    switch (k) {
        case FactorKind::one_minus_q_pow_n_plus: return "offset_t";
        case FactorKind::one_minus_q_const: return "const_t";
        case FactorKind::one_plus_q_const: return "const_t";
        case FactorKind::q_pow_n_times: return "k_t";
    }
    throw std::logic_error("unreachable factor kind");
}

json factor_json(const FormulaFactor& f) {
    json j;
    j["kind"] = kind_name(f.kind);
    j[arg_field(f.kind)] = f.arg;
    j["exponent"] = f.exponent;
    return j;
}

json poly_json(const HalfQPoly& p) {
    json coeffs = json::array();
    for (int e = 0; e <= p.degree(); ++e)
        coeffs.push_back(p.coeff(e).get_str());
    json j;
    j["t_coeffs"] = std::move(coeffs);
    j["t_is_sqrt_q"] = true;
    return j;
}

std::string render_json(const ClosedFormula& f) {
    json doc;
    doc["schema_version"] = 1;
    doc["family"] = family_name(f.family);
    doc["m"] = f.m;
    if (f.r) doc["r"] = *f.r;
    json terms = json::array();
    for (const auto& t : f.terms) {
        json jt;
        jt["sign"] = t.sign;
        if (t.parity_sign) jt["parity_sign"] = true;
        jt["coeff"] = poly_json(t.coeff);
        json num = json::array();
        for (const auto& fac : t.numerator) num.push_back(factor_json(fac));
        jt["numerator"] = std::move(num);
        json den = json::array();
        for (const auto& fac : t.denominator) den.push_back(factor_json(fac));
        jt["denominator"] = std::move(den);
        terms.push_back(std::move(jt));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

FormulaFamily family_from_name(const std::string& name) {
    if (name == "S_odd") return FormulaFamily::S_odd;
    if (name == "S_even") return FormulaFamily::S_even;
    if (name == "T_even") return FormulaFamily::T_even;
    if (name == "T_odd") return FormulaFamily::T_odd;
    if (name == "S_general_odd") return FormulaFamily::S_general_odd;
    if (name == "S_general_even") return FormulaFamily::S_general_even;
    throw std::invalid_argument("unknown formula family: " + name);
}

FactorKind kind_from_name(const std::string& name) {
    if (name == "one_minus_q_pow_n_plus") return FactorKind::one_minus_q_pow_n_plus;
    if (name == "one_minus_q_const") return FactorKind::one_minus_q_const;
    if (name == "one_plus_q_const") return FactorKind::one_plus_q_const;
    if (name == "q_pow_n_times") return FactorKind::q_pow_n_times;
    throw std::invalid_argument("unknown factor kind: " + name);
}

FormulaFactor factor_from_json(const json& j) {
    FormulaFactor f;
    f.kind = kind_from_name(j.at("kind").get<std::string>());
    f.arg = j.at(arg_field(f.kind)).get<int>();
    f.exponent = j.at("exponent").get<int>();
    return f;
}

HalfQPoly poly_from_json(const json& j) {
    if (!j.at("t_is_sqrt_q").get<bool>())
        throw std::invalid_argument("coefficient polynomial must be marked t_is_sqrt_q");
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("t_coeffs"))
        coeffs.emplace_back(c.get<std::string>());
    return HalfQPoly(std::move(coeffs));
}

bool family_uses_sqrt_q_coeffs(FormulaFamily family) {
    return family == FormulaFamily::S_even || family == FormulaFamily::T_odd ||
           family == FormulaFamily::S_general_even;
}

}  // namespace

int ClosedFormula::power() const {
    switch (family) {
        case FormulaFamily::S_odd: return 2 * m + 1;
        case FormulaFamily::S_even: return 2 * m;
        case FormulaFamily::T_even: return 2 * m;
        case FormulaFamily::T_odd: return 2 * m - 1;
        case FormulaFamily::S_general_odd: return 2 * m + 1;
        case FormulaFamily::S_general_even: return 2 * m;
    }
    throw std::logic_error("unreachable formula family");
}

std::string family_name(FormulaFamily family) {
    switch (family) {
        case FormulaFamily::S_odd: return "S_odd";
        case FormulaFamily::S_even: return "S_even";
        case FormulaFamily::T_even: return "T_even";
        case FormulaFamily::T_odd: return "T_odd";
        case FormulaFamily::S_general_odd: return "S_general_odd";
        case FormulaFamily::S_general_even: return "S_general_even";
    }
    throw std::logic_error("unreachable formula family");
}

ClosedFormula build_formula(FormulaFamily family, int m, std::optional<int> r) {
    bool general = family == FormulaFamily::S_general_odd ||
                   family == FormulaFamily::S_general_even;
    require(!general || r.has_value(), "this family requires r");
    require(general || !r.has_value(), "r is only valid for the general families");

    ClosedFormula f;
    f.family = family;
    f.m = m;
    f.r = r;
    f.coeffs_use_sqrt_q = family_uses_sqrt_q_coeffs(family);

    switch (family) {
        case FormulaFamily::S_odd:
            require(m >= 0, "m must be nonnegative");
            build_s_odd_terms(f, m, 0, CoeffFamily::P);
            break;
        case FormulaFamily::S_even:
            require(m >= 1, "m must be positive");
            build_s_even_terms(f, m, 0, CoeffFamily::Q);
            break;
        case FormulaFamily::T_even:
            require(m >= 1, "m must be positive");
            build_t_even_terms(f, m);
            break;
        case FormulaFamily::T_odd:
            require(m >= 1, "m must be positive");
            build_t_odd_terms(f, m);
            break;
        case FormulaFamily::S_general_odd:
            // The formula covers the power 2m+1 and its coefficient index is
            // shifted by r: the terms use P_{m+r, k, r}.
            require(m >= 0, "m must be nonnegative");
            require(*r >= 0, "r must be nonnegative");
            build_s_odd_terms(f, m + *r, *r, CoeffFamily::P_general);
            break;
        case FormulaFamily::S_general_even:
            require(m >= 1, "m must be positive");
            require(*r >= 0, "r must be nonnegative");
            build_s_even_terms(f, m + *r, *r, CoeffFamily::Q_general);
            break;
    }
    return f;
}

HalfQPoly eval_formula_at(const ClosedFormula& f, long n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    RatFn total;
    for (const auto& term : f.terms) {
        HalfQPoly num = term.coeff;
        for (const auto& fac : term.numerator)
            num *= factor_value(fac, n).pow(fac.exponent);
        if (num.is_zero()) continue;
        HalfQPoly den(1);
        for (const auto& fac : term.denominator)
            den *= factor_value(fac, n).pow(fac.exponent);
        int sign = term.sign;
        if (term.parity_sign && n % 2 != 0) sign = -sign;
        RatFn value(std::move(num), std::move(den));
        total = (sign > 0) ? total + value : total - value;
    }
    return total.to_poly();
}

std::string render(const ClosedFormula& f, RenderFormat format) {
    switch (format) {
        case RenderFormat::text: return render_text(f);
        case RenderFormat::latex: return render_latex(f);
        case RenderFormat::json: return render_json(f);
    }
    throw std::logic_error("unreachable render format");
}

ClosedFormula parse_formula_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed formula JSON: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<int>() != 1)
            throw std::invalid_argument("unsupported formula schema_version");
        ClosedFormula f;
        f.family = family_from_name(doc.at("family").get<std::string>());
        f.m = doc.at("m").get<int>();
        if (doc.contains("r")) f.r = doc.at("r").get<int>();
        f.coeffs_use_sqrt_q = family_uses_sqrt_q_coeffs(f.family);
        for (const auto& jt : doc.at("terms")) {
            FormulaTerm term;
            term.sign = jt.at("sign").get<int>();
            if (term.sign != 1 && term.sign != -1)
                throw std::invalid_argument("term sign must be +1 or -1");
            if (jt.contains("parity_sign"))
                term.parity_sign = jt.at("parity_sign").get<bool>();
            term.coeff = poly_from_json(jt.at("coeff"));
            for (const auto& jf : jt.at("numerator"))
                term.numerator.push_back(factor_from_json(jf));
            for (const auto& jf : jt.at("denominator"))
                term.denominator.push_back(factor_from_json(jf));
            f.terms.push_back(std::move(term));
        }
        return f;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid formula JSON: ") + e.what());
    }
}

std::string poly_to_q_string(const HalfQPoly& p) { return poly_q_text(p); }

std::string poly_to_q_latex(const HalfQPoly& p) { return poly_q_latex(p); }

std::string poly_to_plain_string(const HalfQPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        Integer c = p.coeff(e);
        if (c == 0) continue;
        bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string poly_to_plain_latex(const HalfQPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        Integer c = p.coeff(e);
        if (c == 0) continue;
        bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? "-" : "+");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << var;
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

}  // namespace qfaul
