// qfaul: exact q-analogues of power sums.
//
// Subcommands:
//   coeff    print one column of a coefficient table
//   formula  build and render a closed summation formula
//   eval     evaluate the defining sum at concrete (power, n) and check the
//            closed form against it
//   verify   run the exact verification suites and report
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qfaul/coefficients.hpp"
#include "qfaul/formula.hpp"
#include "qfaul/oracles.hpp"
#include "qfaul/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qfaul;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

CoeffFamily coeff_family_from(const std::string& name) {
    if (name == "P") return CoeffFamily::P;
    if (name == "Q") return CoeffFamily::Q;
    if (name == "G") return CoeffFamily::G;
    if (name == "H") return CoeffFamily::H;
    if (name == "Pr") return CoeffFamily::P_general;
    if (name == "Qr") return CoeffFamily::Q_general;
    throw std::invalid_argument("unknown coefficient family: " + name);
}

// P, G and the generalized P are polynomials in q; Q, H and the generalized Q
// are tabulated in the variable the formulas read at q^(1/2), so their stored
// exponents print verbatim.
bool prints_halved(CoeffFamily f) {
    return f == CoeffFamily::P || f == CoeffFamily::G ||
           f == CoeffFamily::P_general;
}

// Number of table rows for one column: P/Q run s = 0..m (the s = m entry is
// identically zero), G/H stop at s = m-1.
int coeff_row_count(CoeffFamily f, int m) {
    return (f == CoeffFamily::G || f == CoeffFamily::H) ? m : m + 1;
}

// Table-style value: integer content factored out, primitive part in
// parentheses, e.g. "2(1 + q)".
std::string coeff_value_text(const HalfQPoly& p, bool halved) {
    if (p.is_zero()) return "0";
    Integer c = p.content();
    HalfQPoly prim = p.primitive_part();
    if (prim == HalfQPoly(1)) return c.get_str();
    std::string body =
        halved ? poly_to_q_string(prim) : poly_to_plain_string(prim);
    if (c == 1) return body;
    return c.get_str() + "(" + body + ")";
}

std::string coeff_value_latex(const HalfQPoly& p, bool halved) {
    if (p.is_zero()) return "0";
    Integer c = p.content();
    HalfQPoly prim = p.primitive_part();
    if (prim == HalfQPoly(1)) return c.get_str();
    std::string body =
        halved ? poly_to_q_latex(prim) : poly_to_plain_latex(prim);
    if (c == 1) return body;
    return c.get_str() + "(" + body + ")";
}

int run_coeff(const std::string& family_name_str, int m, int r,
              const std::string& format) {
    CoeffFamily fam = coeff_family_from(family_name_str);
    bool halved = prints_halved(fam);
    int rows = coeff_row_count(fam, m);
    if (rows < 1) throw UnsupportedIndex("coeff: no entries for this m");

    std::vector<HalfQPoly> values;
    for (int s = 0; s < rows; ++s)
        values.push_back(coeff(CoeffId{fam, m, s, r}).reduced);

    if (format == "text") {
        for (int s = 0; s < rows; ++s)
            std::cout << "k=" << s << ": "
                      << coeff_value_text(values[static_cast<size_t>(s)], halved)
                      << "\n";
    } else if (format == "latex") {
        char letter = family_name_str[0];
        std::cout << "\\documentclass{article}\n"
                  << "\\usepackage{amsmath}\n"
                  << "\\begin{document}\n"
                  << "\\begin{align*}\n";
        for (int s = 0; s < rows; ++s) {
            std::cout << letter << "_{" << m << "," << s;
            if (fam == CoeffFamily::P_general || fam == CoeffFamily::Q_general)
                std::cout << "," << r;
            std::cout << "}(q) &= "
                      << coeff_value_latex(values[static_cast<size_t>(s)], halved);
            if (s + 1 < rows) std::cout << " \\\\";
            std::cout << "\n";
        }
        std::cout << "\\end{align*}\n\\end{document}\n";
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["family"] = family_name_str;
        doc["m"] = m;
        if (fam == CoeffFamily::P_general || fam == CoeffFamily::Q_general)
            doc["r"] = r;
        ordered_json entries = ordered_json::array();
        for (int s = 0; s < rows; ++s) {
            const HalfQPoly& p = values[static_cast<size_t>(s)];
            ordered_json coeffs = ordered_json::array();
            for (int e = 0; e <= p.degree(); ++e)
                coeffs.push_back(p.coeff(e).get_str());
            ordered_json entry;
            entry["s"] = s;
            entry["t_coeffs"] = std::move(coeffs);
            entry["t_is_sqrt_q"] = true;
            entries.push_back(std::move(entry));
        }
        doc["entries"] = std::move(entries);
        std::cout << doc.dump(2) << "\n";
    }
    return kOk;
}

// Power -> (family, half index). S and Sg: power 2m+1 or 2m. T: power 2m or
// 2m-1, so an odd power p selects m = (p+1)/2.
ClosedFormula formula_for(const std::string& family, int power,
                          std::optional<int> r) {
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    if (family == "S") {
        if (r) throw std::invalid_argument("--r applies to the Sg family only");
        return power % 2 == 1
                   ? build_formula(FormulaFamily::S_odd, (power - 1) / 2)
                   : build_formula(FormulaFamily::S_even, power / 2);
    }
    if (family == "T") {
        if (r) throw std::invalid_argument("--r applies to the Sg family only");
        return power % 2 == 0
                   ? build_formula(FormulaFamily::T_even, power / 2)
                   : build_formula(FormulaFamily::T_odd, (power + 1) / 2);
    }
    int rr = r.value_or(0);
    return power % 2 == 1
               ? build_formula(FormulaFamily::S_general_odd, (power - 1) / 2, rr)
               : build_formula(FormulaFamily::S_general_even, power / 2, rr);
}

RenderFormat format_from(const std::string& s) {
    if (s == "latex") return RenderFormat::latex;
    if (s == "json") return RenderFormat::json;
    return RenderFormat::text;
}

int run_formula(const std::string& family, int power, std::optional<int> r,
                const std::string& format) {
    ClosedFormula f = formula_for(family, power, r);
    std::string out = render(f, format_from(format));
    if (out.empty() || out.back() != '\n') out += '\n';
    std::cout << out;
    return kOk;
}

int run_eval(const std::string& family, int power, int n, std::optional<int> r) {
    PowerSumSpec spec;
    spec.family = family == "S"   ? PowerSumFamily::S
                  : family == "T" ? PowerSumFamily::T
                                  : PowerSumFamily::S_general;
    spec.m = power;
    spec.n = n;
    spec.r = r.value_or(0);
    if (r && spec.family != PowerSumFamily::S_general)
        throw std::invalid_argument("--r applies to the Sg family only");
    spec.validate();

    HalfQPoly oracle;
    switch (spec.family) {
        case PowerSumFamily::S: oracle = sum_S(spec.m, spec.n); break;
        case PowerSumFamily::T: oracle = sum_T(spec.m, spec.n); break;
        case PowerSumFamily::S_general:
            oracle = sum_S_general(spec.m, spec.n, spec.r);
            break;
    }
    std::cout << poly_to_q_string(oracle) << "\n";

    ClosedFormula f = formula_for(family, power,
                                  spec.family == PowerSumFamily::S_general
                                      ? std::optional<int>(spec.r)
                                      : std::nullopt);
    HalfQPoly closed = eval_formula_at(f, n);
    if (closed == oracle) {
        std::cout << "closed form: match\n";
        return kOk;
    }
    std::cout << "closed form: MISMATCH, got " << poly_to_q_string(closed)
              << "\n";
    return kFail;
}

int run_verify(const std::string& suite_str, int max_m, int max_n,
               bool as_json, bool no_timing) {
    VerifySuite suite;
    if (suite_str == "tables")
        suite = VerifySuite::tables;
    else if (suite_str == "identities")
        suite = VerifySuite::identities;
    else if (suite_str == "oracle")
        suite = VerifySuite::oracle;
    else if (suite_str == "linear-system")
        suite = VerifySuite::linear_system;
    else
        suite = VerifySuite::all;

    VerifyOptions opts;
    opts.max_m = max_m;
    opts.max_n = max_n;
    VerifyReport rep = run_suite(suite, opts);

    if (as_json) {
        ordered_json doc;
        doc["suite"] = rep.suite;
        doc["passed"] = rep.passed();
        doc["failed"] = rep.failed();
        ordered_json cases = ordered_json::array();
        for (const auto& c : rep.cases) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.pass) jc["detail"] = c.detail;
            cases.push_back(std::move(jc));
        }
        doc["cases"] = std::move(cases);
        if (!no_timing) doc["total_ms"] = rep.total_ms();
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& c : rep.cases) {
            if (c.pass)
                std::cout << "[PASS] " << c.name << "\n";
            else
                std::cout << "[FAIL] " << c.name << ": " << c.detail << "\n";
        }
        std::cout << rep.passed() << " passed, " << rep.failed() << " failed\n";
        if (!no_timing)
            std::cout << "total time: " << rep.total_ms() << " ms\n";
    }
    return rep.all_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-analogues of power sums: coefficient tables, closed "
                 "formulas, verification"};
    app.require_subcommand(1);

    // coeff
    auto* coeff_cmd =
        app.add_subcommand("coeff", "Print one column of a coefficient table");
    std::string coeff_family;
    int coeff_m = 0;
    int coeff_r = 0;
    std::string coeff_format = "text";
    coeff_cmd->add_option("family", coeff_family, "P, Q, G, H, Pr or Qr")
        ->required()
        ->check(CLI::IsMember({"P", "Q", "G", "H", "Pr", "Qr"}));
    coeff_cmd->add_option("--m", coeff_m, "Column index")->required();
    coeff_cmd->add_option("--r", coeff_r, "Order (Pr/Qr only)");
    coeff_cmd->add_option("--format", coeff_format, "text, latex or json")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    // formula
    auto* formula_cmd =
        app.add_subcommand("formula", "Render a closed summation formula");
    std::string formula_family;
    int formula_power = 0;
    std::optional<int> formula_r;
    std::string formula_format = "text";
    formula_cmd->add_option("family", formula_family, "S, T or Sg")
        ->required()
        ->check(CLI::IsMember({"S", "T", "Sg"}));
    formula_cmd->add_option("--power", formula_power, "Power being summed")
        ->required();
    formula_cmd->add_option("--r", formula_r, "Order (Sg only)");
    formula_cmd->add_option("--format", formula_format, "text, latex or json")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    // eval
    auto* eval_cmd = app.add_subcommand(
        "eval", "Evaluate the defining sum and check the closed form");
    std::string eval_family;
    int eval_power = 0;
    int eval_n = 0;
    std::optional<int> eval_r;
    eval_cmd->add_option("family", eval_family, "S, T or Sg")
        ->required()
        ->check(CLI::IsMember({"S", "T", "Sg"}));
    eval_cmd->add_option("--power", eval_power, "Power being summed")->required();
    eval_cmd->add_option("--n", eval_n, "Upper summation limit")->required();
    eval_cmd->add_option("--r", eval_r, "Order (Sg only)");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Run the exact verification suites");
    std::string verify_suite;
    int verify_max_m = 5;
    int verify_max_n = 8;
    bool verify_json = false;
    bool verify_no_timing = false;
    verify_cmd->add_option("--suite", verify_suite, "Which suite to run")
        ->required()
        ->check(CLI::IsMember(
            {"tables", "identities", "oracle", "linear-system", "all"}));
    verify_cmd->add_option("--max-m", verify_max_m, "Index bound (default 5)")
        ->check(CLI::PositiveNumber);
    verify_cmd
        ->add_option("--max-n", verify_max_n, "Evaluation bound (default 8)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", verify_json, "Machine-readable report");
    verify_cmd->add_flag("--no-timing", verify_no_timing,
                         "Suppress the timing footer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (coeff_cmd->parsed())
            return run_coeff(coeff_family, coeff_m, coeff_r, coeff_format);
        if (formula_cmd->parsed())
            return run_formula(formula_family, formula_power, formula_r,
                               formula_format);
        if (eval_cmd->parsed())
            return run_eval(eval_family, eval_power, eval_n, eval_r);
        return run_verify(verify_suite, verify_max_m, verify_max_n, verify_json,
                          verify_no_timing);
    } catch (const UnsupportedIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kFail;
    }
}
