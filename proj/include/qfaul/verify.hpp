#pragma once

#include <string>
#include <vector>

namespace qfaul {

// Verification suites bundled for the command-line front end.
//
//   tables        frozen coefficient values plus structural facts
//                 (vanishing diagonal, constant terms, degrees, positivity)
//   identities    the bivariate/determinant identity checks
//   oracle        closed forms and formulas against the brute-force sums
//   linear_system independent derivation of the P-family bar polynomials
//   all           everything above, in that order
enum class VerifySuite { tables, identities, oracle, linear_system, all };

struct VerifyCase {
    std::string name;
    bool pass = false;
    double ms = 0.0;
    std::string detail;  // failure diagnostics; empty on pass
};

struct VerifyOptions {
    int max_m = 5;
    int max_n = 8;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    double total_ms() const;
};

// Runs the suite sequentially with a fixed case order; never throws for a
// failing check (failures are reported in the cases), only for programmer
// errors such as negative bounds.
VerifyReport run_suite(VerifySuite suite, const VerifyOptions& opts = {});

std::string suite_name(VerifySuite suite);

}  // namespace qfaul
