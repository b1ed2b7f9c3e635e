// End-to-end tests running the installed binary through a shell.  The build
// passes the binary's path in as QFAUL_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "qfaul/formula.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QFAUL_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("formula text output is pinned") {
    RunResult r = run("formula S --power 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(1-q^n)(1-q^(n+1)) / ((1-q)(1-q^2))\n");
}

TEST_CASE("eval prints the polynomial and confirms the closed form") {
    RunResult r = run("eval S --power 1 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + q + q^2\nclosed form: match\n");

    CHECK(run("eval S --power 2 --n 1").out == "1\nclosed form: match\n");
    CHECK(run("eval T --power 3 --n 2").exit_code == 0);
    CHECK(run("eval Sg --power 5 --n 2 --r 1").exit_code == 0);
    CHECK(run("eval S --power 4 --n 0").out == "0\nclosed form: match\n");
}

TEST_CASE("coefficient tables") {
    RunResult r = run("coeff P --m 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "k=0: 1\nk=1: 2(1 + q)\nk=2: 2(1 + q)\nk=3: 0\n");

    RunResult h = run("coeff H --m 3");
    CHECK(h.exit_code == 0);
    CHECK(h.out == "k=0: 1\nk=1: 3 + 2q + 3q^2\nk=2: 2(3 + 2q + 3q^2)\n");

    CHECK(run("coeff P --m 0").out == "k=0: 1\n");
    CHECK(run("coeff Pr --m 3 --r 1").exit_code == 0);
}

TEST_CASE("coefficient json") {
    RunResult r = run("coeff Q --m 3 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("family") == "Q");
    CHECK(doc.at("m") == 3);
    REQUIRE(doc.at("entries").size() == 4);
    CHECK(doc["entries"][1]["s"] == 1);
    CHECK(doc["entries"][1]["t_coeffs"] ==
          nlohmann::json::array({"2", "1", "2"}));
    CHECK(doc["entries"][1]["t_is_sqrt_q"] == true);
    CHECK(doc["entries"][3]["t_coeffs"].empty());
}

TEST_CASE("formula json round-trips through the library") {
    RunResult r = run("formula T --power 4 --format json");
    CHECK(r.exit_code == 0);
    qfaul::ClosedFormula f = qfaul::parse_formula_json(r.out);
    CHECK(f == qfaul::build_formula(qfaul::FormulaFamily::T_even, 2));

    RunResult sg = run("formula Sg --power 5 --r 1 --format json");
    qfaul::ClosedFormula g = qfaul::parse_formula_json(sg.out);
    CHECK(g ==
          qfaul::build_formula(qfaul::FormulaFamily::S_general_odd, 2, 1));
}

TEST_CASE("latex output is a complete document") {
    RunResult r = run("formula S --power 3 --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("\\documentclass{article}\n", 0) == 0);
    CHECK(r.out.find("\\end{document}\n") != std::string::npos);

    RunResult c = run("coeff G --m 4 --format latex");
    CHECK(c.exit_code == 0);
    CHECK(c.out.rfind("\\documentclass{article}\n", 0) == 0);
    CHECK(c.out.find("G_{4,2}(q) &= ") != std::string::npos);
}

TEST_CASE("verify runs clean and is deterministic") {
    RunResult a = run("verify --suite linear-system --max-m 2 --no-timing");
    RunResult b = run("verify --suite linear-system --max-m 2 --no-timing");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("[PASS] linear-system/bar coefficients m=0\n") !=
          std::string::npos);
    CHECK(a.out.find(" passed, 0 failed\n") != std::string::npos);
    CHECK(a.out.find("total time") == std::string::npos);
}

TEST_CASE("verify json report") {
    RunResult r =
        run("verify --suite tables --max-m 3 --max-n 4 --json --no-timing");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("suite") == "tables");
    CHECK(doc.at("failed") == 0);
    CHECK(doc.at("passed") == doc.at("cases").size());
    CHECK_FALSE(doc.contains("total_ms"));
    for (const auto& c : doc.at("cases")) CHECK(c.at("pass") == true);

    RunResult timed = run("verify --suite linear-system --max-m 1 --json");
    auto tdoc = nlohmann::json::parse(timed.out);
    CHECK(tdoc.contains("total_ms"));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("coeff Z --m 3").exit_code == 2);
    CHECK(run("coeff P").exit_code == 2);
    CHECK(run("coeff P --m -1").exit_code == 2);
    CHECK(run("coeff G --m 3 --r 1").exit_code == 2);
    CHECK(run("formula S --power 0").exit_code == 2);
    CHECK(run("formula S --power 3 --r 1").exit_code == 2);
    CHECK(run("formula S --power 3 --format yaml").exit_code == 2);
    CHECK(run("eval S --power 1").exit_code == 2);
    CHECK(run("eval Sg --power 1 --n 3 --r 2").exit_code == 2);
    CHECK(run("verify --suite nope").exit_code == 2);
    CHECK(run("verify --suite all --max-m 0").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("coeff --help").exit_code == 0);
}
