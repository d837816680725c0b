#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

std::string temp_path(const char* tag) {
    return std::string("cli_test_") + tag + ".tmp";
}

CliResult run_cli(const std::string& args, const char* tag) {
    const std::string out_file = temp_path(tag);
    const std::string cmd =
        std::string("\"") + PLURIPOT_CLI_PATH + "\" " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_file.c_str());
    return r;
}

}  // namespace

TEST_CASE("eval prints the closed form and exits cleanly") {
    const CliResult r = run_cli("eval --set interval --point 2,0", "eval_ok");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1.3169578969248166\n", 0) == 0);
    const auto j = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
    CHECK(j["value"].get<double>() == doctest::Approx(1.3169578969248166).epsilon(1e-15));
}

TEST_CASE("eval handles complex points") {
    const CliResult r = run_cli("eval --set realdisk --point 0,1,0,0", "eval_cpx");
    CHECK(r.code == 0);
    // V(i, 0) = (1/2) acosh(1 + 1 + 1) = (1/2) acosh(3).
    const auto j = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
    CHECK(j["value"].get<double>() == doctest::Approx(0.8813735870195428).epsilon(1e-12));
}

TEST_CASE("descriptor errors exit with code 2") {
    CHECK(run_cli("eval --set klingon --point 2,0", "bad_set").code == 2);
    CHECK(run_cli("eval --set interval --point 2", "bad_point").code == 2);
    CHECK(run_cli("eval --set interval --point 1,2,3", "bad_point3").code == 2);
    CHECK(run_cli("definitely-not-a-subcommand", "bad_sub").code == 2);
}

TEST_CASE("domain errors exit with code 3") {
    // The interval closed form is defined on the z2 = 0 slice only.
    CHECK(run_cli("eval --set interval --point 0.5,0.3", "dom_slice").code == 3);
    CHECK(run_cli("bound --set interval --point 2,0 --degrees 2,3", "dom_degrees").code == 3);
}

TEST_CASE("io errors exit with code 4") {
    CHECK(run_cli("grid --set square --window -1,1,-1,1 --res 4 --out "
                  "/nonexistent_dir_zz/g.csv",
                  "io_err")
              .code == 4);
}

TEST_CASE("lp errors exit with code 5") {
    // A two-dimensional exponent lattice cannot be spanned on the 1D interval mesh.
    CHECK(run_cli("bound --set interval --point 2,0 --degree 2 --lattice pachull", "lp_err")
              .code == 5);
}

TEST_CASE("bound emits certified values with the closed form attached") {
    const CliResult r = run_cli("bound --set interval --point 2,0 --degrees 1,2", "bound_ok");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["bounds"].size() == 2);
    CHECK(j["bounds"][0]["value"].get<double>() ==
          doctest::Approx(0.6931471805599453).epsilon(1e-12));
    CHECK(j["bounds"][1]["value"].get<double>() ==
          doctest::Approx(0.9729550745276566).epsilon(1e-12));
    CHECK(j["closed_form"].get<double>() ==
          doctest::Approx(1.3169578969248166).epsilon(1e-15));
}

TEST_CASE("grid output is byte-deterministic") {
    const std::string out1 = temp_path("grid1");
    const std::string out2 = temp_path("grid2");
    const std::string base = "grid --set realdisk --window -1.5,1.5,-1.5,1.5 --res 16 --out ";
    CHECK(run_cli(base + out1, "grid_a").code == 0);
    CHECK(run_cli(base + out2 + " --threads 2", "grid_b").code == 0);
    std::ifstream f1(out1), f2(out2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().rfind("x,y,value\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : s1.str())
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 16 * 16);  // header + one row per grid point
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("approach subcommand reports fits") {
    const CliResult rv = run_cli("approach --target pacman --vertical", "app_vert");
    CHECK(rv.code == 0);
    const auto jv = nlohmann::json::parse(rv.out);
    CHECK(jv["kind"].get<std::string>() == "finite");
    CHECK(jv["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    const CliResult rt = run_cli("approach --target pacman --tangential 1,2", "app_tan");
    CHECK(rt.code == 0);
    const auto jt = nlohmann::json::parse(rt.out);
    CHECK(jt["kind"].get<std::string>() == "divergent");

    // Exactly one path selector is required.
    CHECK(run_cli("approach --target pacman --vertical --linear-c 2", "app_both").code != 0);
    CHECK(run_cli("approach --target pacman", "app_none").code != 0);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help", "help").code == 0);
    CHECK(run_cli("bound --help", "help_bound").code == 0);
}
