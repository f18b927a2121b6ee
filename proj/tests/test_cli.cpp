// End-to-end checks of the command-line binary; its path arrives via the
// MODINV_CLI environment variable.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("MODINV_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = "./cli_out.tmp";
    std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("validate succeeds on builtins") {
    RunResult r = run("validate --builtin e6-double");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("pass  ST-cubed-strict-mu-1") != std::string::npos);
    REQUIRE(run("validate --builtin su2 --level 16").exit_code == 0);
}

TEST_CASE("validate exits 1 on axiom failure, naming the axiom") {
    std::string bad = "./bad_data.json";
    {
        std::ofstream out(bad);
        out << R"({"name":"bad","labels":["0","1"],)"
            << R"("S":[["1/2","1/2"],["7/8","-1/2"]],"T":["1","1"]})";
    }
    RunResult r = run("validate " + bad);
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.out.find("FAIL") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("parse problems exit 2") {
    std::string garbage = "./garbage.json";
    {
        std::ofstream out(garbage);
        out << "{ nope";
    }
    REQUIRE(run("validate " + garbage).exit_code == 2);
    std::remove(garbage.c_str());
    REQUIRE(run("validate --builtin no-such-thing").exit_code == 2);
    REQUIRE(run("no-such-command").exit_code == 2);
    REQUIRE(run("validate missing_file.json").exit_code == 2);
    REQUIRE(run("graph --builtin e6-double --invariant Z4 --generator 5").exit_code == 2);
    REQUIRE(run("full-system --builtin e6-double --invariant Q7").exit_code == 2);
}

TEST_CASE("inconsistent theta exits 3") {
    REQUIRE(run("full-system --builtin e6-double --invariant Z4 --theta 0,2").exit_code == 3);
}

TEST_CASE("enumerate prints the four invariants in canonical order") {
    RunResult r = run("enumerate --builtin e6-double");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("commutant dimension 4, 4 invariants") != std::string::npos);
    REQUIRE(r.out.find("Z1  trace 10") < r.out.find("Z2  trace 8"));
    REQUIRE(r.out.find("Z2  trace 8") < r.out.find("Z3  trace 6"));
    REQUIRE(r.out.find("Z3  trace 6") < r.out.find("Z4  trace 3"));
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const char* args :
         {"enumerate --builtin e6-double --format json", "fuse-table --builtin su2 --level 16",
          "graph --builtin e6-double --invariant Z4 --generator +5 --format dot",
          "full-system --builtin e6-double --invariant Z3"}) {
        RunResult a = run(args), b = run(args);
        REQUIRE(a.exit_code == 0);
        REQUIRE(a.out == b.out);
    }
}

TEST_CASE("fuse-table renders the A-D-E table") {
    RunResult r = run("fuse-table --builtin su2 --level 16");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("Z2+Z3") != std::string::npos);  // E7 * E7^t = D10 + E7
}

TEST_CASE("sectors reports the matched invariant") {
    RunResult r = run("sectors --builtin e6-double --theta 0,2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("matched invariant: Z3") != std::string::npos);
    REQUIRE(r.out.find("6 sectors") != std::string::npos);
}

TEST_CASE("dot output is only a graph format") {
    RunResult r = run("graph --builtin e6-double --invariant Z1 --generator +4 --format dot");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.rfind("digraph", 0) == 0);
    // 10 nodes
    REQUIRE(r.out.find("n9 [label=") != std::string::npos);
    REQUIRE(r.out.find("n10 [label=") == std::string::npos);
}

TEST_CASE("json format is parseable and carries the documented keys") {
    RunResult r = run("full-system --builtin e6-double --invariant Z4 --format json");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\"full_count\": 9") != std::string::npos);
    REQUIRE(r.out.find("\"omega_pm\": \"9.4641\"") != std::string::npos);
    REQUIRE(r.out.find("\"omega_0\": \"1.0000\"") != std::string::npos);
}

TEST_CASE("MODINV_PRECISION environment override is accepted") {
    std::string out_file = "./cli_env.tmp";
    std::string cmd = "MODINV_PRECISION=256 " + cli_path() +
                      " validate --builtin e6-double > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    REQUIRE(WEXITSTATUS(rc) == 0);
    std::remove(out_file.c_str());
}
