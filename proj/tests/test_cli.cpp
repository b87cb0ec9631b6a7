#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    Run r;
    std::string cmd = std::string(GCROSS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli exit codes") {
    CHECK(cli("validate ising_trivialG").code == 0);
    CHECK(cli("compare ising_trivialG algebra_1psi").code == 0);
    CHECK(cli("").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("validate no_such_file").code == 2);
    CHECK(cli("--tol -1 validate trivial").code == 2);
    CHECK(cli("--format yaml validate trivial").code == 2);
}

TEST_CASE("cli stops at validation failure") {
    auto j = nlohmann::json::parse(std::ifstream(testsupport::data("ising_trivialG")));
    for (auto& e : j["fusion"]["F"])
        if (e[0] != 0 && e[1] != 0 && e[2] != 0 && e[3] != 0) {
            e[10] = e[10].get<double>() + 1e-3;
            break;
        }
    const std::string path = "cli_bad_ising.json";
    std::ofstream(path) << j.dump();
    Run r = cli("--format json zmatrix " + path);
    std::remove(path.c_str());
    CHECK(r.code == 1);
    auto out = nlohmann::json::parse(r.out);
    CHECK(out["outputs"].empty());  // nothing computed
    bool pentagon_failed = false;
    for (const auto& c : out["checks"])
        if (c["name"] == "validate/pentagon") pentagon_failed = !c["pass"].get<bool>();
    CHECK(pentagon_failed);
}

TEST_CASE("cli json reports are reproducible") {
    const std::string args = "--format json --seed 4 compare vec_z4 z4_boson";
    Run a = cli(args), b = cli(args + " --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["command"] == "compare");
    CHECK(j["spec"] == "vec_z4");
    CHECK(j["outputs"]["iso_found"] == true);
    CHECK(j["outputs"]["iso_residual"].get<double>() < 1e-8);
    CHECK(j["timings"].empty());
}

TEST_CASE("cli zmatrix schema") {
    Run r = cli("--format json zmatrix vec_z4 z4_boson");
    REQUIRE(r.code == 0);
    auto o = nlohmann::json::parse(r.out)["outputs"];
    CHECK(o["rows"].size() == 4);
    CHECK(o["cols"].size() == 4);
    CHECK(o["entries"] == nlohmann::json::parse("[[1,0,1,0],[0,1,0,1],[1,0,1,0],[0,1,0,1]]"));
    CHECK(o["grade_blocks"].size() == 1);
}
