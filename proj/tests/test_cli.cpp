// Drives the installed CLI binary end to end through a shell.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const std::string cli = TENSCOL_CLI_PATH;

struct Sandbox {
    fs::path dir;
    Sandbox() {
        dir = fs::temp_directory_path() / ("tenscol_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Sandbox() { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    const int status = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen/solve/validate round trip with artifacts") {
    Sandbox sb;
    REQUIRE(run("gen --family mycielski --level 4 --out " + sb.path("myciel4.col")) == 0);

    const std::string out_dir = sb.path("runs");
    CHECK(run("solve --instance " + sb.path("myciel4.col") +
              " --mode gcp --k 5 --seeds 0..2 -D 16 --rho 200 --max-iter 10000 --out-dir " +
              out_dir) == 0);

    CHECK(fs::exists(out_dir + "/myciel4_gcp_k5_s0.trace.csv"));
    CHECK(fs::exists(out_dir + "/myciel4_gcp_k5_s2.trace.csv"));
    CHECK(fs::exists(out_dir + "/myciel4_gcp_k5.sol"));
    CHECK(fs::exists(out_dir + "/summary.jsonl"));

    const std::string summary = slurp(out_dir + "/summary.jsonl");
    CHECK(summary.find("\"sr\":\"3/3\"") != std::string::npos);

    const std::string trace = slurp(out_dir + "/myciel4_gcp_k5_s0.trace.csv");
    CHECK(trace.find("iter,best_fcolor,best_feq,best_total,wall_s") != std::string::npos);
    CHECK(trace.find("seed=0") != std::string::npos);

    CHECK(run("validate --instance " + sb.path("myciel4.col") + " --solution " + out_dir +
              "/myciel4_gcp_k5.sol") == 0);
}

TEST_CASE("infeasible k exits 1") {
    Sandbox sb;
    REQUIRE(run("gen --family complete --n 4 --out " + sb.path("k4.col")) == 0);
    CHECK(run("solve --instance " + sb.path("k4.col") +
              " --mode gcp --k 3 -D 8 --max-iter 2000 --out-dir " + sb.path("runs")) == 1);
}

TEST_CASE("usage and input errors exit 2") {
    Sandbox sb;
    CHECK(run("solve --instance /nonexistent.col --k 5 --out-dir " + sb.path("runs")) == 2);
    CHECK(run("solve --no-such-flag") == 2);
    CHECK(run("definitely-not-a-subcommand") == 2);
    REQUIRE(run("gen --family complete --n 3 --out " + sb.path("k3.col")) == 0);
    CHECK(run("sensitivity --instance " + sb.path("k3.col") +
              " --k 3 --lambda-grid '' --mu-grid 0 --out-dir " + sb.path("runs")) == 2);
}

TEST_CASE("exact and sweep verbs work end to end") {
    Sandbox sb;
    REQUIRE(run("gen --family cycle --n 5 --out " + sb.path("c5.col")) == 0);
    CHECK(run("exact --instance " + sb.path("c5.col") + " --mode gcp") == 0);
    CHECK(run("sweep --instance " + sb.path("c5.col") +
              " -D 8 --max-iter 1500 --seeds 0 --out-dir " + sb.path("runs")) == 0);
    CHECK(fs::exists(sb.path("runs") + "/c5_gcp_sweep.sol"));
}

TEST_CASE("single-cell sensitivity grid writes its table") {
    Sandbox sb;
    REQUIRE(run("gen --family gnp --n 20 --p 0.4 --seed 3 --out " + sb.path("g20.col")) == 0);
    CHECK(run("sensitivity --instance " + sb.path("g20.col") +
              " --k 4 -D 8 --max-iter 500 --repeats 2 --lambda-grid 1e-5 --mu-grid 1e-6"
              " --out-dir " + sb.path("runs")) == 0);
    const std::string grid = slurp(sb.path("runs") + "/g20_gcp_k4_sensitivity.csv");
    CHECK(grid.find("lambda,mu,repeats,solved,mean_best_fitness,mean_iterations") !=
          std::string::npos);
    CHECK(grid.find("1e-05,1e-06,2,") != std::string::npos);
}

}  // TEST_SUITE
