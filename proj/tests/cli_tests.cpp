#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const std::string kBin = COOKIEDIM_CLI;
const std::string kConfigDir = COOKIEDIM_CONFIG_DIR;

fs::path scratch_root() {
  static fs::path root = [] {
    fs::path p = fs::temp_directory_path() / "cookiedim_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

int run(const std::string& args, const fs::path& capture) {
  std::string cmd = kBin + " " + args + " >" + capture.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

int run(const std::string& args) {
  static int counter = 0;
  return run(args, scratch_root() / ("log" + std::to_string(counter++)));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("moran subcommand prints the closed-form dimension") {
  fs::path log = scratch_root() / "moran.log";
  int rc = run("moran 0.3333333333333333 0.3333333333333333", log);
  CHECK(rc == 0);
  CHECK(slurp(log).find("0.630929753571") != std::string::npos);
  // invalid ratios are a usage error
  CHECK(run("moran 1.5 0.2") == 2);
  CHECK(run("moran") == 2);
}

TEST_CASE("dim subcommand: stationary report and exit-code mapping") {
  fs::path log = scratch_root() / "dim_thirds.log";
  CHECK(run("dim " + kConfigDir + "/thirds.toml", log) == 0);
  CHECK(slurp(log).find("0.630929753571") != std::string::npos);

  // missing config file is a usage error
  CHECK(run("dim " + kConfigDir + "/does_not_exist.toml") == 2);

  // deep horizons without the fallback hit the enumeration cap
  CHECK(run("dim " + kConfigDir + "/moebius_pair_blocks.toml") == 3);

  fs::path out = scratch_root() / "dim_out";
  fs::path log2 = scratch_root() / "dim_fallback.log";
  CHECK(run("dim " + kConfigDir +
                "/moebius_pair_blocks.toml --allow-fallback --out " +
                out.string(),
            log2) == 0);
  CHECK(fs::exists(out / "horizons.csv"));
  CHECK(slurp(log2).find("freq-approx") != std::string::npos);
}

TEST_CASE("dim subcommand reports driven-sequence estimates") {
  fs::path out = scratch_root() / "dim_blocks_out";
  fs::path log = scratch_root() / "dim_blocks.log";
  CHECK(run("dim " + kConfigDir + "/thirds_quarter_blocks.toml --out " +
                out.string(),
            log) == 0);
  std::string text = slurp(log);
  CHECK(text.find("hausdorff") != std::string::npos);
  CHECK(text.find("0.521650449809") != std::string::npos);
  CHECK(text.find("0.599536629947") != std::string::npos);
  CHECK(fs::exists(out / "horizons.csv"));
}

TEST_CASE("verify subcommand exit codes reflect the report verdicts") {
  CHECK(run("verify lemma-quasi") == 0);
  CHECK(run("verify prop-combine") == 0);
  // geometric block growth provably misses the 0.02 window at every
  // finite block end, so this scenario reports an honest failure
  CHECK(run("verify thm-main-affine") == 1);
  CHECK(run("verify no-such-scenario") == 2);
}

TEST_CASE("sweep subcommand writes deterministic csv and svg") {
  fs::path out1 = scratch_root() / "sweep1";
  fs::path out2 = scratch_root() / "sweep2";
  fs::path log = scratch_root() / "sweep.log";
  std::string cfg = kConfigDir + "/sweep_crossing.toml";
  CHECK(run("sweep " + cfg + " --out " + out1.string(), log) == 0);
  CHECK(run("sweep " + cfg + " --out " + out2.string()) == 0);
  REQUIRE(fs::exists(out1 / "sweep.csv"));
  REQUIRE(fs::exists(out1 / "sweep.svg"));
  CHECK(slurp(out1 / "sweep.csv") == slurp(out2 / "sweep.csv"));
  CHECK(slurp(out1 / "sweep.svg") == slurp(out2 / "sweep.svg"));
  CHECK(slurp(log).find("kink") != std::string::npos);
  std::string csv = slurp(out1 / "sweep.csv");
  CHECK(csv.find("a,") == 0);
}

TEST_CASE("boxdim subcommand writes the regression table") {
  fs::path out = scratch_root() / "boxdim_out";
  fs::path log = scratch_root() / "boxdim.log";
  CHECK(run("boxdim " + kConfigDir + "/quarter.toml --out " + out.string(),
            log) == 0);
  REQUIRE(fs::exists(out / "boxdim.csv"));
  CHECK(!slurp(out / "boxdim.csv").empty());
  CHECK(slurp(log).find("0.5") != std::string::npos);
}

TEST_CASE("top-level usage errors exit with code 2, help with 0") {
  CHECK(run("--help") == 0);
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
}
