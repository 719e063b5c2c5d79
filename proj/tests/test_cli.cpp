#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MZV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("dual prints the dual index") {
  RunResult r = run_cli("dual 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n");

  r = run_cli("dual 1,{1}^2,3");  // ({1}^3, 1+2) pairs with ({1}^1, 3+2)
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1,5\n");
}

TEST_CASE("eval prints value with certificate") {
  RunResult r = run_cli("eval \"zetastar(1,2) - 2*zeta(3)\" --eps 1e-8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("value") != std::string::npos);
  CHECK(r.output.find("error bound") != std::string::npos);

  r = run_cli("eval \"zeta(2)\" --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"value\"") != std::string::npos);
  CHECK(r.output.find("\"error_bound\"") != std::string::npos);
  CHECK(r.output.find("1.6449340668") != std::string::npos);
}

TEST_CASE("eval rejects divergent input and parse errors") {
  CHECK(run_cli("eval \"zeta(1)\"").exit_code == 2);
  RunResult r = run_cli("eval \"zeta(2\"");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("parse error") != std::string::npos);
}

TEST_CASE("expand prints the strict-chain combination") {
  RunResult r = run_cli("expand zu --upper 2 --lower 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "zeta(3) + zeta(1,2)\n");

  r = run_cli("expand zb --upper 1,2 --lower 1 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"atom\"") != std::string::npos);
  CHECK(r.output.find("\"numerator\"") != std::string::npos);
}

TEST_CASE("verify runs parameters, grids, and defaults") {
  RunResult r = run_cli("verify thm1 --param m=1 --param n=2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS] thm1") != std::string::npos);

  r = run_cli("verify sum_formula --grid k=3..5,r=1..2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("6 instances: 6 PASS") != std::string::npos);

  CHECK(run_cli("verify no_such_thing").exit_code == 2);

  // out-of-domain alone does not fail the process
  r = run_cli("verify s6_euler_weighted --param m=0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("OUT_OF_DOMAIN") != std::string::npos);
}

TEST_CASE("list shows the registry with provenance") {
  RunResult r = run_cli("list");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("sum_formula") != std::string::npos);
  CHECK(r.output.find("Granville") != std::string::npos);
  CHECK(r.output.find("Zlobin") != std::string::npos);
  CHECK(r.output.find("identities registered") != std::string::npos);
}

TEST_CASE("suite exits zero and writes reports") {
  std::string report = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/mzv_suite_report.json";
  RunResult r = run_cli("suite --report " + report);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find(" 0 FAIL") != std::string::npos);

  FILE* f = std::fopen(report.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string body;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) body.append(buf.data(), n);
  std::fclose(f);
  CHECK(body.find("\"run_id\"") != std::string::npos);
  CHECK(body.find("\"results\"") != std::string::npos);
  std::remove(report.c_str());
}

TEST_CASE("environment cap clamps cutoffs") {
  RunResult r = run_cli("eval \"zeta(bar2)\" --eps 1e-12 --json");
  CHECK(r.output.find("\"cutoff\": 5000") == std::string::npos);

  std::string cmd = "MZV_MAX_CUTOFF=5000 " + std::string(MZV_CLI_PATH) +
                    " eval \"zeta(bar2)\" --eps 1e-12 --json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out.find("\"cutoff\": 5000") != std::string::npos);
}
