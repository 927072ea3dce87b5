#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef CYCLIC_CENSUS_BIN
#define CYCLIC_CENSUS_BIN "cyclic-census"
#endif

namespace {

struct CliResult {
  std::string out;  // stdout + stderr interleaved
  int code = -1;
};

// Runs the installed binary through the shell; callers quote specs that
// contain shell metacharacters (brackets, semicolons).
CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(CYCLIC_CENSUS_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("invariants prints the headline counts", "[cli]") {
  CliResult r = run_cli("invariants D6");
  INFO(r.out);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("order: 12") != std::string::npos);
  REQUIRE(r.out.find("c: 10") != std::string::npos);
  REQUIRE(r.out.find("lambda: 7") != std::string::npos);
  REQUIRE(r.out.find("center order: 2") != std::string::npos);
}

TEST_CASE("invariants emits machine-readable records", "[cli]") {
  CliResult r = run_cli("invariants C12 --json");
  INFO(r.out);
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["group"] == "C12");
  REQUIRE(j["order"] == 12);
  REQUIRE(j["c"] == 6);
  REQUIRE(j["lambda"] == 1);
}

TEST_CASE("invariants sorts multi-spec output canonically", "[cli]") {
  CliResult r = run_cli("invariants D3 C4 'Ab[2,2]'");
  INFO(r.out);
  REQUIRE(r.code == 0);
  size_t a = r.out.find("Ab[2,2]");
  size_t b = r.out.find("C4");
  size_t c = r.out.find("D3");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  REQUIRE(c != std::string::npos);
  REQUIRE(a < b);
  REQUIRE(b < c);
}

TEST_CASE("decompose reports the peeled cyclic part", "[cli]") {
  CliResult r = run_cli("decompose C60 --json");
  INFO(r.out);
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["group"] == "C60");
  REQUIRE(j["cyclic_part"] == nlohmann::json::parse("[[2,2],[3,1],[5,1]]"));
  REQUIRE(j["core_order"] == 1);

  CliResult rr = run_cli("decompose 'SD(3,4;2)' --json");
  INFO(rr.out);
  REQUIRE(rr.code == 0);
  nlohmann::json jj = nlohmann::json::parse(rr.out);
  REQUIRE(jj["cyclic_part"].empty());
  REQUIRE(jj["core_order"] == 12);
}

TEST_CASE("verify runs clean on a small sweep", "[cli]") {
  CliResult r = run_cli("verify --bound 24 --suite all --seed 1");
  INFO(r.out);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("failures: 0") != std::string::npos);
  REQUIRE(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("seeded verify output is byte-identical across runs", "[cli]") {
  const char* args = "verify --bound 32 --suite all --seed 5 --json";
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  REQUIRE(first.code == 0);
  REQUIRE(second.code == 0);
  REQUIRE(first.out == second.out);
  // last line is the summary record
  size_t nl = first.out.find_last_of('\n', first.out.size() - 2);
  nlohmann::json summary = nlohmann::json::parse(first.out.substr(nl + 1));
  REQUIRE(summary["failures"] == 0);
  REQUIRE(summary["checks"].get<int>() > 100);
}

TEST_CASE("injected table faults are caught and fail the run", "[cli]") {
  CliResult r = run_cli("verify --bound 32 --suite eq1 --perturb --seed 3");
  INFO(r.out);
  REQUIRE(r.code == 1);
  REQUIRE(r.out.find("FAIL") != std::string::npos);
  REQUIRE(r.out.find("injected fault detected") != std::string::npos);
}

TEST_CASE("malformed specs exit with a usage error", "[cli]") {
  CliResult r = run_cli("invariants C");
  INFO(r.out);
  REQUIRE(r.code == 2);
  REQUIRE(r.out.find("error:") != std::string::npos);
  REQUIRE(r.out.find("column 2") != std::string::npos);
}

TEST_CASE("unknown suites and subcommands exit with a usage error", "[cli]") {
  REQUIRE(run_cli("verify --suite bogus --bound 16").code == 2);
  REQUIRE(run_cli("frobnicate").code == 2);
}

TEST_CASE("an order cap overflow is a check failure, not a usage error", "[cli]") {
  CliResult r = run_cli("invariants C9000 --cap 100");
  INFO(r.out);
  REQUIRE(r.code == 1);
  REQUIRE(r.out.find("error:") != std::string::npos);
}

TEST_CASE("catalog lists specs one per line", "[cli]") {
  CliResult r = run_cli("catalog --bound 16");
  INFO(r.out);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("C16\n") != std::string::npos);
  REQUIRE(r.out.find("D8\n") != std::string::npos);
  REQUIRE(r.out.find("Q12\n") != std::string::npos);
  REQUIRE(r.out.find("SD(3,4;2)\n") != std::string::npos);
}
