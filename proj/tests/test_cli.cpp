#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + TWISTKNOT_CLI_PATH + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("trivial color through the CLI") {
  const RunResult r = run("jones --p 6 --N 1");
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["records"].size() == 1);
  const auto& rec = doc["records"][0];
  CHECK(rec["p"] == 6);
  CHECK(rec["N"] == 1);
  CHECK(rec["value"]["re"].get<double>() == 1.0);
  CHECK(rec["value"]["im"].get<double>() == 0.0);
  // Schema contract: meta carries precision, tolerances, paper_refs.
  CHECK(rec["meta"].contains("precision"));
  CHECK(rec["meta"].contains("tolerances"));
  CHECK(rec["meta"]["paper_refs"].is_array());
  CHECK(rec["meta"]["paper_refs"].empty());
}

TEST_CASE("published growth constant through the CLI") {
  const RunResult r = run("constants --p 100");
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  bool found = false;
  for (const auto& rec : doc["records"]) {
    if (rec["quantity"] == "two_pi_zeta") {
      found = true;
      CHECK(std::abs(rec["value"]["re"].get<double>() - 3.6636144) < 1e-5);
      CHECK(std::abs(rec["value"]["im"].get<double>() + 1043.809608) < 1e-5);
    }
  }
  CHECK(found);
}

TEST_CASE("byte-identical determinism") {
  const RunResult a = run("critical --p 7");
  const RunResult b = run("critical --p 7");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("CSV projection of the growth-rate table") {
  const RunResult r = run("verify-asymptotics --p 6 --N-list 10,20 --format csv");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("N,re_logJ_scaled,target,gap\n", 0) == 0);
  CHECK(r.out.find("\n10,") != std::string::npos);
  CHECK(r.out.find("\n20,") != std::string::npos);
}

TEST_CASE("machine-readable error JSON and nonzero exit") {
  const RunResult r = run("jones --p 6 --N 0");
  CHECK(r.status != 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.contains("error"));
  CHECK(doc["error"]["type"] == "DomainError");
  CHECK(doc["error"].contains("message"));
}

TEST_CASE("environment variable selects the default precision") {
  const RunResult r = run("jones --p 6 --N 2", "TWISTKNOT_PRECISION=extended");
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["records"][0]["meta"]["precision"] == "extended");

  const RunResult bad = run("jones --p 6 --N 2", "TWISTKNOT_PRECISION=bogus");
  CHECK(bad.status != 0);
}

TEST_CASE("volume channel cross-check through the CLI") {
  const RunResult r = run("volume --p 8");
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  for (const auto& rec : doc["records"])
    if (rec["quantity"] == "channel_mismatch")
      CHECK(std::abs(rec["value"]["re"].get<double>()) < 1e-8);
}

TEST_CASE("certificate suite: hessian") {
  const RunResult r = run("lemmas --suite hessian");
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["pass"] == true);
}
