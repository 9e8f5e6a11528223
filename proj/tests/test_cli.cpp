#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "nuforge/report.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult res;
  std::string cmd = std::string(NU_FORGE_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("/tmp/nuforge_cli_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("build reports the C2 construction orders") {
  RunResult r = run_cli("build --group C2 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["groups"][0]["orders"]["nu"] == 8);
  CHECK(j["groups"][0]["orders"]["upsilon"] == 2);
  CHECK(j["groups"][0]["orders"]["G"] == 2);
}

TEST_CASE("build on the trivial group gives all ones") {
  RunResult r = run_cli("build --group trivial --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  for (const char* k : {"G", "G_derived", "nu", "upsilon", "mu"})
    CHECK(j["groups"][0]["orders"][k] == 1);
}

TEST_CASE("a non-group Cayley file exits with the input-error code") {
  TempFile bad("bad.tbl", "order: 2\n0 1\n1 1\n");
  RunResult r = run_cli("build --cayley " + bad.path);
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown groups and checks exit with the input-error code") {
  CHECK(run_cli("build --group nosuch").exit_code == 2);
  CHECK(run_cli("verify --group S3 --check nosuch").exit_code == 2);
}

TEST_CASE("verify passes the relation suite on S3") {
  RunResult r = run_cli("verify --group S3 --check lemma21 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["groups"][0]["checks"].size() == 5);
}

TEST_CASE("verify accepts comma-separated check lists") {
  RunResult r =
      run_cli("verify --group C2 --check mu-central,schur --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["groups"][0]["checks"].size() == 4);  // 1 + 3
}

TEST_CASE("exceeding the coset cap exits with the resource-limit code") {
  CHECK(run_cli("build --group C2xC2 --max-cosets 64").exit_code == 3);
}

TEST_CASE("series output matches the known orders") {
  RunResult lcs = run_cli("series --group D8 --which lcs --format json");
  REQUIRE(lcs.exit_code == 0);
  auto jl = nlohmann::ordered_json::parse(lcs.out);
  CHECK(jl["orders_G"] == nlohmann::ordered_json::array({8, 2, 1}));

  RunResult ucs = run_cli("series --group S3 --which ucs --format json");
  auto ju = nlohmann::ordered_json::parse(ucs.out);
  CHECK(ju["orders_G"] == nlohmann::ordered_json::array({1, 1}));

  RunResult der = run_cli("series --group C6 --which derived --format json");
  auto jd = nlohmann::ordered_json::parse(der.out);
  CHECK(jd["orders_G"] == nlohmann::ordered_json::array({6, 1}));
}

TEST_CASE("emitted JSON round-trips byte-identically") {
  RunResult r = run_cli("verify --group D8 --seed 0 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("timings stay out of JSON unless requested") {
  RunResult bare = run_cli("verify --group C2 --format json");
  REQUIRE(bare.exit_code == 0);
  CHECK(bare.out.find("elapsed_us") == std::string::npos);
  CHECK(bare.out.find("realize_us") == std::string::npos);
  RunResult timed = run_cli("verify --group C2 --format json --timings");
  REQUIRE(timed.exit_code == 0);
  CHECK(timed.out.find("elapsed_us") != std::string::npos);
  CHECK(timed.out.find("realize_us") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical reports") {
  std::string args = "verify --group C4 --seed 7 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("jobs parallelism does not change the report") {
  std::string base = "verify --all --seed 0 --format json";
  RunResult a = run_cli(base + " --jobs 1");
  RunResult b = run_cli(base + " --jobs 8");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("file-based groups reach the same construction") {
  TempFile klein("klein.tbl",
                 "order: 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  RunResult r = run_cli("build --cayley " + klein.path + " --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["groups"][0]["orders"]["upsilon"] == 16);
  CHECK(j["groups"][0]["orders"]["nu"] == 256);

  TempFile s3p("s3.perms", "(0 1)\n(0 1 2)\n");
  RunResult rp = run_cli("build --perms " + s3p.path + " --format json");
  REQUIRE(rp.exit_code == 0);
  auto jp = nlohmann::ordered_json::parse(rp.out);
  CHECK(jp["groups"][0]["orders"]["G"] == 6);

  TempFile pres("c5.pres", "gens: a\nrel: a^5\n");
  RunResult rr = run_cli("build --presentation " + pres.path + " --format json");
  REQUIRE(rr.exit_code == 0);
  auto jr = nlohmann::ordered_json::parse(rr.out);
  CHECK(jr["groups"][0]["orders"]["nu"] == 125);
}

TEST_CASE("verify without a selection is an input error") {
  CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("malformed invocations exit with the input-error code") {
  CHECK(run_cli("build --group S3 --no-such-flag").exit_code == 2);
  CHECK(run_cli("series --group D8 --which nosuch").exit_code == 2);
  CHECK(run_cli("build --group S3 --cayley /tmp/x.tbl").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--version").exit_code == 0);
}

TEST_CASE("failing verdicts flow into the serialized reports") {
  using namespace nuforge;
  GroupReport g;
  g.group = "synthetic";
  g.order_g = 2;
  g.order_derived = 1;
  g.order_center = 2;
  g.order_nu = 8;
  g.order_upsilon = 2;
  g.order_mu = 2;
  g.upsilon_structure.order = 2;
  g.upsilon_structure.exponent = 2;
  g.upsilon_structure.abelian_invariants = {2};
  CheckResult bad;
  bad.check_id = "synthetic-check";
  bad.group_label = "synthetic";
  bad.pass = false;
  bad.tuples_checked = 5;
  bad.witness = "(g=1,h=1)";
  g.checks.push_back(bad);
  RunReport rep;
  rep.groups.push_back(g);
  CHECK_FALSE(rep.all_pass());
  std::string json = report_to_json(rep, false);
  auto parsed = nlohmann::ordered_json::parse(json);
  CHECK(parsed["all_pass"] == false);
  CHECK(parsed["groups"][0]["checks"][0]["verdict"] == "fail");
  CHECK(parsed["groups"][0]["checks"][0]["witness"] == "(g=1,h=1)");
  std::string text = report_to_text(rep);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("(g=1,h=1)") != std::string::npos);

  // an inconsistent order table must be refused at serialization time
  GroupReport broken = g;
  broken.order_nu = 9;
  RunReport rep2;
  rep2.groups.push_back(broken);
  CHECK_THROWS_AS(report_to_json(rep2, false), InternalError);
}
