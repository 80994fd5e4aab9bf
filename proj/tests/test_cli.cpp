#include <doctest.h>

#include <cstdio>
#include <string>

#include "test_util.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli_env(const std::string& env, const std::string& args) {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(ARR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

RunResult run_cli(const std::string& args) { return run_cli_env("", args); }

std::string corpus(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name + ".json";
}

}  // namespace

TEST_CASE("poincare output") {
  RunResult r = run_cli("poincare " + corpus("ot454"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(1+t)(1+2t)^2\n");
  RunResult nf = run_cli("poincare " + corpus("notfactored"));
  CHECK(nf.out == "1+4t+6t^2+3t^3\n");
}

TEST_CASE("verdicts exit 0 even when false") {
  RunResult r = run_cli("check nice " + corpus("a222") + " --partition \"1,3|2,4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nice: false") != std::string::npos);
  CHECK(r.out.find("flat") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check nice").exit_code == 2);
}

TEST_CASE("missing file exits 1") {
  CHECK(run_cli("poincare /nonexistent.json").exit_code == 1);
}

TEST_CASE("table golden files") {
  struct Golden {
    std::string args;
    std::string file;
  };
  std::vector<Golden> goldens{
      {"table " + corpus("ot454") + " --order 1,2,3,4,5 --partition \"1|2,4|3,5\"",
       "table_ot454.txt"},
      {"table " + corpus("d13") + " --seed " + corpus("d21xphi1") + " --order 4,5,6,7",
       "table_d13.txt"},
      {"table " + corpus("notheredfactored") +
           " --order 1,2,3,4,5,6,7,8,9,10 --partition \"1|2,3,10|4,5,9|6,7,8\"",
       "table_notheredfactored.txt"},
  };
  for (const auto& g : goldens) {
    RunResult r = run_cli(g.args);
    CHECK(r.exit_code == 0);
    std::string expected = testutil::read_file(std::string(GOLDEN_DIR) + "/" + g.file);
    REQUIRE(!expected.empty());
    CHECK(r.out == expected);
  }
}

TEST_CASE("json output re-verifies through the library") {
  RunResult r = run_cli("--json check ind-factored " + corpus("d13"));
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  arr::Certificate cert = arr::certificate_from_json(j);
  CHECK(cert.verdict);
  CHECK(arr::reverify_certificate(testutil::load_corpus("d13"), cert, "ind-factored"));

  RunResult ss = run_cli("--json check supersolvable " + corpus("ot454"));
  arr::Certificate ss_cert = arr::certificate_from_json(nlohmann::json::parse(ss.out));
  CHECK(arr::reverify_certificate(testutil::load_corpus("ot454"), ss_cert, "supersolvable"));

  RunResult iff = run_cli("--json check ind-free " + corpus("gf4_11"));
  arr::Certificate if_cert = arr::certificate_from_json(nlohmann::json::parse(iff.out));
  CHECK(arr::reverify_certificate(testutil::load_corpus("gf4_11"), if_cert, "ind-free"));
}

TEST_CASE("find nice with limit") {
  RunResult r = run_cli("find nice " + corpus("zeta3_11"));
  CHECK(r.out.find("2 nice partition(s)") != std::string::npos);
  RunResult lim = run_cli("find nice " + corpus("g333hat") + " --limit 2");
  CHECK(lim.out.find("2 nice partition(s)") != std::string::npos);
}

TEST_CASE("os-verify") {
  RunResult r = run_cli("os-verify " + corpus("ot454") + " --partition \"1|2,4|3,5\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("kappa is an isomorphism") != std::string::npos);
}

TEST_CASE("on-disk certificate cache") {
  std::string dir = "/tmp/arr-cache-test";
  std::string env = "ARR_CACHE_DIR=" + dir;
  std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  RunResult first = run_cli_env(env, "check ind-free " + corpus("d13"));
  CHECK(first.exit_code == 0);
  // a second process answers from the persisted certificates
  RunResult second = run_cli_env(env, "check ind-free " + corpus("d13"));
  CHECK(second.exit_code == 0);
  CHECK(second.out == first.out);
  FILE* ls = popen(("ls " + dir + " | wc -l").c_str(), "r");
  REQUIRE(ls != nullptr);
  char buf[64] = {0};
  REQUIRE(fgets(buf, sizeof buf, ls) != nullptr);
  pclose(ls);
  CHECK(std::stoi(buf) > 0);
}

TEST_CASE("caps exit 3") {
  RunResult r = run_cli("check independent " + corpus("gf4_11") +
                        " --partition \"1,3,9,10|2,4,5,6,7,8|11\" --max-transversals 2");
  CHECK(r.exit_code == 3);
}
