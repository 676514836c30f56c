// test_cli.cpp
//
// Drives the installed binary end to end: exit codes, report shape, byte
// determinism, and the selftest negative control. STRATIFY_BIN is injected
// by the build so the test always runs the binary it was built with.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/stratify_test_stdout.txt";
  const std::string err_path = "/tmp/stratify_test_stderr.txt";
  std::string cmd = std::string(STRATIFY_BIN) + " " + args + " > " + out_path + " 2> " + err_path;
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

std::string write_temp(const std::string& text) {
  const std::string path = "/tmp/stratify_test_input.alg";
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("analyze on a bundled fixture emits a full report") {
  RunResult r = run_cli("analyze --fixture backflow --json -");
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);

  CHECK(rep["tool"] == "stratify");
  CHECK(rep["input_digest"].get<std::string>().substr(0, 6) == "fnv1a:");
  CHECK(rep["fixture"] == "backflow");
  CHECK(rep["field"] == "q");
  CHECK(rep["algebra"]["dimension"] == 8);

  const Json& st = rep["stratification"];
  CHECK(st["standardly_stratified"] == true);
  CHECK(st["quasi_hereditary"] == true);
  CHECK(st["delta_dim_vectors"]["x"] == Json::array({1, 0, 0}));
  CHECK(st["directed"] == true);
  CHECK(st["violations"].empty());
  CHECK(st["filtration_certs"][0]["witness"].get<std::string>().substr(0, 6) == "fnv1a:");

  CHECK(rep["theorem14"]["pass"] == true);
  CHECK(rep["theorem14"]["claim"] == "theorem-1.4");
  CHECK(rep["gamma"]["gamma_graded_dims"] == Json::array({4, 2}));
  CHECK(rep["gamma"]["gamma_total_dim"] == 6);
  CHECK(rep["gamma"]["gamma_quiver"]["certified"] == true);
  CHECK(rep["koszul"]["verdict"] == true);
  CHECK(rep["gamma_stratified_leq"]["stratified"] == true);
  CHECK(rep["gamma_stratified_op"]["stratified"] == true);
  CHECK(rep["gamma_quasi_hereditary"]["leq"] == true);
  CHECK(rep["epss"]["applicable"] == true);
  CHECK(rep["epss"]["axioms"]["ok"] == true);
  CHECK(rep["epss"]["thm212"]["ok"] == true);
  CHECK(rep["epss"]["cor215"]["agree"] == true);

  // cap markers all prove out on this fixture
  for (auto& [key, val] : rep["markers"].items()) {
    CAPTURE(key);
    CHECK(val == "proven");
  }
}

TEST_CASE("two identical runs render byte-identical reports") {
  RunResult a = run_cli("analyze --fixture backflow --json -");
  RunResult b = run_cli("analyze --fixture backflow --json -");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("human-readable summary mode works and is deterministic") {
  RunResult a = run_cli("analyze --fixture backflow");
  REQUIRE(a.code == 0);
  CHECK(a.out.find("standardly stratified") != std::string::npos);
  RunResult b = run_cli("analyze --fixture backflow");
  CHECK(a.out == b.out);
}

TEST_CASE("directedness violations surface for the preorder fixture") {
  RunResult r = run_cli("analyze --fixture equipair --json -");
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["order"]["kind"] == "preorder");
  CHECK(rep["stratification"]["standardly_stratified"] == true);
  CHECK(rep["stratification"]["directed"] == false);
  REQUIRE(rep["stratification"]["violations"].size() == 2);
  CHECK(rep["stratification"]["violations"][0]["degree"] == 0);
  // no heights, no relative layer on a preorder
  CHECK(rep["epss"]["applicable"] == false);
}

TEST_CASE("invalid input exits 2") {
  SUBCASE("unparsable file") {
    std::string path = write_temp("this is not an algebra description\n");
    RunResult r = run_cli("analyze " + path);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
  }
  SUBCASE("order declared partial but cyclic") {
    std::string path = write_temp(
        "composition = right-to-left\n\n[quiver]\nvertices = x y\narrow a x y\n\n"
        "[order]\nbelow x y\nbelow y x\n");
    RunResult r = run_cli("analyze " + path);
    CHECK(r.code == 2);
    CHECK(r.err.find("partial") != std::string::npos);
  }
  SUBCASE("unknown fixture") {
    RunResult r = run_cli("analyze --fixture nosuchthing");
    CHECK(r.code == 2);
  }
  SUBCASE("unknown field") {
    RunResult r = run_cli("analyze --fixture backflow --field f2:7");
    CHECK(r.code == 2);
  }
  SUBCASE("missing input") {
    RunResult r = run_cli("analyze");
    CHECK(r.code == 2);
  }
}

TEST_CASE("an impossible cap exits 3 and names the problem") {
  RunResult r = run_cli("analyze --fixture backflow --max-path-length 1");
  CHECK(r.code == 3);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("fixtures subcommand lists the bundled algebras") {
  RunResult r = run_cli("fixtures");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("backflow") != std::string::npos);
  CHECK(r.out.find("equipair") != std::string::npos);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines >= 6);

  RunResult j = run_cli("fixtures --json -");
  REQUIRE(j.code == 0);
  Json list = Json::parse(j.out);
  CHECK(list.size() >= 6);
  CHECK(list[0].contains("name"));
  CHECK(list[0].contains("description"));
}

TEST_CASE("ext subcommand reports dimension tables") {
  RunResult r = run_cli("ext --fixture backflow --from x --to y --max-degree 6 --json -");
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["dims"] == Json::array({1, 1, 0, 0, 0, 0, 0}));
  CHECK(rep["proven"] == true);

  RunResult self = run_cli("ext --fixture backflow --from z --to z --max-degree 4 --json -");
  REQUIRE(self.code == 0);
  CHECK(Json::parse(self.out)["dims"] == Json::array({1, 0, 0, 0, 0}));

  RunResult text = run_cli("ext --fixture backflow --from x --to y --max-degree 3");
  REQUIRE(text.code == 0);
  CHECK(text.out.find("s=1:1") != std::string::npos);

  RunResult bad = run_cli("ext --fixture backflow --from x --to nowhere");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("nowhere") != std::string::npos);
}

TEST_CASE("selftest passes clean and trips on injected corruption") {
  RunResult ok = run_cli("selftest");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("pass") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("0 failures") != std::string::npos);

  RunResult bad = run_cli("selftest --inject-corruption");
  CHECK(bad.code != 0);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("prime field mode runs the radical-free part of the pipeline") {
  RunResult r = run_cli("analyze --fixture backflow --field fp:5 --json -");
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["field"] == "fp:5");
  CHECK(rep["stratification"]["standardly_stratified"] == true);
  CHECK(rep["gamma"]["gamma_graded_dims"] == Json::array({4, 2}));
  CHECK(rep["koszul"].contains("skipped"));
  CHECK(rep["gamma_stratified_leq"].contains("skipped"));
  CHECK(rep["epss"]["applicable"] == true);
  CHECK(rep["epss"]["cor215"].contains("skipped"));
  CHECK(rep["markers"]["koszul"] == "skipped");
}
