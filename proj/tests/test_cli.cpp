// Golden exit-code matrix and report determinism for the CLI, driven
// end-to-end through the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HYPERPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

struct Fixtures {
  fs::path dir;
  std::string halfcube, e_dir, e3, ones3, sumsq, e_deg, badrat, asym, realization;

  Fixtures() {
    dir = fs::temp_directory_path() / "hyperpoly_cli_test";
    fs::create_directories(dir);
    halfcube = write("halfcube.json", R"({"kind":"forms","nvars":4,
      "variables":["t","x","y","z"],
      "forms":[["1","-1","1","1"],["1","1","-1","1"],["1","1","1","-1"],["1","-1","-1","-1"]]})");
    e_dir = write("e.json", R"(["1","0","0","0"])");
    e3 = write("e3.json", R"({"kind":"polynomial","nvars":3,"terms":[
      {"exponents":[1,1,1],"coeff":"1"}]})");
    ones3 = write("ones3.json", R"(["1","1","1"])");
    sumsq = write("sumsq.json", R"({"kind":"polynomial","nvars":2,"terms":[
      {"exponents":[2,0],"coeff":"1"},{"exponents":[0,2],"coeff":"1"}]})");
    e_deg = write("e_degenerate.json", R"(["0","1","1"])");
    badrat = write("badrat.json", R"({"kind":"polynomial","nvars":1,"terms":[
      {"exponents":[1],"coeff":"1/0"}]})");
    asym = write("asym.json", R"({"kind":"pencil","nvars":1,"size":2,"mats":[["0","1","2","0"]]})");
    realization = write("u23.json", R"({"kind":"realization","rows":2,"cols":3,
      "entries":["1","0","-1","0","1","-1"]})");
  }

  std::string write(const char* name, const char* text) {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

}  // namespace

TEST_CASE("exit-code matrix across all commands") {
  const Fixtures fx;

  SUBCASE("polar") {
    CHECK(run_cli("polar --in " + fx.e3 + " --dir " + fx.ones3 + " -i 1").exit_code == 0);
    // order beyond the degree: precondition violation
    CHECK(run_cli("polar --in " + fx.e3 + " --dir " + fx.ones3 + " -i 4").exit_code == 3);
    CHECK(run_cli("polar --in /missing.json --dir " + fx.ones3 + " -i 1").exit_code == 2);
    CHECK(run_cli("polar --in " + fx.badrat + " --dir '(1)' -i 0").exit_code == 2);
  }
  SUBCASE("hyp-check") {
    CHECK(run_cli("hyp-check --in " + fx.e3 + " --dir " + fx.ones3 + " --samples 32 --seed 7")
              .exit_code == 0);
    CHECK(run_cli("hyp-check --in " + fx.sumsq + " --dir '(1,0)' --samples 32 --seed 7")
              .exit_code == 1);
    // p(e) = 0: precondition
    CHECK(run_cli("hyp-check --in " + fx.e3 + " --dir " + fx.e_deg).exit_code == 3);
  }
  SUBCASE("member") {
    CHECK(run_cli("member --in " + fx.e3 + " --dir " + fx.ones3 + " --point '(1,2,3)'")
              .exit_code == 0);
    CHECK(run_cli("member --in " + fx.e3 + " --dir " + fx.ones3 + " --point '(-1,2,3)'")
              .exit_code == 1);
    // boundary point: closed in, open out
    CHECK(run_cli("member --in " + fx.e3 + " --dir " + fx.ones3 + " --point '(0,1,1)'")
              .exit_code == 0);
    CHECK(run_cli("member --in " + fx.e3 + " --dir " + fx.ones3 + " --point '(0,1,1)' --open")
              .exit_code == 1);
    // derivative relaxation admits '(-1,2,2)'
    CHECK(run_cli("member --in " + fx.e3 + " --dir " + fx.ones3 +
                  " --point '(-1,2,2)' --derivative 1")
              .exit_code == 0);
    // invalid context diagnosed, not answered
    CHECK(run_cli("member --in " + fx.sumsq + " --dir '(1,0)' --point '(0,1)'").exit_code == 3);
    // wrong point length is an input error
    CHECK(run_cli("member --in " + fx.e3 + " --dir " + fx.ones3 + " --point '(1,2)'")
              .exit_code == 2);
  }
  SUBCASE("renegar") {
    CHECK(run_cli("renegar --forms " + fx.halfcube + " --dir " + fx.e_dir + " --verify")
              .exit_code == 0);
    // direction outside the interior
    CHECK(run_cli("renegar --forms " + fx.halfcube + " --dir '(1,1,1,1)'").exit_code == 3);
    CHECK(run_cli("renegar --forms " + fx.e3 + " --dir " + fx.e_dir).exit_code == 2);
  }
  SUBCASE("binet") {
    CHECK(run_cli("binet --realization " + fx.realization).exit_code == 0);
    CHECK(run_cli("binet --realization " + fx.asym).exit_code == 2);
  }
  SUBCASE("polymatroid") {
    const auto r = run_cli("polymatroid --in " + fx.e3 + " --dir " + fx.ones3);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"polymatroid\": true") != std::string::npos);
    CHECK(r.out.find("\"uniform\"") != std::string::npos);
    // orthant violation: basis vector escapes the cone
    const auto bad = run_cli("polymatroid --in " + fx.sumsq + " --dir '(1,0)'");
    CHECK(bad.exit_code == 3);
  }
  SUBCASE("uniform-search") {
    const auto found = run_cli("uniform-search -k 3 -n 4");
    CHECK(found.exit_code == 0);
    CHECK(found.out.find("\"verified\": true") != std::string::npos);
    const auto missing = run_cli("uniform-search -k 2 -n 4");
    CHECK(missing.exit_code == 1);
    CHECK(missing.out.find("\"searched\": 16") != std::string::npos);
    CHECK(run_cli("uniform-search -k 4 -n 10").exit_code == 3);
  }
  SUBCASE("e2-rep") {
    CHECK(run_cli("e2-rep -n 4").exit_code == 0);
    const auto literal = run_cli("e2-rep -n 4 --literal-paper-matrix");
    CHECK(literal.exit_code == 1);
    CHECK(literal.out.find("\"difference\"") != std::string::npos);
  }
  SUBCASE("pencil invariant violations are input errors") {
    // asymmetric pencil model rejected at parse time with the entry named
    const auto r = run_cli("binet --realization " + fx.asym);
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown command") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
  }
}

TEST_CASE("reports are byte-identical across runs") {
  const Fixtures fx;
  const std::string invocations[] = {
      "renegar --forms " + fx.halfcube + " --dir " + fx.e_dir + " --verify",
      "hyp-check --in " + fx.e3 + " --dir " + fx.ones3 + " --samples 16 --seed 42",
      "polymatroid --in " + fx.e3 + " --dir " + fx.ones3,
      "uniform-search -k 2 -n 5",
      "e2-rep -n 3",
  };
  for (const auto& inv : invocations) {
    const auto a = run_cli(inv);
    const auto b = run_cli(inv);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
    CHECK_FALSE(a.out.empty());
  }
  // parallel flag changes nothing
  const auto seq = run_cli("hyp-check --in " + fx.e3 + " --dir " + fx.ones3 +
                           " --samples 32 --seed 9");
  const auto par = run_cli("--jobs 4 hyp-check --in " + fx.e3 + " --dir " + fx.ones3 +
                           " --samples 32 --seed 9");
  CHECK(seq.out == par.out);
}
