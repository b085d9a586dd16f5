#include "support.hpp"

#include "cli.hpp"
#include "pathcheck/word_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace pathcheck;
using namespace testsupport;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "pathcheck_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string trimmed(const std::string& s) {
  auto end = s.find_last_not_of("\n ");
  return end == std::string::npos ? "" : s.substr(0, end + 1);
}

}  // namespace

TEST_CASE("check command") {
  auto r = run({"check", "--word", data("counting.dw"), "--formula", "x.F(x=5)"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("verdict=SAT\n", 0) == 0);

  r = run({"check", "--word", data("one-point.dw"), "--formula", "X true"});
  CHECK(r.status == 1);
  CHECK(r.out.rfind("verdict=UNSAT\n", 0) == 0);

  r = run({"check", "--word", data("one-point.dw"), "--formula", "X (true"});
  CHECK(r.status == 2);
  CHECK(r.err.find("parse error") != std::string::npos);

  r = run({"check", "--word", data("missing.dw"), "--formula", "true"});
  CHECK(r.status == 2);
  r = run({"check", "--word", data("counting.dw")});
  CHECK(r.status == 2);
  r = run({"check", "--word", data("counting.dw"), "--formula", "true", "--engine", "finite"});
  CHECK(r.status == 2);
  r = run({"bogus"});
  CHECK(r.status == 2);
}

TEST_CASE("engines through the command line agree") {
  for (std::string engine : {"auto", "naive", "periodic", "slp", "tptl1", "quasimono"}) {
    CAPTURE(engine);
    auto r = run({"check", "-w", data("counting.dw"), "-f", "x.F(x=5)", "-e", engine, "--format", "kv"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("verdict=SAT ", 0) == 0);
    CHECK(r.out.find("engine=") != std::string::npos);
    CHECK(r.out.find("elapsed_ms=") != std::string::npos);
  }
  auto r = run({"check", "-w", data("counting.dw"), "-f", "x.F(x=5)", "-e", "naive", "--horizon", "3"});
  CHECK(r.out.find("horizon: 3") != std::string::npos);
}

TEST_CASE("witness output") {
  auto r = run({"check", "-w", data("counting.dw"), "-f", "x.F(x=5)", "--witness"});
  CHECK(r.status == 0);
  CHECK(r.out.find("witness: U at 5") != std::string::npos);
}

TEST_CASE("slp command") {
  CHECK(trimmed(run({"slp", "min", data("g.slp")}).out) == "5");
  CHECK(trimmed(run({"slp", "max", data("g.slp")}).out) == "8");
  CHECK(trimmed(run({"slp", "length", data("g.slp")}).out) == "2");
  CHECK(trimmed(run({"slp", "at", data("g.slp"), "--index", "1"}).out) == "{} 8");
  auto r = run({"slp", "expand", data("g.slp")});
  CHECK(std::get<DataWord>(parse_word(r.out)) == pure_word({5, 8}));
  CHECK(run({"slp", "at", data("g.slp"), "--index", "2"}).status == 2);
  CHECK(run({"slp", "expand", data("g.slp"), "--budget", "1"}).status == 2);
}

TEST_CASE("docm command") {
  auto r = run({"docm", "--machine", data("inc.ocm"), "--formula", "G(x>=0)"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("verdict=SAT", 0) == 0);
  r = run({"docm", "--machine", data("inc.ocm"), "--formula", "x.F(x=3 & q0)"});
  CHECK(r.status == 1);
}

TEST_CASE("gen command") {
  auto r = run({"gen", "circuit", "--file", data("golden.cir")});
  CHECK(r.status == 0);
  CHECK(r.out.find("expected=false") != std::string::npos);
  CHECK(r.out.find("formula: X^2 G[7,8] X^7 F[7,8]") != std::string::npos);

  auto dir = scratch_dir();
  struct Case {
    std::vector<std::string> args;
    std::string name;
  };
  std::vector<Case> cases{
      {{"gen", "circuit", "--file", data("golden.cir")}, "mtl"},
      {{"gen", "circuit", "--file", data("golden.cir"), "--variant", "infinite"}, "inf"},
      {{"gen", "circuit", "--file", data("golden.cir"), "--variant", "smtl"}, "smtl"},
      {{"gen", "qbf", "--file", data("ae.qbf")}, "qbf"},
      {{"gen", "qbf", "--prefix", "AE", "--matrix", "x1 & x2"}, "qbf2"},
      {{"gen", "pqss", "--file", data("small.pqss")}, "pqss"},
      {{"gen", "pqss", "--a", "2,2", "--b", "4", "--variant", "freezeltl"}, "pqss2"},
  };
  for (auto& c : cases) {
    CAPTURE(c.name);
    std::string prefix = (dir / c.name).string();
    c.args.insert(c.args.end(), {"--out", prefix});
    auto g = run(c.args);
    REQUIRE(g.status == 0);
    std::string expected = trimmed(read_file(prefix + ".expected"));
    for (std::string f : {".tptl", ".desugared.tptl"}) {
      auto chk = run({"check", "--word", prefix + ".dw", "--formula-file", prefix + f});
      CHECK(chk.status == (expected == "expected=true" ? 0 : 1));
    }
  }
  CHECK(run({"gen", "pqss", "--a", "1,2,3", "--b", "4"}).status == 2);
  CHECK(run({"gen", "qbf", "--prefix", "A", "--matrix", "x3"}).status == 2);
}

TEST_CASE("automatic engine choice") {
  auto engine_of = [](const std::string& word, const std::string& f) {
    auto r = run({"check", "-w", data(word), "-f", f, "--format", "kv"});
    auto at = r.out.find("engine=");
    return r.out.substr(at + 7, r.out.find(' ', at) - at - 7);
  };
  CHECK(engine_of("one-point.dw", "x.F(x=5)") == "finite");
  CHECK(engine_of("counting.dw", "x.F(x=5)") == "tptl1");
  CHECK(engine_of("counting.dw", "x.y.F(x=5 & y=5)") == "periodic");
  CHECK(engine_of("quasi.dw", "x.y.F(x>=4 & y>2)") == "quasimono");
  CHECK(engine_of("g.slp", "x.F(x=3)") == "slp");
}
