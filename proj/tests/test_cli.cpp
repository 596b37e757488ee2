#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fqsolve/cli.hpp"

using namespace fqsolve;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return slurp(std::string(FQSOLVE_GOLDEN_DIR) + "/" + name); }

const char* kUnsat = "pes 2 1 2\npoly 1\n1 1\npoly 2\n1 1\n1 0\n";
const char* kEmpty = "pes 3 3 0\n";
const char* kSat = "pes 3 2 1\npoly 2\n1 1 1\n1 0 0\n";

}  // namespace

TEST_CASE("solve exit codes") {
  auto r = run({"solve", "-"}, kUnsat);
  CHECK(r.code == kExitUnsat);
  CHECK(r.out == "UNSAT\n");
  r = run({"solve", "-"}, kSat);
  CHECK(r.code == kExitSat);
  CHECK(r.out == "SAT\n");
  r = run({"--format", "json-lines", "solve", "-"}, kSat);
  CHECK(r.out == "{\"result\":\"SAT\"}\n");
}

TEST_CASE("count-roots") {
  auto r = run({"count-roots", "-"}, kEmpty);
  CHECK(r.code == 0);
  CHECK(r.out == "27\n");
  r = run({"--format", "csv", "count-roots", "-"}, kEmpty);
  CHECK(r.out == "count\n27\n");
  r = run({"--format", "json-lines", "count-roots", "-"}, kEmpty);
  CHECK(r.out == "{\"count\":27,\"n\":3,\"q\":3}\n");
}

TEST_CASE("sums") {
  auto r = run({"full-sum", "-"}, kSat);
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  r = run({"partial-sum", "--beta", "1", "-"}, kSat);
  CHECK(r.out == "pes 3 1 1\npoly 1\n1 2\n");
  r = run({"--format", "csv", "partial-sum", "--beta", "1", "-"}, kSat);
  CHECK(r.out == "coeff,e1\n1,2\n");
}

TEST_CASE("errors are one line with exit 1") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", "/nonexistent/file.pes"},
           {"bogus"},
           {},
           {"--kappa", "0.5", "solve", "-"},
           {"--format", "xml", "solve", "-"},
           {"partial-sum", "--beta", "9", "-"}}) {
    auto r = run(args, kSat);
    CAPTURE(r.err);
    CHECK(r.code == kExitError);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("fqsolve: error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
  auto r = run({"solve", "-"}, "pes 3 1 1\npoly 1\n0 1\n");
  CHECK(r.code == kExitError);
}

TEST_CASE("same argv and seed give the same bytes, for any thread count") {
  const std::string sys = "pes 3 5 3\npoly 2\n1 1 1 0 0 0\n2 0 0 1 0 0\npoly 2\n1 0 0 0 1 1\n1 0 0 0 0 0\npoly 1\n1 0 2 0 0 0\n";
  auto a = run({"--seed", "7", "--t", "9", "partial-sum", "--beta", "2", "-"}, sys);
  auto b = run({"--seed", "7", "--t", "9", "--threads", "3", "partial-sum", "--beta", "2", "-"}, sys);
  auto c = run({"--t", "9", "--threads", "1", "partial-sum", "--beta", "2", "--seed", "7", "-"}, sys);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("seed from the environment") {
  const std::string sys = "pes 2 4 2\npoly 2\n1 1 1 0 0\n1 0 0 1 0\npoly 1\n1 0 0 1 1\n";
  ::setenv("FQSOLVE_SEED", "11", 1);
  auto env = run({"--t", "3", "full-sum", "-"}, sys);
  ::unsetenv("FQSOLVE_SEED");
  auto flag = run({"--t", "3", "--seed", "11", "full-sum", "-"}, sys);
  CHECK(env.out == flag.out);
}

TEST_CASE("reduce-cnf") {
  auto r = run({"reduce-cnf", "--q", "2", "--delta", "1", "--parsimonious", "-", "-"}, "p cnf 1 1\n1 0\n");
  CHECK(r.code == 0);
  auto count = run({"count-roots", "-"}, r.out);
  CHECK(count.out == "1\n");
  const std::string path = "fqsolve_cli_test_out.pes";
  r = run({"reduce-cnf", "--q", "3", "--delta", "1", "-", path}, "p cnf 2 2\n1 2 0\n-1 0\n");
  CHECK(r.code == 0);
  CHECK(r.out == "q=3 vars1=4 vars2=3 blocks=1 variables=3 polynomials=2 degree_bound=12\n");
  CHECK(slurp(path).rfind("pes 3 3 2\n", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("exponent table") {
  auto r = run({"exponent-table", "--qmax", "2", "--dmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("q,d,kappa_star,zeta,theorem1_bound\n", 0) == 0);
  CHECK(r.out.find("\n2,2,") != std::string::npos);
  CHECK(r.out.find(",0.694242,") != std::string::npos);
}

TEST_CASE("selftest passes") {
  auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}

TEST_CASE("golden files") {
  CHECK(run({"--help"}).out == golden("help.txt"));
  for (const char* sub : {"solve", "count-roots", "full-sum", "partial-sum", "reduce-cnf", "exponent-table", "selftest"}) {
    CAPTURE(sub);
    auto r = run({sub, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out == golden(std::string("help_") + sub + ".txt"));
  }
  CHECK(run({"solve", "-"}, kUnsat).out == golden("solve_unsat.txt"));
  CHECK(run({"count-roots", "-"}, kEmpty).out == golden("count_roots_empty.txt"));
  CHECK(run({"exponent-table", "--qmax", "4", "--dmax", "3"}).out == golden("exponent_table.txt"));
}
