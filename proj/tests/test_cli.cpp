#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s) {
  int lines = 0;
  for (char c : s)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  doctest::Context ctx;
  int consumed = argc;
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_binary = argv[argc - 1];
    consumed = argc - 1;
  }
  ctx.applyCommandLine(consumed, argv);
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <path to cccg>\n");
    return 1;
  }
  return ctx.run();
}

TEST_CASE("family describe") {
  RunResult r = run("family --family dihedral:5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"order\": 10") != std::string::npos);
  CHECK(r.out.find("\"center_order\": 1") != std::string::npos);
}

TEST_CASE("report spot values and exit codes") {
  RunResult r = run("report --family dihedral:5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3,1,2,1,3,2") != std::string::npos);  // V,E,M1,M2,lhs,rhs
  CHECK(r.out.find("strict") != std::string::npos);

  r = run("report --family dihedral:6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("equality") != std::string::npos);

  r = run("report --graph star:5+K:3 --format csv");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("9,8,42,37,333,336") != std::string::npos);
  CHECK(r.out.find("violated") != std::string::npos);

  r = run("report --decomposition 2*K:4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("8,12,72,108") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("report").exit_code == 1);  // no input selected
  CHECK(run("report --decomposition K1,5-star-union-K3").exit_code == 1);
  CHECK(run("report --graph P:4").exit_code == 1);
  CHECK(run("family --family dihedral:2").exit_code == 1);
  CHECK(run("scan --family nonsense --m 3..4").exit_code == 1);
  CHECK(run("nope").exit_code == 1);
}

TEST_CASE("verify infers the quotient case") {
  RunResult r = run("verify --aux frobenius:7,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"structure_match\": true") != std::string::npos);
  CHECK(r.out.find("2K2") != std::string::npos);

  r = run("verify --family v8m:2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3K2") != std::string::npos);
}

TEST_CASE("scan dihedral sweep") {
  RunResult r = run("scan --family dihedral --m 3..40 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 39);  // header + 38 rows
  CHECK(r.out.find("violated") == std::string::npos);
}

TEST_CASE("scan output is byte-stable") {
  RunResult a = run("scan --family dicyclic --m 2..12 --format csv --jobs 4");
  RunResult b = run("scan --family dicyclic --m 2..12 --format csv --jobs 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("gpmn scan reports the recorded mismatch") {
  RunResult r = run("scan --family gpmn --p 3..3 --m 1..1 --n 2..2 --format csv");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("false") != std::string::npos);
}

TEST_CASE("props") {
  RunResult r = run("props --aux frobenius:7,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5/21") != std::string::npos);
  CHECK(r.out.find("\"kernel_order\": 7") != std::string::npos);

  r = run("props --family dihedral:4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5/8") != std::string::npos);
  CHECK(r.out.find("null") != std::string::npos);  // not Frobenius
}

TEST_CASE("ccc graph export") {
  RunResult r = run("ccc --family dihedral:5 --format dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("graph") != std::string::npos);
  CHECK(r.out == run("ccc --family dihedral:5 --format dot").out);
}
