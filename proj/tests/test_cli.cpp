#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "lambertw/branch.hpp"
#include "lambertw/detail/format.hpp"
#include "lambertw/lambert_w.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LAMBERTW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    const std::size_t end = s.find('\n', start);
    if (end == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("cli eval prints shortest round-trip values") {
  auto r = run_cli("eval --branch 0 1");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out) == "0.5671432904097838");

  r = run_cli("eval --branch 0 0");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out) == "0");

  r = run_cli("eval --branch -1 0");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out) == "-inf");
}

TEST_CASE("cli eval output parses back to the library value exactly") {
  for (const std::string x : {"0.25", "3.5", "100000", "-0.2"}) {
    const auto r = run_cli("eval --branch 0 " + x);
    REQUIRE(r.exit_code == 0);
    const double parsed = std::strtod(r.out.c_str(), nullptr);
    CHECK(parsed == lambertw::lambert_w(lambertw::Branch::principal, std::stod(x)).value);
  }
}

TEST_CASE("cli eval exit codes") {
  CHECK(run_cli("eval --branch 2 1").exit_code == 1);    // usage: bad branch
  CHECK(run_cli("eval --branch 0 -1").exit_code == 2);   // domain error
  CHECK(run_cli("eval").exit_code == 1);                 // missing argument
  CHECK(run_cli("bogus-subcommand").exit_code == 1);

  const auto r = run_cli("eval --branch 0 --nan-on-domain-error -- -1");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out) == "nan");
}

TEST_CASE("cli sweep emits a deterministic CSV") {
  const std::string args =
      "sweep --branch 0 --evaluator piecewise --grid linear --lo -0.3 --hi 0.3 --n 11";
  const auto first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  const auto rows = lines(first.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "x,approx,reference,delta");
  CHECK(rows[1].substr(0, 5) == "-0.3,");

  const auto second = run_cli(args);
  CHECK(second.out == first.out);  // byte-identical across runs
}

TEST_CASE("cli sweep renders per-point failures as nan rows") {
  const auto r = run_cli(
      "sweep --branch -1 --evaluator full --grid linear --lo -0.2 --hi 0.05 --n 6");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows.back().find("nan") != std::string::npos);
}

TEST_CASE("cli sweep usage errors") {
  CHECK(run_cli("sweep --branch 0 --evaluator nope --grid linear --lo 0 --hi 1 --n 4")
            .exit_code == 1);
  CHECK(run_cli("sweep --branch 0 --evaluator full --grid diag --lo 0 --hi 1 --n 4")
            .exit_code == 1);
  CHECK(run_cli("sweep --branch 0 --evaluator full --grid linear --lo 0 --hi 1 --n 1")
            .exit_code == 1);
  CHECK(run_cli("sweep --branch 0 --evaluator full --grid log --lo -1 --hi 1 --n 4")
            .exit_code == 1);
}

TEST_CASE("cli sweep writes the same bytes to a file") {
  const std::string args =
      "sweep --branch 0 --evaluator q01 --grid linear --lo -0.2 --hi 0.2 --n 9";
  const auto to_stdout = run_cli(args);
  REQUIRE(to_stdout.exit_code == 0);

  const std::string path = "/tmp/lambertw_sweep_test.csv";
  REQUIRE(run_cli(args + " --output " + path).exit_code == 0);
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string file_bytes;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), f)) > 0) file_bytes.append(buf, n);
  fclose(f);
  std::remove(path.c_str());
  CHECK(file_bytes == to_stdout.out);
}

TEST_CASE("cli order reports the convergence exponents") {
  auto parse_exponent = [](const std::string& out) {
    const auto rows = lines(out);
    REQUIRE(!rows.empty());
    const std::string& last = rows.back();
    REQUIRE(last.substr(0, 9) == "exponent,");
    return std::stod(last.substr(9));
  };
  const auto fritsch = run_cli("order --method fritsch --x 1");
  REQUIRE(fritsch.exit_code == 0);
  const double fritsch_exp = parse_exponent(fritsch.out);
  CHECK(fritsch_exp >= 3.6);
  CHECK(fritsch_exp <= 4.4);

  const auto halley = run_cli("order --method halley --x 1");
  REQUIRE(halley.exit_code == 0);
  const double halley_exp = parse_exponent(halley.out);
  CHECK(halley_exp >= 2.7);
  CHECK(halley_exp <= 3.3);

  CHECK(run_cli("order --method newton --x 1").exit_code == 1);
}

TEST_CASE("cli gh-inverse") {
  auto r = run_cli("gh-inverse --a 1 --xmax 5");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out) == "5 5");

  r = run_cli("gh-inverse --a 0.5 --xmax 5 --verify");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  double x1 = 0, x2 = 0, g1 = 0, g2 = 0;
  CHECK(std::sscanf(rows[0].c_str(), "%lf %lf", &x1, &x2) == 2);
  CHECK(std::sscanf(rows[1].c_str(), "%lf %lf", &g1, &g2) == 2);
  CHECK(x1 < 5.0);
  CHECK(x2 > 5.0);
  CHECK(g1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g2 == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(run_cli("gh-inverse --a 1.5 --xmax 5").exit_code == 2);
  CHECK(run_cli("gh-inverse --xmax 5").exit_code == 1);
}

TEST_CASE("cli gh forward, reduced and full") {
  auto r = run_cli("gh 5 --xmax 5");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out) == "1");

  const auto reduced = run_cli("gh 1 --xmax 5");
  const auto full = run_cli("gh 1 --xmax 5 --x0 0 --lambda 1");
  CHECK(reduced.exit_code == 0);
  CHECK(full.exit_code == 0);
  CHECK(reduced.out == full.out);

  CHECK(run_cli("gh 1 --xmax 5 --x0 0").exit_code == 1);  // incomplete full spec
}

TEST_CASE("cli moyal and moyal-inverse") {
  const std::string peak = lambertw::detail::format_double(std::exp(-0.5));
  auto r = run_cli("moyal-inverse --y " + peak);
  CHECK(r.exit_code == 0);
  CHECK(strip(r.out) == "0 0");

  r = run_cli("moyal-inverse --y 0.3 --verify");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  double xp = 0, xm = 0, yp = 0, ym = 0;
  CHECK(std::sscanf(rows[0].c_str(), "%lf %lf", &xp, &xm) == 2);
  CHECK(std::sscanf(rows[1].c_str(), "%lf %lf", &yp, &ym) == 2);
  CHECK(xp > 0.0);
  CHECK(xm < 0.0);
  CHECK(yp == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(ym == doctest::Approx(0.3).epsilon(1e-12));

  r = run_cli("moyal 0");
  CHECK(r.exit_code == 0);
  CHECK(std::strtod(r.out.c_str(), nullptr) == std::exp(-0.5));

  CHECK(run_cli("moyal-inverse --y 0.7").exit_code == 2);
  CHECK(run_cli("moyal-inverse --y 0").exit_code == 2);
}
