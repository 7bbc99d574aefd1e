#include "doctest.h"

#include "fano/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fano::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli verify succeeds for both ranks") {
  const auto two = run({"verify", "--rho", "2"});
  CHECK(two.code == 0);
  CHECK(two.out.find("no differences") != std::string::npos);
  CHECK(run({"verify", "--rho", "3"}).code == 0);
  CHECK(run({"verify", "--rho", "2", "--primitive"}).code == 0);
}

TEST_CASE("cli verify reports a mismatching table") {
  const auto path = std::filesystem::temp_directory_path() / "fano_cli_bad_truth.json";
  {
    std::ofstream out(path);
    out << "[]";
  }
  setenv("FANO_GROUND_TRUTH", path.c_str(), 1);
  const auto r = run({"verify", "--rho", "3"});
  unsetenv("FANO_GROUND_TRUTH");
  std::filesystem::remove(path);
  CHECK(r.code == 1);
  CHECK(r.out.find("extra") != std::string::npos);
}

TEST_CASE("cli pair filter") {
  const auto r = run({"enumerate", "--rho", "2", "--pair", "E1,C2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == run({"enumerate", "--rho", "2", "--pair", "c2,e1", "--format", "csv"}).out);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  std::getline(lines, line);
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].rfind("2-27,2,38,", 0) == 0);
  CHECK(rows[1].rfind("2-31,2,46,", 0) == 0);

  const auto merged = run({"enumerate", "--rho", "2", "--pair", "E1,E3E4", "--format", "csv"});
  CHECK(merged.code == 0);
  CHECK(std::count(merged.out.begin(), merged.out.end(), '\n') == 3);
}

TEST_CASE("cli chern formulas") {
  const auto r = run({"chern", "antican-cube-p1-bundle", "2", "0", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "52\n");
  CHECK(run({"chern", "antican-cube-divisor-p2-bundle", "8", "2", "-10", "8", "-10", "8", "12"}).out == "14\n");
  CHECK(run({"chern", "conic-ksq-dot-pullback", "-3", "5"}).out == "7\n");
  CHECK(run({"chern", "genus-from-blowup", "16", "64", "4", "7"}).out == "5\n");
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--rho", "2", "--bogus"}).code == 2);
  CHECK(run({"chern", "no-such-formula", "1"}).code == 2);
  CHECK(run({"chern", "xi-square"}).code == 2);
  CHECK(run({"chern", "xi-square", "x"}).code == 2);
  CHECK(run({"enumerate", "--rho", "2", "--format", "xml"}).code == 2);
  CHECK(run({"enumerate", "--rho", "2", "--pair", "E1"}).code == 2);
  CHECK(run({"enumerate", "--rho", "4"}).code == 2);
  CHECK(run({"chern", "genus-from-blowup", "15", "64", "4", "7"}).code == 2);
}

TEST_CASE("cli output is deterministic and can go to a file") {
  const auto a = run({"emit", "--rho", "2", "--format", "json", "--computed"});
  const auto b = run({"emit", "--rho", "2", "--format", "json", "--computed"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto path = std::filesystem::temp_directory_path() / "fano_cli_emit.md";
  CHECK(run({"emit", "--rho", "3", "--format", "markdown", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::filesystem::remove(path);
  const std::string written = text.str();
  CHECK(std::count(written.begin(), written.end(), '\n') == 6);
}

TEST_CASE("cli default format is markdown") {
  const auto r = run({"enumerate", "--rho", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("| No. |", 0) == 0);
}
