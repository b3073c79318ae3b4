/*
   Copyright 2026 The veronese-cas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "cli.hpp"

using veronese::ErrorKind;
using veronese::cli::dispatch;
using veronese::cli::exit_code;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = dispatch(args, out);
  return {code, out.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path golden_dir() { return VERONESE_TEST_GOLDEN_DIR; }

}  // namespace

TEST_CASE("cli examples") {
  auto r = run({"reduce", "--n", "3", "X0*X2"});
  CHECK(r.code == 0);
  CHECK(r.out == "X1^2\n");

  r = run({"triangulate", "--n", "2", "--dx", "y - x^3", "--dy", "3*x^2*y - 3*x^5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("conjugator: (x, y - x^3)") != std::string::npos);
  CHECK(r.out.find("normal form: y\n") != std::string::npos);

  r = run({"lift-automorphism", "--n", "3", "--in", (golden_dir() / "inputs" / "scaled.json").string()});
  CHECK(r.code == 1);
  CHECK(first_line(r.out) == "NeedsRootExtension: u=2, n=3");
}

TEST_CASE("cli text commands") {
  CHECK(run({"member", "--n", "2", "x^3*y"}).out == "true\n");
  CHECK(run({"express", "--n", "2", "x^4*y^2"}).out == "X0*X1^2\n");
  CHECK(run({"phi", "--n", "3", "X1"}).out == "x^2*y\n");
  CHECK(run({"compose", "--fx", "y", "--fy", "x", "--gx", "x - 2*y^3", "--gy", "y"}).out == "(y - 2*x^3, x)\n");
  CHECK(run({"invert", "--fx", "x + y^3", "--fy", "y"}).out == "(x - y^3, y)\n");
  CHECK(run({"exp", "--dx", "y", "--dy", "0"}).out == "(x + y, y)\n");
  CHECK(run({"basis", "--n", "3", "--m", "2"}).code == 0);
  const auto lifted = run({"lift-derivation", "--n", "2", "2*x*y", "y^2", "0"});
  CHECK(lifted.code == 0);
  CHECK(lifted.out == "dx: y\ndy: 0\n");
}

TEST_CASE("cli exit codes") {
  auto r = run({"express", "--n", "2", "x^2*y"});
  CHECK(r.code == 1);
  CHECK(first_line(r.out).rfind("NotInAlgebra: ", 0) == 0);

  r = run({"exp", "--dx", "x", "--dy", "0", "--cap", "10"});
  CHECK(r.code == 1);
  CHECK(first_line(r.out).rfind("NotLocallyNilpotent", 0) == 0);

  r = run({"decompose", "--fx", "x", "--fy", "x*y"});
  CHECK(r.code == 1);
  CHECK(first_line(r.out).rfind("NotAnAutomorphism", 0) == 0);

  r = run({"member", "--n", "2", "x + * y"});
  CHECK(r.code == 2);
  CHECK(first_line(r.out).rfind("ParseError", 0) == 0);

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"reduce", "--n", "3", "--strategy", "sideways", "X0"}).code == 2);
  CHECK(run({"lift-automorphism", "--n", "2", "--in", "/nonexistent/file.json"}).code == 2);
  CHECK(exit_code(ErrorKind::SchemaError) == 2);
  CHECK(exit_code(ErrorKind::NotGraded) == 1);
  CHECK(exit_code(ErrorKind::NeedsRootExtension) == 1);

  for (const auto& line : {run({"express", "--n", "2", "x^2*y"}).out, run({"decompose", "--fx", "x", "--fy", "x*y"}).out})
    CHECK(std::count(line.begin(), line.end(), '\n') == 1);
}

TEST_CASE("cli random output is reproducible") {
  for (const char* kind : {"automorphism", "derivation", "lnd", "word", "poly"}) {
    const std::vector<std::string> args{"random", "--n", "3", "--seed", "17", "--kind", kind, "--count", "4"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') >= 4);
  }
  CHECK(run({"random", "--seed", "1"}).out != run({"random", "--seed", "2"}).out);
}

TEST_CASE("selftest") {
  auto r = run({"selftest", "--golden-dir", golden_dir().string()});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failed") != std::string::npos);

  r = run({"selftest", "--golden-dir", golden_dir().string(), "--filter", "triangulation"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest: 0 passed") == std::string::npos);

  const auto tmp = std::filesystem::temp_directory_path() / "veronese-selftest-corrupt";
  std::filesystem::remove_all(tmp);
  std::filesystem::copy(golden_dir(), tmp, std::filesystem::copy_options::recursive);
  {
    std::ofstream f(tmp / "cli-reduce-example.json");
    f << R"({"args": ["reduce", "--n", "3", "X0*X2"], "exit": 0, "stdout": "X0*X2\n"})";
  }
  r = run({"selftest", "--golden-dir", tmp.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL cli-reduce-example") != std::string::npos);
  std::filesystem::remove_all(tmp);
}
