// Copyright 2026 The dicke-lattice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace dicke;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dicke");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = tools::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

double column(const std::string& row, int index) {
  std::istringstream in(row);
  std::string cell;
  for (int i = 0; i <= index; ++i) std::getline(in, cell, ',');
  return std::stod(cell);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("curve of the uniform bosonic state") {
  const auto r = invoke({"curve", "--statistics", "bose", "--state", "uniform", "--L", "100", "--kappa", "1,1",
                         "--tmax", "100", "--steps", "500"});
  REQUIRE(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 501);
  CHECK(rows[0] == "delta_t,normalized_peak");
  CHECK(rows[1] == "0.000000000000,1.000000000000");
  CHECK(column(rows[500], 0) == 100.0);
}

TEST_CASE("metallic curve tracks the uniform bosonic curve") {
  const auto bose = lines(invoke({"curve", "--statistics", "bose", "--state", "uniform"}).out);
  const auto fermi = invoke({"curve", "--statistics", "fermi", "--state", "metallic", "--L", "100", "--kappa", "1,1",
                             "--tmax", "100", "--steps", "500"});
  REQUIRE(fermi.status == 0);
  const auto rows = lines(fermi.out);
  REQUIRE(rows.size() == bose.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(column(rows[i], 0) == column(bose[i], 0));
    CHECK(std::abs(column(rows[i], 1) - column(bose[i], 1)) < 1e-2);
  }
}

TEST_CASE("adiabatic bosonic curve is flat") {
  const auto r = invoke({"adiabatic", "--statistics", "bose"});
  REQUIRE(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 501);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(rows[i].find(',') + 1) == "1.000000000000");
  CHECK(r.err.empty());
}

TEST_CASE("fermionic adiabatic curve is flagged approximate and equals the quench curve") {
  const auto a = invoke({"adiabatic", "--statistics", "fermi", "--steps", "50"});
  const auto q = invoke({"quench", "--statistics", "fermi", "--steps", "50"});
  REQUIRE(a.status == 0);
  REQUIRE(q.status == 0);
  CHECK(a.out == q.out);
  CHECK(a.err.find("approximation") != std::string::npos);
}

TEST_CASE("identical configurations give byte-identical files") {
  const auto dir = std::filesystem::temp_directory_path() / "dicke_cli_test";
  std::filesystem::create_directories(dir);
  const auto one = dir / "one.csv";
  const auto two = dir / "two.csv";
  const std::vector<std::string> base{"curve", "--statistics", "bose", "--state", "thermal:0.3", "--L", "40",
                                      "--kappa", "2,-1", "--tmax", "60", "--steps", "120", "--output"};
  auto first = base;
  first.push_back(one.string());
  auto second = base;
  second.push_back(two.string());
  REQUIRE(invoke(first).status == 0);
  REQUIRE(invoke(second).status == 0);
  const std::string a = slurp(one);
  CHECK(a.size() > 1000);
  CHECK(a == slurp(two));
  std::filesystem::remove_all(dir);
}

TEST_CASE("classical sequence output") {
  const auto r = invoke({"classical", "--statistics", "bose", "--state", "partial:5000,5000", "--alpha", "0.01",
                         "--steps", "11"});
  REQUIRE(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "delta_t,sigma_z,n_meta");
  CHECK(rows[1] == "0.000000000000,-5000.000000000000,0.000000000000");
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(column(rows[i], 2) >= 0.0);
    CHECK(column(rows[i], 2) <= 4 * 10000 * 0.01 * 0.01 / 4 + 1e-9);
  }
  const auto frozen = invoke({"classical", "--J", "0", "--alpha", "0.3", "--steps", "5"});
  REQUIRE(frozen.status == 0);
  for (const auto& row : lines(frozen.out)) {
    if (row[0] != 'd') CHECK(row.substr(row.rfind(',') + 1) == "0.000000000000");
  }
}

TEST_CASE("oracle subcommand rejects lattices other than 2 x 2") {
  const auto r = invoke({"oracle", "--L", "4"});
  CHECK(r.status == 1);
  CHECK(r.err.find("L = 2") != std::string::npos);
}

TEST_CASE("oracle subcommand writes a pass report") {
  const auto r = invoke({"oracle", "--tmax", "2", "--steps", "3"});
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() > 10);
  CHECK(rows[0] == "check,max_deviation,tolerance,status");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(rows[i].rfind(',') + 1) == "PASS");
}

TEST_CASE("usage errors exit with status 1") {
  CHECK(invoke({}).status == 1);
  CHECK(invoke({"curve", "--state", "plasma"}).status == 1);
  CHECK(invoke({"curve", "--state", "partial:1"}).status == 1);
  CHECK(invoke({"curve", "--state", "thermal:x"}).status == 1);
  CHECK(invoke({"curve", "--state", "uniform:3"}).status == 1);
  CHECK(invoke({"curve", "--kappa", "51,0"}).status == 1);
  CHECK(invoke({"curve", "--kappa", "1"}).status == 1);
  CHECK(invoke({"curve", "--L", "7"}).status == 1);
  CHECK(invoke({"curve", "--steps", "1"}).status == 1);
  CHECK(invoke({"curve", "--tmax", "-3"}).status == 1);
  CHECK(invoke({"curve", "--format", "json"}).status == 1);
  CHECK(invoke({"curve", "--statistics", "anyon"}).status == 1);
  CHECK(invoke({"curve", "--statistics", "fermi", "--state", "superfluid"}).status == 1);
  CHECK(invoke({"quench", "--state", "uniform"}).status == 1);
  CHECK(invoke({"classical", "--state", "mott"}).status == 1);
  CHECK(invoke({"curve", "--output", "/nonexistent/dir/x.csv", "--steps", "3"}).status == 1);
  const auto bad = invoke({"curve", "--state", "plasma"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("plasma") != std::string::npos);
}

TEST_CASE("help exits successfully") {
  const auto r = invoke({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("oracle") != std::string::npos);
}

TEST_CASE("parsers") {
  CHECK(tools::parse_mode("3,-2") == Mode{3, -2});
  CHECK_THROWS_AS(tools::parse_mode("3;2"), std::invalid_argument);
  const auto p = tools::parse_state("partial:10.5,89.5");
  CHECK(p.kind == StateKind::kPartial);
  CHECK(p.condensed == 10.5);
  CHECK(p.distributed == 89.5);
  CHECK(tools::parse_state("thermal:0.01").inverse_temperature == 0.01);
  CHECK(tools::parse_state("neel").kind == StateKind::kNeel);
}

TEST_CASE("programmatic run matches the command line") {
  tools::RunConfig config;
  config.subcommand = tools::Subcommand::kCurve;
  config.statistics = Statistics::kFermi;
  config.state = tools::parse_state("thermal:1");
  config.L = 20;
  config.kappa = {2, 2};
  config.tmax = 30.0;
  config.steps = 40;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(tools::run(config, out, err) == 0);
  const auto cli = invoke({"curve", "--statistics", "fermi", "--state", "thermal:1", "--L", "20", "--kappa", "2,2",
                           "--tmax", "30", "--steps", "40"});
  CHECK(out.str() == cli.out);

  config.L = 3;
  std::ostringstream none;
  CHECK(tools::run(config, none, err) == 1);
  CHECK(none.str().empty());
}
