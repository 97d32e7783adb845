// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "qgeom/qgeom.hpp"

namespace qgeom::cli {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json parse(const CliRun& r) { return Json::parse(r.out); }

TEST(Cli, JsonEnvelope) {
  const CliRun r = invoke({"classify", "--case", "C4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "results", "checks", "version"}));
  EXPECT_EQ(j["results"]["case"], "C4");
  EXPECT_EQ(j["config"]["command"], "classify");
  EXPECT_EQ(j["version"], kVersion);
}

TEST(Cli, SeventeenSignificantDigits) {
  const CliRun r = invoke({"spectrum"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1.1661903789690602"), std::string::npos);
  EXPECT_NE(r.out.find("0.80000000000000004"), std::string::npos);
}

TEST(Cli, PeriodicitySuiteForUniformCoefficients) {
  const CliRun r = invoke({"verify", "--suite", "periodicity", "--eta", "0.5,0.5,0.5,0.5"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse(r);
  EXPECT_EQ(j["results"]["case"], "C7");
  EXPECT_EQ(j["results"]["failed"], 0);
  EXPECT_GT(j["results"]["passed"].get<int>(), 0);
}

TEST(Cli, UniformCurvatureIsFourteen) {
  const CliRun r = invoke({"curvature", "--case", "C7", "--eta", "0.5,0.5,0.5,0.5", "--point",
                        "0.7,0.3,0.2,0.4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(parse(r)["results"]["scalar"].get<double>(), 14.0, 1e-2);
}

TEST(Cli, CircleConcurrenceCsv) {
  const CliRun r = invoke({"concurrence", "--case", "C2", "--grid", "phi=0:6.2832:101", "--format",
                        "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "phi,concurrence,closed_form");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("0,", 0), 0u) << line;
  EXPECT_NEAR(std::stod(line.substr(2)), 1.0, 1e-12) << line;
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 101);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"verify", "--suite", "metric", "--seed", "4"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, InvalidConfigExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"nope"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"metric", "--gamma", "0"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"metric", "--format", "xml"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"metric", "--case", "C3", "--eta", "1,0,0,0"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"metric", "--point", "1,2"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"metric", "--eta", "1,2,3"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"concurrence", "--grid", "phi=0:1"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"verify", "--suite", "everything"}).code, kExitInvalidConfig);
}

TEST(Cli, NumericalFailureExitCode) {
  const CliRun r = invoke({"perturb", "--point", "0.7,0.3,0.2,1.1", "--beta", "1e-3"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.err.find("resonance"), std::string::npos);
  EXPECT_EQ(invoke({"spectrum", "--b", "0", "--c", "0.4,0.4,0"}).code, kExitNumerical);
}

TEST(Cli, FailedHardCheckExitCode) {
  const CliRun r = invoke({"verify", "--suite", "tables", "--case", "C5"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_EQ(parse(r)["results"]["failed"], 8);
}

TEST(Cli, SoftChecksDoNotFail) {
  const CliRun r = invoke({"metric", "--case", "C4"});
  EXPECT_EQ(r.code, kExitOk);
  bool found = false;
  const Json j = parse(r);
  for (const auto& c : j["checks"]) {
    if (c["name"] == "diagonal_form_agreement") {
      found = true;
      EXPECT_FALSE(c["passed"].get<bool>());
      EXPECT_FALSE(c["hard"].get<bool>());
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, EtaNormalizationWarning) {
  const CliRun r = invoke({"classify", "--eta", "1,1j,0.5@1,-1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(parse(r)["config"]["warnings"].size(), 1u);
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "qgeom_cli_test.csv";
  const CliRun r = invoke({"perturb", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "component,analytic,numeric,abs_error,rel_error,agree");
  std::filesystem::remove(path);
}

TEST(Cli, EveryCommandRunsWithDefaults) {
  for (const char* cmd :
       {"spectrum", "classify", "evolve", "metric", "curvature", "perturb", "concurrence"}) {
    const CliRun r = invoke({cmd});
    EXPECT_EQ(r.code, kExitOk) << cmd << ": " << r.err;
    EXPECT_NO_THROW(parse(r)) << cmd;
  }
}

TEST(Cli, SpectrumPerturbationColumn) {
  const CliRun r = invoke({"spectrum", "--beta", "1e-3", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "label,energy,residual,numeric_index,overlap,perturbation_residual");
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex("0.5-0.25j"), Complex(0.5, -0.25));
  EXPECT_EQ(parse_complex("-2j"), Complex(0.0, -2.0));
  EXPECT_EQ(parse_complex("1e-3+2e-3j"), Complex(1e-3, 2e-3));
  EXPECT_LT(std::abs(parse_complex("2@0.5") - std::polar(2.0, 0.5)), 1e-15);
  EXPECT_THROW(parse_complex("abc"), Error);
}

TEST(ParseGrid, Axes) {
  const auto g = parse_grid("omega=0:1:5,phi=-1:1:3");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].coord, Coord::omega);
  EXPECT_EQ(g[0].count, 5);
  EXPECT_DOUBLE_EQ(g[1].at(2), 1.0);
  EXPECT_THROW(parse_grid("omega=0:1:0"), Error);
  EXPECT_THROW(parse_grid("zeta=0:1:2"), Error);
}

}  // namespace
}  // namespace qgeom::cli
