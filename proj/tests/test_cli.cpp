// Copyright 2026 The qident Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qident/cli.hpp"

namespace qident {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(CliTest, ReproduceSingleExamples) {
  for (const char* ex : {"example1", "prop1", "trine", "n-formula"}) {
    const CliRun r = invoke({"reproduce", ex});
    EXPECT_EQ(r.code, 0) << ex << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos) << ex;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << ex;
  }
}

TEST(CliTest, ReproduceJson) {
  const CliRun r = invoke({"reproduce", "trine", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_FALSE(j.empty());
  for (const auto& row : j) EXPECT_TRUE(row.at("pass").get<bool>());
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({"reproduce", "bogus"}).code, 2);
  EXPECT_EQ(invoke({"simulate"}).code, 2);
  EXPECT_EQ(invoke({"simulate", "--family", "no-such-family"}).code, 2);
  EXPECT_EQ(invoke({"simulate", "--family", "eq8", "--eps", "0.5"}).code, 2);
  EXPECT_EQ(invoke({"optimize", "bogus"}).code, 2);
  EXPECT_EQ(invoke({"optimize", "eps-d3", "--resolution", "0"}).code, 2);
  EXPECT_EQ(invoke({"certify", "--d", "2", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliTest, MissingStrategyFileIsFailure) {
  EXPECT_EQ(invoke({"simulate", "--strategy", "/nonexistent/strategy.json"}).code, 1);
}

TEST(CliTest, SimulateTrine) {
  const CliRun r = invoke({"simulate", "--family", "trine", "--rounds", "100000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  std::uint64_t total = 0;
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 10u);
    EXPECT_EQ(row[2], "trine");
    EXPECT_EQ(row[6], "0");
    total += std::stoull(row[4]);
  }
  EXPECT_EQ(total, 100000u);
  EXPECT_NE(r.err.find("wins=yes"), std::string::npos);
}

TEST(CliTest, SimulateFloorFamilyMatchesPrediction) {
  const CliRun r = invoke({"simulate", "--family", "eq8", "--eps", "0.1", "--rounds", "300000", "--seed", "11"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  const auto predicted = eps_floor_d3(0.1).strategy();
  const auto report = success_report(GameSpec::make(3, 2), predicted);
  for (std::size_t j = 0; j < 3; ++j) {
    const double trials = std::stod(rows[j][4]);
    const double rate = std::stod(rows[j][8]);
    const double p = report.per_event[j];
    const double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / trials);
    EXPECT_LE(std::abs(rate - p), 3 * sigma + 1e-9) << "event " << j;
    EXPECT_EQ(rows[j][6], "0");
  }
  EXPECT_NEAR(report.per_event[0], 0.1, 1e-9);
  EXPECT_NEAR(report.per_event[1], 1.0, 1e-9);
  EXPECT_NEAR(report.per_event[2], 0.5641, 1e-4);
}

TEST(CliTest, SimulateIsDeterministicAcrossJobs) {
  const CliRun a = invoke({"simulate", "--family", "mub-d4", "--rounds", "200000", "--seed", "3"});
  const CliRun b = invoke({"simulate", "--family", "mub-d4", "--rounds", "200000", "--seed", "3", "--jobs", "4"});
  const CliRun c = invoke({"simulate", "--family", "mub-d4", "--rounds", "200000", "--seed", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(CliTest, SimulateJsonToFile) {
  const auto path = std::filesystem::temp_directory_path() / "qident_cli_stats.json";
  std::filesystem::remove(path);
  const CliRun r = invoke({"simulate", "--family", "trine-fixed", "--rounds", "5000", "--format", "json",
                     "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j.at("rounds"), 5000);
  EXPECT_EQ(j.at("conclusive_wrong"), 0);
  EXPECT_EQ(j.at("strategy_name"), "trine-fixed");
  std::filesystem::remove(path);
}

TEST(CliTest, SimulateStrategyFiles) {
  const std::string dir = QIDENT_SAMPLES_DIR;
  const CliRun q = invoke({"simulate", "--strategy", dir + "/basis_plus.json", "--rounds", "20000"});
  EXPECT_EQ(q.code, 0) << q.err;
  EXPECT_NE(q.err.find("wins=yes"), std::string::npos);
  const CliRun c = invoke({"simulate", "--strategy", dir + "/classical_d3.json", "--rounds", "20000"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.err.find("wins=no"), std::string::npos);
  const auto rows = csv_rows(c.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0][5], "0");  // event {0,1} shares one message and always abstains
}

TEST(CliTest, OptimizeObjectives) {
  const CliRun d3 = invoke({"optimize", "eps-d3", "--resolution", "0.01"});
  ASSERT_EQ(d3.code, 0) << d3.err;
  EXPECT_NEAR(json::parse(d3.out).at("best_value").get<double>(), 0.5, 1e-3);

  const CliRun sup = invoke({"optimize", "prop3-sup", "--resolution", "0.01"});
  ASSERT_EQ(sup.code, 0) << sup.err;
  EXPECT_NEAR(json::parse(sup.out).at("best_value").get<double>(), 2.0 / 3.0, 1e-3);

  const CliRun d4 = invoke({"optimize", "eps-d4"});
  ASSERT_EQ(d4.code, 0) << d4.err;
  EXPECT_NEAR(json::parse(d4.out).at("best_value").get<double>(), 1.0 - 1.0 / std::sqrt(2.0), 1e-3);
}

TEST(CliTest, Certify) {
  const CliRun r = invoke({"certify", "--d", "4", "--n", "3", "--raw"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("winning_found"), false);
  EXPECT_EQ(j.at("raw_decoders"), true);
  EXPECT_FALSE(j.contains("classical_average"));
  const json k = json::parse(invoke({"certify", "--d", "5", "--n", "2"}).out);
  EXPECT_EQ(k.at("winning_found"), false);
  EXPECT_TRUE(k.contains("classical_average"));
}

TEST(CliTest, ReproduceAll) {
  const CliRun r = invoke({"reproduce", "all"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace qident
