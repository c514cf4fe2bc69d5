// Copyright 2026 The auctionlab Authors
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


#include "auctionlab/experiments.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <string>

#include <gtest/gtest.h>

namespace auctionlab {
namespace {

const std::string kConfigDir = AUCTIONLAB_CONFIG_DIR;

ExperimentConfig SmallIncomplete() {
  ExperimentConfig c = LoadConfig(kConfigDir + "/bandits_three_bidders.json");
  c.scale.iterations = 20000;
  c.scale.repetitions = 2;
  c.scale.window = 1000;
  c.scale.end_phase = 5000;
  c.scale.strategy_window = 5000;
  c.sweep.utilities = {UtilityModel::QL()};
  c.sweep.payments = {PaymentRule::kFirstPrice};
  c.sweep.learners = {"Exp3", "ε-Greedy"};
  return c;
}

std::string ReadAll(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

TEST(ExpandCellsTest, ThreeBidderBanditGrid) {
  const auto cells = ExpandCells(LoadConfig(kConfigDir + "/bandits_three_bidders.json"));
  ASSERT_EQ(cells.size(), 3u * 2u * 4u);
  EXPECT_EQ(cells[0].label, "QL-FP-N3-Exp3");
  EXPECT_EQ(cells[0].spec.n_players, 3);
  EXPECT_EQ(cells[0].learners.size(), 3u);
  EXPECT_DOUBLE_EQ(cells[0].learners[0].learning_rate, 0.01);
  for (const auto& c : cells) {
    if (c.spec.utility(0).kind == UtilityKind::kROI && c.learners[0].name == "Exp3") {
      EXPECT_DOUBLE_EQ(c.learners[0].learning_rate, 0.0005);
    }
  }
  // Labels are unique because they name output directories.
  std::set<std::string> labels;
  for (const auto& c : cells) labels.insert(c.label);
  EXPECT_EQ(labels.size(), cells.size());
}

TEST(ExpandCellsTest, RevenueMatrixUsesOrderedPairs) {
  const ExperimentConfig c = LoadConfig(kConfigDir + "/revenue_matrix.json");
  const auto cells = ExpandCells(c);
  const std::size_t k = c.sweep.utilities.size();
  const std::size_t ns = std::max<std::size_t>(1, c.sweep.n_players.size());
  EXPECT_EQ(cells.size(), k * k * 2 * ns);
  for (const auto& cell : cells) {
    for (int p = 2; p < cell.spec.n_players; ++p) {
      EXPECT_EQ(cell.spec.utility(p), cell.spec.utility(1));
    }
  }
}

TEST(ExpandCellsTest, SnapReserveAndBudgetMargin) {
  const auto closed_forms = ExpandCells(LoadConfig(kConfigDir + "/soda_closed_forms.json"));
  ASSERT_FALSE(closed_forms.empty());
  EXPECT_NEAR(closed_forms[0].spec.reserve, 3.0 / 63, 1e-15);
  EXPECT_DOUBLE_EQ(closed_forms[0].analytic_reserve, 0.05);

  const auto budget = ExpandCells(LoadConfig(kConfigDir + "/robustness_budget.json"));
  ASSERT_FALSE(budget.empty());
  for (const auto& c : budget) {
    const UtilityModel& u = c.spec.utility(0);
    ASSERT_TRUE(u.has_barrier());
    EXPECT_NEAR(c.spec.actions.max_bid(), u.budget - 0.01, 1e-12) << c.label;
  }
}

TEST(AnalyticForTest, KnownCells) {
  for (const auto& c : ExpandCells(LoadConfig(kConfigDir + "/soda_closed_forms.json"))) {
    const auto a = AnalyticFor(c);
    ASSERT_TRUE(a.has_value()) << c.label;
    const bool fp = c.spec.payment == PaymentRule::kFirstPrice;
    const bool roi = c.spec.utility(0).kind == UtilityKind::kROI;
    EXPECT_EQ(a->kind, !fp ? AnalyticKind::kTruthful
                           : roi ? AnalyticKind::kROIFirstPrice : AnalyticKind::kQLFirstPrice);
    EXPECT_EQ(a->n_players, c.spec.n_players);
  }
  // No closed form on the grid-point prior or for ROSB.
  for (const auto& c : ExpandCells(LoadConfig(kConfigDir + "/soda_three_bidders.json"))) {
    EXPECT_FALSE(AnalyticFor(c).has_value()) << c.label;
  }
}

TEST(SimulationTest, DeterministicAndThreadIndependent) {
  ExperimentConfig c = SmallIncomplete();
  c.threads = 1;
  const auto a = RunSimulations(c);
  c.threads = 3;
  const auto b = RunSimulations(c);
  ASSERT_EQ(a.cells.size(), 2u);
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    ASSERT_EQ(a.cells[i].runs.size(), 2u);
    for (std::size_t r = 0; r < 2; ++r) {
      EXPECT_EQ(a.cells[i].runs[r].seed, b.cells[i].runs[r].seed);
      EXPECT_EQ(a.cells[i].runs[r].mean_revenue, b.cells[i].runs[r].mean_revenue);
      EXPECT_EQ(a.cells[i].runs[r].median_bids, b.cells[i].runs[r].median_bids);
    }
    EXPECT_NE(a.cells[i].runs[0].mean_revenue, a.cells[i].runs[1].mean_revenue);
  }
  const auto& run = a.cells[0].runs[0];
  EXPECT_EQ(run.mean_revenue.size(), 20u);
  EXPECT_EQ(run.median_bids.size(), 3u);
  EXPECT_EQ(run.losses.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    std::int64_t total = 0;
    for (int i = 0; i < 21; ++i) total += run.counts[k].RowTotal(i);
    EXPECT_EQ(total, 5000);
  }
}

TEST(SimulationTest, OutputFilesAreByteIdenticalAcrossReruns) {
  ExperimentConfig c = SmallIncomplete();
  const auto root = std::filesystem::temp_directory_path() / "auctionlab_exp_test";
  std::filesystem::remove_all(root);
  RunExperiment(c, root / "a");
  c.threads = 2;
  RunExperiment(c, root / "b");
  for (const char* f : {"summary.csv", "windows.csv", "report.csv", "config.json"}) {
    ASSERT_TRUE(std::filesystem::exists(root / "a" / f)) << f;
    if (std::string(f) != "config.json") {
      EXPECT_EQ(ReadAll(root / "a" / f), ReadAll(root / "b" / f)) << f;
    }
  }
  const auto strategy = root / "a" / "cells" / "QL-FP-N3-Exp3" / "strategy_0.txt";
  ASSERT_TRUE(std::filesystem::exists(strategy));
  const StrategyFile sf = LoadStrategy(strategy.string());
  EXPECT_EQ(sf.strategy.rows(), 21);
  EXPECT_EQ(ReadAll(strategy),
            ReadAll(root / "b" / "cells" / "QL-FP-N3-Exp3" / "strategy_0.txt"));
  // The copied config reproduces the run.
  const ExperimentConfig copy = LoadConfig((root / "a" / "config.json").string());
  EXPECT_EQ(copy.scale, c.scale);
  std::filesystem::remove_all(root);
}

TEST(SodaExperimentTest, SingleCellOutputs) {
  ExperimentConfig c = LoadConfig(kConfigDir + "/soda_closed_forms.json");
  c.sweep.n_players = {2};
  c.sweep.payments = {PaymentRule::kSecondPrice};
  c.sweep.utilities = {UtilityModel::QL()};
  c.scale.samples = 1 << 12;
  c.scale.runs = 2;
  const auto root = std::filesystem::temp_directory_path() / "auctionlab_soda_test";
  std::filesystem::remove_all(root);
  RunExperiment(c, root);
  for (const char* f : {"summary.csv", "windows.csv", "report.csv", "strategy_0.txt",
                        "strategy_1.txt"}) {
    EXPECT_TRUE(std::filesystem::exists(root / f)) << f;
  }
  const std::string report = ReadAll(root / "report.csv");
  EXPECT_NE(report.find("QL-SP-N2"), std::string::npos);
  std::filesystem::remove_all(root);
}

}  // namespace
}  // namespace auctionlab
