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


#include "auctionlab/grid.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

namespace auctionlab {
namespace {

TEST(GridTest, EquidistantEndpoints) {
  const auto v = ValueGrid::Equidistant(21);
  ASSERT_EQ(v.size(), 21);
  EXPECT_DOUBLE_EQ(v[0], 0.0);
  EXPECT_DOUBLE_EQ(v[1], 0.05);
  EXPECT_DOUBLE_EQ(v[20], 1.0);
  const auto a = ActionGrid::Equidistant(19, 0.05, 0.95);
  EXPECT_DOUBLE_EQ(a[0], 0.05);
  EXPECT_DOUBLE_EQ(a.max_bid(), 0.95);
  EXPECT_NEAR(a[9], 0.5, 1e-15);
}

TEST(GridTest, SinglePointSitsAtUpperEnd) {
  const auto v = ValueGrid::Equidistant(1);
  ASSERT_EQ(v.size(), 1);
  EXPECT_EQ(v[0], 1.0);
}

TEST(GridTest, RejectsUnsortedOrOutOfRange) {
  EXPECT_THROW(ValueGrid({0.5, 0.2}), ValidationError);
  EXPECT_THROW(ValueGrid({0.5, 0.5}), ValidationError);
  EXPECT_THROW(ValueGrid({0.5, 1.5}), ValidationError);
  EXPECT_THROW(ActionGrid({-0.1, 0.5}), ValidationError);
}

TEST(GridTest, NearestTiesGoToLowerPoint) {
  const ValueGrid v({0.0, 0.5, 1.0});
  EXPECT_EQ(v.Nearest(0.25), 0);
  EXPECT_EQ(v.Nearest(0.2501), 1);
  EXPECT_EQ(v.Nearest(0.75), 1);
  EXPECT_EQ(v.Nearest(-3.0), 0);
  EXPECT_EQ(v.Nearest(3.0), 2);
}

TEST(GridTest, IndexOfAndReserve) {
  const auto a = ActionGrid::Equidistant(21, 0.0, 1.0);
  EXPECT_EQ(a.IndexOf(0.35), 7);
  EXPECT_EQ(a.IndexOf(0.351), -1);
  EXPECT_EQ(a.FirstAtLeast(0.05), 1);
  EXPECT_EQ(a.FirstAtLeast(0.051), 2);
  EXPECT_EQ(a.FirstAtLeast(0.0), 0);
  EXPECT_EQ(a.FirstAtLeast(1.5), 21);
}

TEST(PriorTest, UniformCellMasses) {
  // Interior cells have width 1/63, the two boundary cells half of that.
  const auto grid = ValueGrid::Equidistant(64);
  const auto p = BuildPrior({PriorKind::kUniform}, grid);
  EXPECT_NEAR(p[0], 0.5 / 63, 1e-15);
  EXPECT_NEAR(p[63], 0.5 / 63, 1e-15);
  for (int i = 1; i < 63; ++i) EXPECT_NEAR(p[i], 1.0 / 63, 1e-15);
}

TEST(PriorTest, UniformPointsIsFlat) {
  const auto p = BuildPrior({PriorKind::kUniformPoints}, ValueGrid::Equidistant(21));
  for (int i = 0; i < 21; ++i) EXPECT_DOUBLE_EQ(p[i], 1.0 / 21);
}

TEST(PriorTest, TruncatedGaussianMatchesQuadrature) {
  const PriorSpec spec{PriorKind::kTruncatedGaussian, 0.5, 0.3};
  const auto grid = ValueGrid::Equidistant(11);
  const auto p = BuildPrior(spec, grid);
  // Independent oracle: Simpson integration of the density over each cell.
  auto pdf = [](double x) { return std::exp(-0.5 * std::pow((x - 0.5) / 0.3, 2)); };
  auto simpson = [&](double a, double b) {
    const int k = 2000;
    const double h = (b - a) / k;
    double s = pdf(a) + pdf(b);
    for (int i = 1; i < k; ++i) s += (i % 2 ? 4.0 : 2.0) * pdf(a + i * h);
    return s * h / 3.0;
  };
  std::vector<double> w;
  double total = 0.0;
  for (int i = 0; i < 11; ++i) {
    const double lo = i == 0 ? 0.0 : grid[i] - 0.05;
    const double hi = i == 10 ? 1.0 : grid[i] + 0.05;
    w.push_back(simpson(lo, hi));
    total += w.back();
  }
  for (int i = 0; i < 11; ++i) EXPECT_NEAR(p[i], w[i] / total, 1e-10);
}

TEST(PriorTest, WeightsSumToOneAndSampleMatches) {
  const auto p = BuildPrior({PriorKind::kTruncatedGaussian, 0.3, 0.2},
                            ValueGrid::Equidistant(9));
  double s = 0.0;
  for (double w : p.weights()) s += w;
  EXPECT_NEAR(s, 1.0, 1e-12);
  Rng rng(5);
  std::vector<int> counts(9, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++counts[p.Sample(rng)];
  for (int i = 0; i < 9; ++i) {
    const double se = std::sqrt(p[i] * (1 - p[i]) / n);
    EXPECT_NEAR(counts[i] / double(n), p[i], 5 * se + 1e-12);
  }
}

TEST(PriorTest, RejectsBadWeights) {
  EXPECT_THROW(DiscretePrior({0.5, 0.4}), ValidationError);
  EXPECT_THROW(DiscretePrior({1.5, -0.5}), ValidationError);
  EXPECT_THROW(DiscretePrior(std::vector<double>{}), ValidationError);
  EXPECT_THROW(BuildPrior({PriorKind::kTruncatedGaussian, 0.5, 0.0},
                          ValueGrid::Equidistant(3)),
               ValidationError);
}

TEST(PriorTest, StringNames) {
  for (auto k : {PriorKind::kUniform, PriorKind::kTruncatedGaussian,
                 PriorKind::kUniformPoints}) {
    EXPECT_EQ(PriorKindFromString(ToString(k)), k);
  }
  EXPECT_THROW(PriorKindFromString("cauchy"), ValidationError);
}

TEST(PriorTest, ContinuousSamplesStayInRange) {
  Rng rng(9);
  const auto grid = ValueGrid::Equidistant(21);
  for (int i = 0; i < 10000; ++i) {
    const double g = SampleContinuous({PriorKind::kTruncatedGaussian, 0.9, 0.3}, grid, rng);
    ASSERT_GE(g, 0.0);
    ASSERT_LE(g, 1.0);
    const double u = SampleContinuous({PriorKind::kUniformPoints}, grid, rng);
    ASSERT_EQ(grid[grid.Nearest(u)], u);
  }
}

}  // namespace
}  // namespace auctionlab
