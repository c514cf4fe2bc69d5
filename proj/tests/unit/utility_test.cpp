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


#include "auctionlab/utility.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace auctionlab {
namespace {

TEST(UtilityTest, WinnerPayoffs) {
  EXPECT_DOUBLE_EQ(ExPostUtility(UtilityModel::QL(), 1.0, true, 0.3), 0.7);
  EXPECT_DOUBLE_EQ(ExPostUtility(UtilityModel::ROI(), 1.0, true, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(ExPostUtility(UtilityModel::ROS(), 1.0, true, 0.5), 2.0);
  EXPECT_DOUBLE_EQ(ExPostUtility(UtilityModel::ROIS(0.5), 1.0, true, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(ExPostUtility(UtilityModel::ROIS(0.0), 0.8, true, 0.4), 1.0);
  EXPECT_DOUBLE_EQ(ExPostUtility(UtilityModel::ROIS(1.0), 0.8, true, 0.4), 2.0);
  EXPECT_NEAR(ExPostUtility(UtilityModel::ROSB(1.01), 1.0, true, 0.5),
              2.0 + std::log(0.51), 1e-15);
  EXPECT_NEAR(ExPostUtility(UtilityModel::QLB(1.01), 1.0, true, 0.5),
              0.5 + std::log(0.51), 1e-15);
  EXPECT_NEAR(ExPostUtility(UtilityModel::ROIB(0.81), 0.6, true, 0.3),
              1.0 + std::log(0.51), 1e-15);
}

TEST(UtilityTest, LosersGetNothing) {
  for (const auto& m : {UtilityModel::QL(), UtilityModel::ROI(), UtilityModel::ROSB(1.01),
                        UtilityModel::QLB(1.01)}) {
    EXPECT_EQ(ExPostUtility(m, 0.7, false, 0.0), 0.0);
  }
}

TEST(UtilityTest, AffineDecomposition) {
  for (const auto& m : {UtilityModel::QL(), UtilityModel::ROI(), UtilityModel::ROS(),
                        UtilityModel::ROSB(1.01), UtilityModel::ROIS(0.25),
                        UtilityModel::QLB(1.01), UtilityModel::ROIB(1.01)}) {
    for (double p : {0.05, 0.3, 0.95}) {
      const PayoffTerms t = WinnerTerms(m, p);
      for (double v : {0.0, 0.4, 1.0}) {
        EXPECT_NEAR(t.slope * v + t.intercept, ExPostUtility(m, v, true, p), 1e-14)
            << m.Label() << " p=" << p << " v=" << v;
      }
    }
  }
}

TEST(UtilityTest, DomainErrors) {
  EXPECT_THROW(ExPostUtility(UtilityModel::ROI(), 1.0, true, 0.0), DomainError);
  EXPECT_THROW(ExPostUtility(UtilityModel::ROS(), 1.0, true, 0.0), DomainError);
  EXPECT_THROW(ExPostUtility(UtilityModel::ROSB(1.01), 1.0, true, 1.01), DomainError);
  EXPECT_NO_THROW(ExPostUtility(UtilityModel::QL(), 1.0, true, 0.0));
}

TEST(UtilityTest, ValidateAgainstMechanism) {
  EXPECT_THROW(UtilityModel::ROI().Validate(0.0, 1.0), ValidationError);
  EXPECT_NO_THROW(UtilityModel::ROI().Validate(0.05, 1.0));
  EXPECT_THROW(UtilityModel::ROSB(1.0).Validate(0.05, 1.0), ValidationError);
  EXPECT_NO_THROW(UtilityModel::ROSB(1.01).Validate(0.05, 1.0));
  EXPECT_THROW(UtilityModel::ROIS(1.5).Validate(0.05, 1.0), ValidationError);
  EXPECT_NO_THROW(UtilityModel::QL().Validate(0.0, 1.0));
}

TEST(UtilityTest, Names) {
  EXPECT_EQ(UtilityKindFromString("ROSB"), UtilityKind::kROSB);
  EXPECT_THROW(UtilityKindFromString("CARA"), ValidationError);
  EXPECT_EQ(UtilityModel::ROSB(1.01).Label(), "ROSB(B=1.01)");
  EXPECT_EQ(UtilityModel::ROIS(0.25).Label(), "ROIS(0.25)");
}

}  // namespace
}  // namespace auctionlab
