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

#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "auctionlab/errors.hpp"
#include "auctionlab/utility.hpp"

namespace auctionlab {

// Closed-form equilibrium strategies for uniform priors on [0, 1]. Below the
// reserve every strategy sits out (bids 0). At v = r both bid r; that point is
// returned directly because the formulas reach it only up to round-off.

inline double BneFpsbQL(double v, int n, double r) {
  if (v < r || v <= 0.0) return 0.0;
  if (v == r) return r;
  return (n - 1.0) / n * v + std::pow(r, n) / (n * std::pow(v, n - 1));
}

inline double BneFpsbROI(double v, int n, double r) {
  if (v < r || v <= 0.0) return 0.0;
  if (v == r) return r;
  if (n == 2) return v / (1.0 - std::log(r) + std::log(v));
  return (n - 2.0) * std::pow(v, n - 1) /
         ((n - 1.0) * std::pow(v, n - 2) - std::pow(r, n - 2));
}

inline double BneSpsbTruthful(double v) { return v; }

enum class AnalyticKind { kQLFirstPrice, kROIFirstPrice, kTruthful, kMaxBid };

struct AnalyticStrategy {
  AnalyticKind kind = AnalyticKind::kTruthful;
  int n_players = 2;
  double reserve = 0.0;
  double max_bid = 1.0;

  double operator()(double v) const {
    switch (kind) {
      case AnalyticKind::kQLFirstPrice: return BneFpsbQL(v, n_players, reserve);
      case AnalyticKind::kROIFirstPrice:
        return BneFpsbROI(v, n_players, reserve);
      case AnalyticKind::kTruthful: return BneSpsbTruthful(v);
      case AnalyticKind::kMaxBid: return max_bid;
    }
    return 0.0;
  }
};

inline std::string ToString(AnalyticKind k) {
  switch (k) {
    case AnalyticKind::kQLFirstPrice: return "ql_first_price";
    case AnalyticKind::kROIFirstPrice: return "roi_first_price";
    case AnalyticKind::kTruthful: return "truthful";
    case AnalyticKind::kMaxBid: return "max_bid";
  }
  return "?";
}

// Win probability of the highest type among n uniform bidders: G(v) = v^(n-1).
inline double UniformWinCdf(double v, int n) { return std::pow(v, n - 1); }

// Right-hand side of the symmetric first-price first-order condition
// beta'(v) = f(v, beta(v)) for a uniform prior, so G'(v)/G(v) = (n-1)/v.
//   QL:   (v - beta) G'/G
//   ROI:  (v beta - beta^2) G' / (v G)
//   ROSB: (B - beta) G'/G (v beta + beta^2 log(B - beta))
//                        / (v (B - beta) + beta^2)
inline double FirstPriceOdeRhs(const UtilityModel& model, int n, double v,
                               double beta) {
  const double hazard = (n - 1.0) / v;
  switch (model.kind) {
    case UtilityKind::kQL:
      return (v - beta) * hazard;
    case UtilityKind::kROI:
      return (v * beta - beta * beta) * hazard / v;
    case UtilityKind::kROSB: {
      const double slack = model.budget - beta;
      return slack * hazard * (v * beta + beta * beta * std::log(slack)) /
             (v * slack + beta * beta);
    }
    default:
      throw ValidationError("no first-order ODE for " + model.Label());
  }
}

// |central difference of beta at v - ODE right-hand side|.
inline double OdeResidual(const std::function<double(double)>& strategy,
                          const UtilityModel& model, int n, double v,
                          double h) {
  const double slope = (strategy(v + h) - strategy(v - h)) / (2.0 * h);
  return std::abs(slope - FirstPriceOdeRhs(model, n, v, strategy(v)));
}

}  // namespace auctionlab
