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
#include <sstream>
#include <string>

#include "auctionlab/errors.hpp"

namespace auctionlab {

// Bidder objectives. Every winner payoff is affine in the valuation:
//   u = slope(p) * v + intercept(p),
// which the gradient code relies on.
enum class UtilityKind {
  kQL,    // v - p
  kROI,   // (v - p) / p
  kROS,   // v / p
  kROSB,  // v / p + log(B - p)
  kROIS,  // (1 - mix) ROI + mix ROS = (v - (1 - mix) p) / p
  kQLB,   // v - p + log(B - p)
  kROIB,  // (v - p) / p + log(B - p)
};

inline std::string ToString(UtilityKind k) {
  switch (k) {
    case UtilityKind::kQL: return "QL";
    case UtilityKind::kROI: return "ROI";
    case UtilityKind::kROS: return "ROS";
    case UtilityKind::kROSB: return "ROSB";
    case UtilityKind::kROIS: return "ROIS";
    case UtilityKind::kQLB: return "QLB";
    case UtilityKind::kROIB: return "ROIB";
  }
  return "?";
}

inline UtilityKind UtilityKindFromString(const std::string& s) {
  for (auto k : {UtilityKind::kQL, UtilityKind::kROI, UtilityKind::kROS,
                 UtilityKind::kROSB, UtilityKind::kROIS, UtilityKind::kQLB,
                 UtilityKind::kROIB}) {
    if (ToString(k) == s) return k;
  }
  throw ValidationError("unknown utility model: " + s);
}

struct UtilityModel {
  UtilityKind kind = UtilityKind::kQL;
  double budget = 1.01;  // barrier kinds only
  double mix = 0.5;      // ROIS only

  static UtilityModel QL() { return {UtilityKind::kQL}; }
  static UtilityModel ROI() { return {UtilityKind::kROI}; }
  static UtilityModel ROS() { return {UtilityKind::kROS}; }
  static UtilityModel ROSB(double budget) {
    return {UtilityKind::kROSB, budget};
  }
  static UtilityModel ROIS(double mix) {
    return {UtilityKind::kROIS, 1.01, mix};
  }
  static UtilityModel QLB(double budget) { return {UtilityKind::kQLB, budget}; }
  static UtilityModel ROIB(double budget) {
    return {UtilityKind::kROIB, budget};
  }

  // Divides by the price.
  bool is_ratio() const {
    return kind != UtilityKind::kQL && kind != UtilityKind::kQLB;
  }
  bool has_barrier() const {
    return kind == UtilityKind::kROSB || kind == UtilityKind::kQLB ||
           kind == UtilityKind::kROIB;
  }

  std::string Label() const {
    std::ostringstream os;
    os << ToString(kind);
    if (kind == UtilityKind::kROIS) os << "(" << mix << ")";
    if (has_barrier()) os << "(B=" << budget << ")";
    return os.str();
  }

  // Checks parameters against the mechanism they will be used in.
  void Validate(double reserve, double max_bid) const {
    if (kind == UtilityKind::kROIS && !(mix >= 0.0 && mix <= 1.0)) {
      throw ValidationError("ROIS mix must lie in [0, 1]");
    }
    if (has_barrier() && !(budget > max_bid)) {
      throw ValidationError(Label() +
                            ": budget must exceed every feasible price");
    }
    if (is_ratio() && !(reserve > 0.0)) {
      throw ValidationError(Label() + " needs a strictly positive reserve");
    }
  }

  bool operator==(const UtilityModel& o) const {
    if (kind != o.kind) return false;
    if (has_barrier() && budget != o.budget) return false;
    if (kind == UtilityKind::kROIS && mix != o.mix) return false;
    return true;
  }
};

// Winner payoff decomposed as slope * v + intercept at price p.
struct PayoffTerms {
  double slope = 0.0;
  double intercept = 0.0;
};

inline PayoffTerms WinnerTerms(const UtilityModel& m, double price) {
  if (m.is_ratio() && !(price > 0.0)) {
    throw DomainError(m.Label() + " is undefined at a zero price");
  }
  double barrier = 0.0;
  if (m.has_barrier()) {
    if (!(price < m.budget)) {
      throw DomainError(m.Label() + ": price reaches the budget");
    }
    barrier = std::log(m.budget - price);
  }
  switch (m.kind) {
    case UtilityKind::kQL: return {1.0, -price};
    case UtilityKind::kQLB: return {1.0, -price + barrier};
    case UtilityKind::kROI: return {1.0 / price, -1.0};
    case UtilityKind::kROIB: return {1.0 / price, -1.0 + barrier};
    case UtilityKind::kROS: return {1.0 / price, 0.0};
    case UtilityKind::kROSB: return {1.0 / price, barrier};
    case UtilityKind::kROIS: return {1.0 / price, -(1.0 - m.mix)};
  }
  return {};
}

// Ex-post utility of a bidder with valuation v. Losers get exactly 0; the
// barrier term only enters through the allocation.
inline double ExPostUtility(const UtilityModel& m, double v, bool won,
                            double price) {
  if (!won) return 0.0;
  const PayoffTerms t = WinnerTerms(m, price);
  return t.slope * v + t.intercept;
}

}  // namespace auctionlab
