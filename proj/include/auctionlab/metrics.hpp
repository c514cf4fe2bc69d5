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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "auctionlab/analytic.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/grid.hpp"
#include "auctionlab/random.hpp"
#include "auctionlab/soda.hpp"

namespace auctionlab {

// Samples bids from a distributional strategy: a value is snapped to the
// nearest grid point and a bid is drawn from that row's conditional law.
// Rows without mass fall back to the lowest bid clearing the reserve and are
// reported as flagged.
class StrategySampler {
 public:
  StrategySampler(const GameSpec& spec, const DistributionalStrategy& s)
      : values_(&spec.values), cumulative_(s.rows()) {
    const int fallback = std::min(spec.first_eligible(), spec.actions.size() - 1);
    fallback_.assign(s.rows(), -1);
    for (int i = 0; i < s.rows(); ++i) {
      const double total = s.RowSum(i);
      if (!(total > 0.0)) {
        fallback_[i] = fallback;
        ++flagged_;
        continue;
      }
      auto& cdf = cumulative_[i];
      cdf.resize(s.cols());
      double acc = 0.0;
      for (int j = 0; j < s.cols(); ++j) {
        acc += s(i, j) / total;
        cdf[j] = acc;
      }
      cdf.back() = 1.0;
    }
  }

  int BidIndexForValueIndex(int value_idx, Rng& rng) const {
    if (fallback_[value_idx] >= 0) return fallback_[value_idx];
    const auto& cdf = cumulative_[value_idx];
    const double u = Uniform01(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min(static_cast<int>(it - cdf.begin()),
                    static_cast<int>(cdf.size()) - 1);
  }
  int BidIndex(double value, Rng& rng) const {
    return BidIndexForValueIndex(values_->Nearest(value), rng);
  }
  int flagged_rows() const { return flagged_; }

 private:
  const ValueGrid* values_;
  std::vector<std::vector<double>> cumulative_;
  std::vector<int> fallback_;
  int flagged_ = 0;
};

struct MonteCarloOptions {
  std::int64_t samples = std::int64_t{1} << 22;  // per run
  int runs = 10;
  std::uint64_t seed = 1;
};

// Mean and spread of a per-run statistic.
struct RunStatistic {
  double mean = 0.0;
  double std = 0.0;  // across runs (sample standard deviation)
  std::vector<double> per_run;

  static RunStatistic From(std::vector<double> xs) {
    RunStatistic r;
    r.per_run = std::move(xs);
    const double n = static_cast<double>(r.per_run.size());
    for (double x : r.per_run) r.mean += x / n;
    if (r.per_run.size() > 1) {
      double ss = 0.0;
      for (double x : r.per_run) ss += (x - r.mean) * (x - r.mean);
      r.std = std::sqrt(ss / (n - 1.0));
    }
    return r;
  }
};

struct RevenueEstimate {
  double mean = 0.0;
  double std = 0.0;
  std::int64_t samples = 0;  // per run
  int runs = 0;
  int flagged_rows = 0;
  std::vector<double> per_run;
};

// Draws a valuation index for the simulation: a continuous draw snapped to
// the grid, or a direct draw when the prior lives on the grid points.
inline int DrawValueIndex(const GameSpec& spec, Rng& rng, double* value) {
  if (spec.prior_spec.kind == PriorKind::kUniformPoints) {
    const int i = spec.prior.Sample(rng);
    *value = spec.values[i];
    return i;
  }
  *value = SampleContinuous(spec.prior_spec, spec.values, rng);
  return spec.values.Nearest(*value);
}

// Expected auctioneer revenue when every player follows its distributional
// strategy.
inline RevenueEstimate SimulateRevenue(const GameSpec& spec,
                                       std::span<const DistributionalStrategy> profile,
                                       const MonteCarloOptions& opt) {
  internal::CheckProfileShape(spec, profile);
  std::vector<StrategySampler> samplers;
  RevenueEstimate est;
  for (const auto& s : profile) {
    samplers.emplace_back(spec, s);
    est.flagged_rows += samplers.back().flagged_rows();
  }
  const int first_ok = spec.first_eligible();
  std::vector<int> bids(spec.n_players);
  std::vector<double> per_run;
  for (int run = 0; run < opt.runs; ++run) {
    Rng rng(DeriveSeed(opt.seed, static_cast<std::uint64_t>(run)));
    double total = 0.0;
    for (std::int64_t k = 0; k < opt.samples; ++k) {
      for (int p = 0; p < spec.n_players; ++p) {
        double v;
        const int vi = DrawValueIndex(spec, rng, &v);
        bids[p] = samplers[p].BidIndexForValueIndex(vi, rng);
      }
      total += ResolveIndexed(bids, spec, first_ok, rng).price;
    }
    per_run.push_back(total / static_cast<double>(opt.samples));
  }
  const RunStatistic stat = RunStatistic::From(per_run);
  est.mean = stat.mean;
  est.std = stat.std;
  est.samples = opt.samples;
  est.runs = opt.runs;
  est.per_run = stat.per_run;
  return est;
}

// A bidding policy on continuous values: bid = policy(value, rng).
using BidPolicy = std::function<double(double, Rng&)>;

inline BidPolicy PolicyFromStrategy(const GameSpec& spec,
                                    const DistributionalStrategy& s) {
  auto sampler = std::make_shared<StrategySampler>(spec, s);
  const ActionGrid* actions = &spec.actions;
  return [sampler, actions](double v, Rng& rng) {
    return (*actions)[sampler->BidIndex(v, rng)];
  };
}

inline BidPolicy PolicyFromAnalytic(const AnalyticStrategy& a) {
  return [a](double v, Rng&) { return a(v); };
}

// Expected utility of bidding `own` against continuous opposing bids,
// averaged exactly over the tie lottery.
inline double ContinuousRoundUtility(const GameSpec& spec, int player,
                                     double value, double own,
                                     std::span<const double> opposing) {
  if (own < spec.reserve - 1e-12) return 0.0;
  double top = 0.0;
  int ties = 0;
  for (double b : opposing) {
    if (b > own) return 0.0;
    if (b == own) ++ties;
    top = std::max(top, b);
  }
  if (ties > 0 && spec.tie == TieRule::kAllLose) return 0.0;
  const double price =
      spec.payment == PaymentRule::kFirstPrice ? own : std::max(top, spec.reserve);
  return ExPostUtility(spec.utility(player), value, true, price) / (ties + 1);
}

// Relative utility loss against the analytic equilibrium,
//   L = 1 - u(policy, beta*_-i) / u(beta*, beta*_-i),
// with both utilities estimated on the same value draws.
inline RunStatistic UtilityLossVsAnalytic(const GameSpec& spec,
                                          const BidPolicy& policy,
                                          const AnalyticStrategy& analytic,
                                          const MonteCarloOptions& opt,
                                          int player = 0) {
  std::vector<double> opposing(spec.n_players - 1);
  std::vector<double> per_run;
  for (int run = 0; run < opt.runs; ++run) {
    Rng rng(DeriveSeed(opt.seed, static_cast<std::uint64_t>(run)));
    double u_policy = 0.0;
    double u_star = 0.0;
    for (std::int64_t k = 0; k < opt.samples; ++k) {
      const double v = SampleContinuous(spec.prior_spec, spec.values, rng);
      for (auto& b : opposing) {
        b = analytic(SampleContinuous(spec.prior_spec, spec.values, rng));
      }
      u_policy += ContinuousRoundUtility(spec, player, v, policy(v, rng), opposing);
      u_star += ContinuousRoundUtility(spec, player, v, analytic(v), opposing);
    }
    per_run.push_back(1.0 - u_policy / u_star);
  }
  return RunStatistic::From(per_run);
}

// Root-mean-square gap between sampled policy bids and the analytic bids.
inline RunStatistic L2Distance(const GameSpec& spec, const BidPolicy& policy,
                               const AnalyticStrategy& analytic,
                               const MonteCarloOptions& opt) {
  std::vector<double> per_run;
  for (int run = 0; run < opt.runs; ++run) {
    Rng rng(DeriveSeed(opt.seed, static_cast<std::uint64_t>(run)));
    double ss = 0.0;
    for (std::int64_t k = 0; k < opt.samples; ++k) {
      const double v = SampleContinuous(spec.prior_spec, spec.values, rng);
      const double d = policy(v, rng) - analytic(v);
      ss += d * d;
    }
    per_run.push_back(std::sqrt(ss / static_cast<double>(opt.samples)));
  }
  return RunStatistic::From(per_run);
}

inline double Median(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  const double upper = xs[mid];
  if (xs.size() % 2 == 1) return upper;
  const double lower = *std::max_element(xs.begin(), xs.begin() + mid);
  return 0.5 * (lower + upper);
}

struct WindowStats {
  std::vector<double> median_bid;    // per window
  std::vector<double> mean_revenue;  // per window
};

// Per-window median bid and mean revenue. A trailing partial window is
// dropped.
inline WindowStats WindowedStats(std::span<const double> bids,
                                 std::span<const double> revenue,
                                 std::size_t window) {
  if (window == 0) throw ValidationError("window must be positive");
  WindowStats out;
  const std::size_t count = std::min(bids.size(), revenue.size()) / window;
  for (std::size_t w = 0; w < count; ++w) {
    const auto b = bids.subspan(w * window, window);
    const auto r = revenue.subspan(w * window, window);
    out.median_bid.push_back(Median({b.begin(), b.end()}));
    double s = 0.0;
    for (double x : r) s += x;
    out.mean_revenue.push_back(s / static_cast<double>(window));
  }
  return out;
}

// Streaming version of WindowedStats for long runs; one bid series per agent.
class WindowAccumulator {
 public:
  WindowAccumulator(int agents, std::size_t window)
      : window_(window), buffers_(agents), medians_(agents) {
    if (window == 0) throw ValidationError("window must be positive");
    for (auto& b : buffers_) b.reserve(window);
  }

  void Add(std::span<const double> bids, double revenue) {
    for (std::size_t a = 0; a < buffers_.size(); ++a) buffers_[a].push_back(bids[a]);
    revenue_sum_ += revenue;
    if (++filled_ == window_) {
      for (std::size_t a = 0; a < buffers_.size(); ++a) {
        medians_[a].push_back(Median(buffers_[a]));
        buffers_[a].clear();
      }
      mean_revenue_.push_back(revenue_sum_ / static_cast<double>(window_));
      revenue_sum_ = 0.0;
      filled_ = 0;
    }
  }

  const std::vector<double>& median_bids(int agent) const { return medians_[agent]; }
  const std::vector<double>& mean_revenue() const { return mean_revenue_; }
  std::size_t window() const { return window_; }

 private:
  std::size_t window_;
  std::vector<std::vector<double>> buffers_;
  std::vector<std::vector<double>> medians_;
  std::vector<double> mean_revenue_;
  double revenue_sum_ = 0.0;
  std::size_t filled_ = 0;
};

}  // namespace auctionlab
