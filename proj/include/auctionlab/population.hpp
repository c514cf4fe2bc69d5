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
#include <cstdint>
#include <span>
#include <vector>

#include "auctionlab/auction.hpp"
#include "auctionlab/errors.hpp"
#include "auctionlab/learners.hpp"
#include "auctionlab/random.hpp"
#include "auctionlab/soda.hpp"
#include "auctionlab/utility.hpp"

namespace auctionlab {

// One bidder of the incomplete-information game, represented by a population
// with one learner per valuation grid point.
class PopulationAgent {
 public:
  PopulationAgent(const LearnerConfig& config, int num_values, int num_actions)
      : config_(config), visits_(num_values, 0) {
    if (num_values < 1 || num_actions < 1) {
      throw ValidationError("population needs at least one value and one action");
    }
    if (!(config.reward_scale > 0.0)) {
      throw ValidationError("reward_scale must be positive");
    }
    learners_.reserve(num_values);
    for (int i = 0; i < num_values; ++i) learners_.push_back(config.Make(num_actions));
  }

  int num_values() const { return static_cast<int>(learners_.size()); }
  const LearnerConfig& config() const { return config_; }
  Learner& learner(int value_idx) { return learners_[value_idx]; }
  const Learner& learner(int value_idx) const { return learners_[value_idx]; }
  // Number of updates the instance for `value_idx` has received.
  std::int64_t visits(int value_idx) const { return visits_[value_idx]; }

  int Select(int value_idx, Rng& rng) const {
    return auctionlab::Select(learners_[value_idx], rng);
  }
  void Update(int value_idx, int bid_idx, double utility) {
    auctionlab::Update(learners_[value_idx], bid_idx, utility / config_.reward_scale);
    ++visits_[value_idx];
  }

 private:
  LearnerConfig config_;
  std::vector<Learner> learners_;
  std::vector<std::int64_t> visits_;
};

struct PopulationDraw {
  int value_idx = 0;
  int bid_idx = 0;
  double reward = 0.0;  // ex-post utility before reward scaling
};

// One round: every population draws a valuation from the discrete prior, the
// matching learner bids, the auction resolves, and each active learner gets
// its realized ex-post utility. Returns the auctioneer's revenue.
inline double PopulationRound(const GameSpec& spec,
                              std::span<PopulationAgent> agents, int first_ok,
                              Rng& rng, std::span<PopulationDraw> draws,
                              std::span<int> bid_scratch) {
  const int n = spec.n_players;
  for (int k = 0; k < n; ++k) {
    const int vi = spec.values.size() == 1 ? 0 : spec.prior.Sample(rng);
    draws[k].value_idx = vi;
    draws[k].bid_idx = agents[k].Select(vi, rng);
    bid_scratch[k] = draws[k].bid_idx;
  }
  const RoundResult res = ResolveIndexed(bid_scratch, spec, first_ok, rng);
  for (int k = 0; k < n; ++k) {
    const bool won = res.winner == k;
    const double u = won ? ExPostUtility(spec.utility(k),
                                         spec.values[draws[k].value_idx], true,
                                         res.price)
                         : 0.0;
    draws[k].reward = u;
    agents[k].Update(draws[k].value_idx, draws[k].bid_idx, u);
  }
  return res.winner >= 0 ? res.price : 0.0;
}

inline double PopulationRound(const GameSpec& spec,
                              std::span<PopulationAgent> agents, Rng& rng,
                              std::span<PopulationDraw> draws) {
  if (static_cast<int>(agents.size()) != spec.n_players ||
      static_cast<int>(draws.size()) != spec.n_players) {
    throw ValidationError("one population and one draw slot per player required");
  }
  std::vector<int> bids(spec.n_players);
  return PopulationRound(spec, agents, spec.first_eligible(), rng, draws, bids);
}

// Counts of (value, bid) pairs observed over a window of rounds.
class EmpiricalStrategy {
 public:
  EmpiricalStrategy(int num_values, int num_actions)
      : n_(num_values), m_(num_actions),
        counts_(static_cast<std::size_t>(num_values) * num_actions, 0) {}

  void Record(int value_idx, int bid_idx) {
    ++counts_[static_cast<std::size_t>(value_idx) * m_ + bid_idx];
  }
  void Add(int value_idx, int bid_idx, std::int64_t n) {
    counts_[static_cast<std::size_t>(value_idx) * m_ + bid_idx] += n;
  }
  void Clear() { std::fill(counts_.begin(), counts_.end(), 0); }

  int rows() const { return n_; }
  int cols() const { return m_; }
  std::int64_t count(int i, int j) const {
    return counts_[static_cast<std::size_t>(i) * m_ + j];
  }
  std::int64_t RowTotal(int i) const {
    std::int64_t t = 0;
    for (int j = 0; j < m_; ++j) t += count(i, j);
    return t;
  }

 private:
  int n_;
  int m_;
  std::vector<std::int64_t> counts_;
};

struct AggregatedStrategy {
  DistributionalStrategy strategy;
  std::vector<bool> flagged;  // rows without observations

  int flagged_count() const {
    return static_cast<int>(std::count(flagged.begin(), flagged.end(), true));
  }
};

// Normalizes each observed row to its prior mass. Rows without observations
// put their mass on the lowest bid clearing the reserve and are flagged.
inline AggregatedStrategy Aggregate(const EmpiricalStrategy& counts,
                                    const GameSpec& spec) {
  if (counts.rows() != spec.values.size() || counts.cols() != spec.actions.size()) {
    throw ValidationError("empirical strategy does not match the game grids");
  }
  const int fallback = std::min(spec.first_eligible(), spec.actions.size() - 1);
  AggregatedStrategy out{DistributionalStrategy(counts.rows(), counts.cols()),
                         std::vector<bool>(counts.rows(), false)};
  for (int i = 0; i < counts.rows(); ++i) {
    const std::int64_t total = counts.RowTotal(i);
    if (total == 0) {
      out.strategy(i, fallback) = spec.prior[i];
      out.flagged[i] = true;
      continue;
    }
    for (int j = 0; j < counts.cols(); ++j) {
      out.strategy(i, j) = spec.prior[i] * static_cast<double>(counts.count(i, j)) /
                           static_cast<double>(total);
    }
  }
  return out;
}

}  // namespace auctionlab
