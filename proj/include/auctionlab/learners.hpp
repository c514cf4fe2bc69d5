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
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "auctionlab/errors.hpp"
#include "auctionlab/random.hpp"

namespace auctionlab {

// How greedy learners choose among equally valued actions.
enum class ArgmaxTie { kRandom, kLowest, kHighest };

inline std::string ToString(ArgmaxTie t) {
  switch (t) {
    case ArgmaxTie::kRandom: return "random";
    case ArgmaxTie::kLowest: return "lowest";
    case ArgmaxTie::kHighest: return "highest";
  }
  return "?";
}

inline ArgmaxTie ArgmaxTieFromString(const std::string& s) {
  if (s == "random") return ArgmaxTie::kRandom;
  if (s == "lowest") return ArgmaxTie::kLowest;
  if (s == "highest") return ArgmaxTie::kHighest;
  throw ValidationError("unknown argmax tie rule: " + s);
}

namespace internal {

// Uniformly random index among the maximisers of `values`.
template <typename Range>
int RandomArgmax(const Range& values, Rng& rng) {
  double best = -std::numeric_limits<double>::infinity();
  int pick = 0;
  int ties = 0;
  for (int a = 0; a < static_cast<int>(values.size()); ++a) {
    const double x = values[a];
    if (x > best) {
      best = x;
      pick = a;
      ties = 1;
    } else if (x == best) {
      // Reservoir sampling over the tied set.
      if (UniformIndex(rng, ++ties) == 0) pick = a;
    }
  }
  return pick;
}

template <typename Range>
int Argmax(const Range& values, ArgmaxTie tie, Rng& rng) {
  if (tie == ArgmaxTie::kRandom) return RandomArgmax(values, rng);
  const int m = static_cast<int>(values.size());
  int pick = tie == ArgmaxTie::kLowest ? 0 : m - 1;
  for (int a = 0; a < m; ++a) {
    const int k = tie == ArgmaxTie::kLowest ? a : m - 1 - a;
    if (values[k] > values[pick]) pick = k;
  }
  return pick;
}

inline int SampleIndex(const std::vector<double>& probs, Rng& rng) {
  double u = Uniform01(rng);
  const int m = static_cast<int>(probs.size());
  for (int a = 0; a < m; ++a) {
    u -= probs[a];
    if (u < 0.0) return a;
  }
  // Rounding left a sliver of mass: return the last action that has any.
  for (int a = m - 1; a >= 0; --a) {
    if (probs[a] > 0.0) return a;
  }
  return m - 1;
}

}  // namespace internal

// Exp3 with explicit uniform exploration. Weights are kept in log space so
// that large importance-weighted rewards neither overflow nor drive an
// action's weight to an unrecoverable zero.
class Exp3 {
 public:
  Exp3(int num_actions, double exploration, double learning_rate)
      : exploration_(exploration),
        learning_rate_(learning_rate),
        log_weights_(num_actions, 0.0),
        strategy_(num_actions, 1.0 / num_actions),
        play_probs_(num_actions, 1.0 / num_actions) {
    if (num_actions < 1) throw ValidationError("Exp3 needs actions");
    if (!(exploration >= 0.0 && exploration <= 1.0)) {
      throw ValidationError("Exp3 exploration must lie in [0, 1]");
    }
    if (!(learning_rate > 0.0)) {
      throw ValidationError("Exp3 learning rate must be positive");
    }
  }

  int num_actions() const { return static_cast<int>(strategy_.size()); }
  double exploration() const { return exploration_; }
  double learning_rate() const { return learning_rate_; }
  // The mixed strategy x_t (without exploration).
  const std::vector<double>& strategy() const { return strategy_; }
  // P_t = (1 - eps) x_t + eps / m.
  const std::vector<double>& play_probabilities() const { return play_probs_; }

  int Select(Rng& rng) const { return internal::SampleIndex(play_probs_, rng); }

  // Importance-weighted estimate r / P_t(played) on the played action, zero
  // elsewhere, followed by a multiplicative-weights step.
  void Update(int played, double reward) {
    const double estimate = reward / play_probs_[played];
    log_weights_[played] += learning_rate_ * estimate;
    Normalize();
  }

  void set_strategy(std::vector<double> x) {
    for (std::size_t a = 0; a < x.size(); ++a) {
      log_weights_[a] = x[a] > 0.0 ? std::log(x[a])
                                   : -std::numeric_limits<double>::infinity();
    }
    Normalize();
  }

 private:
  void Normalize() {
    const double top = *std::max_element(log_weights_.begin(), log_weights_.end());
    double total = 0.0;
    const int m = num_actions();
    for (int a = 0; a < m; ++a) {
      // Re-centre so the largest log weight stays at 0.
      log_weights_[a] -= top;
      strategy_[a] = std::exp(log_weights_[a]);
      total += strategy_[a];
    }
    const double uniform = exploration_ / m;
    for (int a = 0; a < m; ++a) {
      strategy_[a] /= total;
      play_probs_[a] = (1.0 - exploration_) * strategy_[a] + uniform;
    }
  }

  double exploration_;
  double learning_rate_;
  std::vector<double> log_weights_;
  std::vector<double> strategy_;
  std::vector<double> play_probs_;
};

// Stateless Q-learning with decaying epsilon-greedy exploration.
class QLearner {
 public:
  struct Params {
    double learning_rate = 0.05;  // alpha
    double discount = 0.99;       // gamma
    double exploration = 0.025;   // epsilon base
    double decay = 0.0002;        // beta: eps_t = exploration * exp(-decay t)
    double initial_q = 100.0;
    ArgmaxTie tie = ArgmaxTie::kRandom;
  };

  QLearner(int num_actions, Params p)
      : params_(p), q_(num_actions, p.initial_q) {
    if (num_actions < 1) throw ValidationError("Q-learner needs actions");
  }

  int num_actions() const { return static_cast<int>(q_.size()); }
  const Params& params() const { return params_; }
  const std::vector<double>& q() const { return q_; }
  std::vector<double>& mutable_q() { return q_; }
  long long t() const { return t_; }

  double current_exploration() const {
    return params_.exploration * std::exp(-params_.decay * static_cast<double>(t_));
  }

  int Select(Rng& rng) const {
    if (Bernoulli(rng, current_exploration())) {
      return UniformIndex(rng, num_actions());
    }
    return internal::Argmax(q_, params_.tie, rng);
  }

  // Only the played entry moves; the continuation value uses the Q-vector
  // before this update.
  void Update(int played, double reward) {
    const double continuation = *std::max_element(q_.begin(), q_.end());
    q_[played] = (1.0 - params_.learning_rate) * q_[played] +
                 params_.learning_rate * (reward + params_.discount * continuation);
    ++t_;
  }

 private:
  Params params_;
  std::vector<double> q_;
  long long t_ = 0;
};

// Running mean reward and visit count per action.
struct ArmStatistics {
  std::vector<long long> visits;
  std::vector<double> mean;

  explicit ArmStatistics(int m) : visits(m, 0), mean(m, 0.0) {}

  void Record(int a, double reward) {
    ++visits[a];
    mean[a] += (reward - mean[a]) / static_cast<double>(visits[a]);
  }
  long long total() const {
    long long t = 0;
    for (long long n : visits) t += n;
    return t;
  }
};

// Greedy on sample means with constant uniform exploration. Unvisited
// actions have no mean yet and are played before any visited one.
class EpsilonGreedy {
 public:
  EpsilonGreedy(int num_actions, double exploration,
                ArgmaxTie tie = ArgmaxTie::kRandom)
      : exploration_(exploration), tie_(tie), stats_(num_actions) {
    if (num_actions < 1) throw ValidationError("epsilon-greedy needs actions");
  }

  int num_actions() const { return static_cast<int>(stats_.mean.size()); }
  const ArmStatistics& stats() const { return stats_; }
  double exploration() const { return exploration_; }

  int Select(Rng& rng) const {
    if (Bernoulli(rng, exploration_)) return UniformIndex(rng, num_actions());
    int unvisited = 0;
    int pick = -1;
    for (int a = 0; a < num_actions(); ++a) {
      if (stats_.visits[a] == 0 && UniformIndex(rng, ++unvisited) == 0) pick = a;
    }
    if (pick >= 0) return pick;
    return internal::Argmax(stats_.mean, tie_, rng);
  }

  void Update(int played, double reward) { stats_.Record(played, reward); }

 private:
  double exploration_;
  ArgmaxTie tie_;
  ArmStatistics stats_;
};

// UCB1: argmax of mean + c sqrt(ln t / N(a)). Unvisited actions come first,
// lowest index first.
class Ucb1 {
 public:
  Ucb1(int num_actions, double bonus) : bonus_(bonus), stats_(num_actions) {
    if (num_actions < 1) throw ValidationError("UCB1 needs actions");
  }

  int num_actions() const { return static_cast<int>(stats_.mean.size()); }
  const ArmStatistics& stats() const { return stats_; }

  int Select(Rng& rng) const {
    for (int a = 0; a < num_actions(); ++a) {
      if (stats_.visits[a] == 0) return a;
    }
    const double log_t = std::log(static_cast<double>(total_));
    scores_.resize(stats_.mean.size());
    for (int a = 0; a < num_actions(); ++a) {
      scores_[a] = stats_.mean[a] +
                   bonus_ * std::sqrt(log_t / static_cast<double>(stats_.visits[a]));
    }
    return internal::RandomArgmax(scores_, rng);
  }

  void Update(int played, double reward) {
    stats_.Record(played, reward);
    ++total_;
  }

 private:
  double bonus_;
  ArmStatistics stats_;
  long long total_ = 0;
  mutable std::vector<double> scores_;
};

// Gaussian Thompson sampling with known observation noise and a conjugate
// normal prior on each action's mean reward.
class ThompsonSampling {
 public:
  struct Params {
    double prior_mean = 0.0;
    double prior_variance = 1.0;
    double noise_sd = 1.0;
  };

  ThompsonSampling(int num_actions, Params p)
      : params_(p),
        mean_(num_actions, p.prior_mean),
        variance_(num_actions, p.prior_variance) {
    if (num_actions < 1) throw ValidationError("Thompson sampling needs actions");
    if (!(p.prior_variance > 0.0) || !(p.noise_sd > 0.0)) {
      throw ValidationError("Thompson variances must be positive");
    }
  }

  int num_actions() const { return static_cast<int>(mean_.size()); }
  const std::vector<double>& posterior_mean() const { return mean_; }
  const std::vector<double>& posterior_variance() const { return variance_; }

  int Select(Rng& rng) const {
    draws_.resize(mean_.size());
    for (int a = 0; a < num_actions(); ++a) {
      draws_[a] = mean_[a] + std::sqrt(variance_[a]) * StandardNormal(rng);
    }
    return internal::RandomArgmax(draws_, rng);
  }

  void Update(int played, double reward) {
    const double noise_precision = 1.0 / (params_.noise_sd * params_.noise_sd);
    const double precision = 1.0 / variance_[played] + noise_precision;
    mean_[played] = (mean_[played] / variance_[played] + reward * noise_precision) /
                    precision;
    variance_[played] = 1.0 / precision;
  }

 private:
  Params params_;
  std::vector<double> mean_;
  std::vector<double> variance_;
  mutable std::vector<double> draws_;
};

using Learner =
    std::variant<Exp3, QLearner, EpsilonGreedy, Ucb1, ThompsonSampling>;

inline int Select(const Learner& l, Rng& rng) {
  return std::visit([&](const auto& x) { return x.Select(rng); }, l);
}

inline void Update(Learner& l, int played, double reward) {
  std::visit([&](auto& x) { x.Update(played, reward); }, l);
}

// Select, observe the reward `feedback(action)`, update. Returns the action.
template <typename Feedback>
int Step(Learner& l, Rng& rng, Feedback&& feedback) {
  const int a = Select(l, rng);
  Update(l, a, feedback(a));
  return a;
}

enum class Algorithm { kExp3, kQLearning, kEpsilonGreedy, kUcb1, kThompson };

inline std::string ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kExp3: return "exp3";
    case Algorithm::kQLearning: return "q_learning";
    case Algorithm::kEpsilonGreedy: return "epsilon_greedy";
    case Algorithm::kUcb1: return "ucb1";
    case Algorithm::kThompson: return "thompson";
  }
  return "?";
}

inline Algorithm AlgorithmFromString(const std::string& s) {
  for (auto a : {Algorithm::kExp3, Algorithm::kQLearning,
                 Algorithm::kEpsilonGreedy, Algorithm::kUcb1,
                 Algorithm::kThompson}) {
    if (ToString(a) == s) return a;
  }
  throw ValidationError("unknown learning algorithm: " + s);
}

// Hyperparameters of one bidding agent. Fields that an algorithm does not use
// are ignored. `reward_scale` divides every reward before it is fed back.
struct LearnerConfig {
  std::string name = "Exp3";
  Algorithm algorithm = Algorithm::kExp3;
  double learning_rate = 0.01;
  double exploration = 0.01;
  double decay = 0.0;
  double discount = 0.99;
  double initial_q = 100.0;
  double ucb_bonus = 4.0;
  double prior_mean = 0.0;
  double prior_variance = 1.0;
  double noise_sd = 1.0;
  double reward_scale = 1.0;
  ArgmaxTie argmax_ties = ArgmaxTie::kRandom;  // Q-learning and epsilon-greedy

  bool operator==(const LearnerConfig&) const = default;

  // Named presets: the Q-learning and Exp3 rows used in the repeated-auction
  // experiments, plus the alternative bandit algorithms.
  static LearnerConfig Preset(const std::string& name) {
    LearnerConfig c;
    c.name = name;
    auto q = [&](double eps, double decay, double gamma, double alpha,
                 double q0) {
      c.algorithm = Algorithm::kQLearning;
      c.exploration = eps;
      c.decay = decay;
      c.discount = gamma;
      c.learning_rate = alpha;
      c.initial_q = q0;
    };
    if (name == "Optimistic (Baseline)" || name == "Q-Learning (Baseline)") {
      q(0.025, 0.0002, 0.99, 0.05, 100.0);
    } else if (name == "Optimistic & small γ" || name == "Optimistic & small gamma") {
      q(0.025, 0.0002, 0.25, 0.05, 100.0);
    } else if (name == "Optimistic & fix ε" || name == "Optimistic & fix epsilon") {
      q(0.025, 0.0, 0.99, 0.05, 100.0);
    } else if (name == "Zero") {
      q(0.025, 0.0, 0.99, 0.05, 0.0);
    } else if (name == "Exp3") {
      c.algorithm = Algorithm::kExp3;
      c.exploration = 0.01;
      c.learning_rate = 0.01;
    } else if (name == "ε-Greedy" || name == "Epsilon-Greedy") {
      c.algorithm = Algorithm::kEpsilonGreedy;
      c.exploration = 0.05;
    } else if (name == "UCB1") {
      c.algorithm = Algorithm::kUcb1;
      c.ucb_bonus = 4.0;
    } else if (name == "Thompson-Sampling" || name == "Thompson") {
      c.algorithm = Algorithm::kThompson;
    } else {
      throw ValidationError("unknown learner preset: " + name);
    }
    return c;
  }

  Learner Make(int num_actions) const {
    switch (algorithm) {
      case Algorithm::kExp3: return Exp3(num_actions, exploration, learning_rate);
      case Algorithm::kQLearning:
        return QLearner(num_actions, {learning_rate, discount, exploration,
                                      decay, initial_q, argmax_ties});
      case Algorithm::kEpsilonGreedy:
        return EpsilonGreedy(num_actions, exploration, argmax_ties);
      case Algorithm::kUcb1: return Ucb1(num_actions, ucb_bonus);
      case Algorithm::kThompson:
        return ThompsonSampling(num_actions,
                                {prior_mean, prior_variance, noise_sd});
    }
    throw ValidationError("unknown algorithm");
  }
};

}  // namespace auctionlab
