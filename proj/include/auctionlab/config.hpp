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

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "auctionlab/analytic.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/errors.hpp"
#include "auctionlab/grid.hpp"
#include "auctionlab/learners.hpp"
#include "auctionlab/soda.hpp"
#include "auctionlab/utility.hpp"

namespace auctionlab {

using Json = nlohmann::json;

enum class ExperimentKind { kComplete, kIncomplete, kSoda, kRevenue };

inline std::string ToString(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kComplete: return "complete";
    case ExperimentKind::kIncomplete: return "incomplete";
    case ExperimentKind::kSoda: return "soda";
    case ExperimentKind::kRevenue: return "revenue";
  }
  return "?";
}

inline ExperimentKind ExperimentKindFromString(const std::string& s) {
  for (auto k : {ExperimentKind::kComplete, ExperimentKind::kIncomplete,
                 ExperimentKind::kSoda, ExperimentKind::kRevenue}) {
    if (ToString(k) == s) return k;
  }
  throw ValidationError("unknown experiment kind: " + s);
}

// Either explicit points or `points` equidistant values on [lo, hi]. With a
// budget margin set, hi becomes B - margin in cells whose utility has a
// budget barrier.
struct GridConfig {
  std::vector<double> explicit_points;
  int points = 21;
  double lo = 0.0;
  double hi = 1.0;
  std::optional<double> budget_margin;

  std::vector<double> Build(std::optional<double> budget) const {
    if (!explicit_points.empty()) return explicit_points;
    const double top = budget && budget_margin ? *budget - *budget_margin : hi;
    return internal::Linspace(lo, top, points);
  }

  bool operator==(const GridConfig&) const = default;
};

struct GameConfig {
  int n_players = 2;
  GridConfig values;
  GridConfig actions;
  PriorSpec prior;
  PaymentRule payment = PaymentRule::kFirstPrice;
  TieRule tie = TieRule::kRandomWinner;
  double reserve = 0.0;
  // Move the reserve to the nearest action for the discretized game; the
  // analytic benchmark keeps the configured value.
  bool snap_reserve = false;
  // One entry for symmetric games, otherwise one per player.
  std::vector<UtilityModel> utilities = {UtilityModel{}};

  bool operator==(const GameConfig&) const = default;
};

struct LearnerEntry {
  LearnerConfig config;
  // Utility label (e.g. "ROI") -> learning rate used in cells with that model.
  std::map<std::string, double> learning_rate_by_utility;

  LearnerConfig Resolve(const UtilityModel& u) const {
    LearnerConfig c = config;
    const auto it = learning_rate_by_utility.find(ToString(u.kind));
    if (it != learning_rate_by_utility.end()) c.learning_rate = it->second;
    return c;
  }

  bool operator==(const LearnerEntry&) const = default;
};

// Run lengths and sample sizes; the part of a config that presets replace.
struct ScaleConfig {
  std::int64_t iterations = 500000;
  int repetitions = 100;
  std::int64_t window = 2000;            // median-bid / revenue window
  std::int64_t end_phase = 100000;       // trailing rounds for end revenue
  std::int64_t strategy_window = 40000;  // trailing rounds aggregated to strategies
  std::int64_t samples = std::int64_t{1} << 22;
  int runs = 10;

  bool operator==(const ScaleConfig&) const = default;

  static ScaleConfig Preset(ExperimentKind kind, const std::string& name) {
    if (name != "paper" && name != "ci") throw ValidationError("unknown preset: " + name);
    const bool paper = name == "paper";
    ScaleConfig s;
    switch (kind) {
      case ExperimentKind::kComplete:
        s.iterations = paper ? 500000 : 100000;
        s.repetitions = paper ? 100 : 20;
        s.window = 2000;
        s.end_phase = paper ? 100000 : 20000;
        s.strategy_window = s.end_phase;
        break;
      case ExperimentKind::kIncomplete:
        s.iterations = paper ? 10000000 : 2000000;
        s.repetitions = 10;
        s.window = 40000;
        s.end_phase = 40000;
        s.strategy_window = 40000;
        break;
      case ExperimentKind::kSoda:
      case ExperimentKind::kRevenue:
        s.repetitions = 1;
        s.iterations = 0;
        break;
    }
    s.samples = paper ? (std::int64_t{1} << 22) : (std::int64_t{1} << 18);
    s.runs = 10;
    return s;
  }
};

// Cartesian sweep over game variations; empty lists keep the base value.
struct SweepConfig {
  std::vector<int> n_players;
  std::vector<PaymentRule> payments;
  std::vector<UtilityModel> utilities;
  std::vector<std::string> learners;                 // symmetric populations
  std::vector<std::vector<std::string>> learner_pairs;  // one name per player

  bool operator==(const SweepConfig&) const = default;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kSoda;
  std::string name = "experiment";
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
  GameConfig game;
  std::vector<LearnerEntry> learners;
  SodaConfig soda;
  ScaleConfig scale;
  SweepConfig sweep;
  bool evaluate_analytic = true;

  bool operator==(const ExperimentConfig&) const = default;

  const LearnerEntry& learner(const std::string& name) const {
    for (const auto& l : learners) {
      if (l.config.name == name) return l;
    }
    throw ValidationError("config references unknown learner: " + name);
  }
};

// Structural checks that do not need the cell expansion.
inline void Validate(const ExperimentConfig& c) {
  const ScaleConfig& s = c.scale;
  const bool simulated =
      c.kind == ExperimentKind::kComplete || c.kind == ExperimentKind::kIncomplete;
  if (simulated) {
    if (s.iterations < 1) throw ValidationError("config: iterations must be >= 1");
    if (s.repetitions < 1) throw ValidationError("config: repetitions must be >= 1");
    if (s.window < 1 || s.end_phase < 1 || s.strategy_window < 1) {
      throw ValidationError("config: windows must be >= 1");
    }
    if (s.end_phase > s.iterations || s.strategy_window > s.iterations) {
      throw ValidationError("config: windows longer than the run");
    }
    if (c.learners.empty()) throw ValidationError("config: no learners");
    for (const auto& name : c.sweep.learners) c.learner(name);
    for (const auto& pair : c.sweep.learner_pairs) {
      for (const auto& name : pair) c.learner(name);
    }
  } else {
    if (s.samples < 1 || s.runs < 1) throw ValidationError("config: samples and runs must be >= 1");
    if (!(c.soda.tolerance > 0.0) || !(c.soda.eta0 > 0.0) || c.soda.max_iters < 0) {
      throw ValidationError("config: invalid SODA schedule");
    }
  }
  if (c.game.n_players < 1) throw ValidationError("config: n_players must be >= 1");
  for (int n : c.sweep.n_players) {
    if (n < 1) throw ValidationError("config: n_players must be >= 1");
  }
  if (c.kind == ExperimentKind::kRevenue && c.sweep.utilities.empty()) {
    throw ValidationError("config: revenue comparison needs sweep.utilities");
  }
}

// ---------------------------------------------------------------------------
// JSON conversion.

namespace internal {

inline void Require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("config: missing '") + key + "'");
}

inline Json UtilityToJson(const UtilityModel& u) {
  Json j{{"kind", ToString(u.kind)}};
  if (u.has_barrier()) j["budget"] = u.budget;
  if (u.kind == UtilityKind::kROIS) j["mix"] = u.mix;
  return j;
}

inline UtilityModel UtilityFromJson(const Json& j) {
  UtilityModel u;
  if (j.is_string()) {
    u.kind = UtilityKindFromString(j.get<std::string>());
    return u;
  }
  Require(j, "kind");
  u.kind = UtilityKindFromString(j.at("kind").get<std::string>());
  u.budget = j.value("budget", u.budget);
  u.mix = j.value("mix", u.mix);
  return u;
}

inline Json GridToJson(const GridConfig& g) {
  if (!g.explicit_points.empty()) return Json{{"points", g.explicit_points}};
  Json j{{"points", g.points}, {"lo", g.lo}, {"hi", g.hi}};
  if (g.budget_margin) j["budget_margin"] = *g.budget_margin;
  return j;
}

inline GridConfig GridFromJson(const Json& j) {
  GridConfig g;
  Require(j, "points");
  if (j.at("points").is_array()) {
    g.explicit_points = j.at("points").get<std::vector<double>>();
    if (g.explicit_points.empty()) throw ValidationError("config: empty grid");
    return g;
  }
  g.points = j.at("points").get<int>();
  if (g.points < 1) throw ValidationError("config: grid needs at least one point");
  g.lo = j.value("lo", g.lo);
  g.hi = j.value("hi", g.hi);
  if (j.contains("budget_margin")) g.budget_margin = j.at("budget_margin").get<double>();
  return g;
}

inline Json LearnerToJson(const LearnerEntry& e) {
  const LearnerConfig& c = e.config;
  Json j{{"name", c.name},
         {"algorithm", ToString(c.algorithm)},
         {"learning_rate", c.learning_rate},
         {"exploration", c.exploration},
         {"decay", c.decay},
         {"discount", c.discount},
         {"initial_q", c.initial_q},
         {"ucb_bonus", c.ucb_bonus},
         {"prior_mean", c.prior_mean},
         {"prior_variance", c.prior_variance},
         {"noise_sd", c.noise_sd},
         {"reward_scale", c.reward_scale},
         {"argmax_ties", ToString(c.argmax_ties)}};
  if (!e.learning_rate_by_utility.empty()) {
    j["learning_rate_by_utility"] = e.learning_rate_by_utility;
  }
  return j;
}

// {"preset": "<row name>", ...overrides} or a fully explicit learner.
inline LearnerEntry LearnerFromJson(const Json& j) {
  LearnerEntry e;
  LearnerConfig& c = e.config;
  if (j.is_string()) {
    c = LearnerConfig::Preset(j.get<std::string>());
    return e;
  }
  if (j.contains("preset")) {
    c = LearnerConfig::Preset(j.at("preset").get<std::string>());
  } else {
    Require(j, "algorithm");
  }
  if (j.contains("algorithm")) c.algorithm = AlgorithmFromString(j.at("algorithm").get<std::string>());
  c.name = j.value("name", c.name);
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.exploration = j.value("exploration", c.exploration);
  c.decay = j.value("decay", c.decay);
  c.discount = j.value("discount", c.discount);
  c.initial_q = j.value("initial_q", c.initial_q);
  c.ucb_bonus = j.value("ucb_bonus", c.ucb_bonus);
  c.prior_mean = j.value("prior_mean", c.prior_mean);
  c.prior_variance = j.value("prior_variance", c.prior_variance);
  c.noise_sd = j.value("noise_sd", c.noise_sd);
  c.reward_scale = j.value("reward_scale", c.reward_scale);
  if (j.contains("argmax_ties")) {
    c.argmax_ties = ArgmaxTieFromString(j.at("argmax_ties").get<std::string>());
  }
  if (j.contains("learning_rate_by_utility")) {
    e.learning_rate_by_utility =
        j.at("learning_rate_by_utility").get<std::map<std::string, double>>();
  }
  return e;
}

}  // namespace internal

inline Json ToJson(const ExperimentConfig& c) {
  Json game{{"n_players", c.game.n_players},
            {"values", internal::GridToJson(c.game.values)},
            {"actions", internal::GridToJson(c.game.actions)},
            {"prior",
             {{"kind", ToString(c.game.prior.kind)},
              {"mu", c.game.prior.mu},
              {"sigma", c.game.prior.sigma}}},
            {"payment", ToString(c.game.payment)},
            {"tie", ToString(c.game.tie)},
            {"reserve", c.game.reserve},
            {"snap_reserve", c.game.snap_reserve}};
  game["utilities"] = Json::array();
  for (const auto& u : c.game.utilities) game["utilities"].push_back(internal::UtilityToJson(u));

  Json learners = Json::array();
  for (const auto& l : c.learners) learners.push_back(internal::LearnerToJson(l));

  Json sweep = Json::object();
  if (!c.sweep.n_players.empty()) sweep["n_players"] = c.sweep.n_players;
  if (!c.sweep.payments.empty()) {
    sweep["payments"] = Json::array();
    for (auto p : c.sweep.payments) sweep["payments"].push_back(ToString(p));
  }
  if (!c.sweep.utilities.empty()) {
    sweep["utilities"] = Json::array();
    for (const auto& u : c.sweep.utilities) sweep["utilities"].push_back(internal::UtilityToJson(u));
  }
  if (!c.sweep.learners.empty()) sweep["learners"] = c.sweep.learners;
  if (!c.sweep.learner_pairs.empty()) sweep["learner_pairs"] = c.sweep.learner_pairs;

  return Json{
      {"experiment", ToString(c.kind)},
      {"name", c.name},
      {"seed", c.seed},
      {"threads", c.threads},
      {"game", game},
      {"learners", learners},
      {"soda",
       {{"rule", ToString(c.soda.rule)},
        {"eta0", c.soda.eta0},
        {"eta_decay", c.soda.eta_decay},
        {"max_iters", c.soda.max_iters},
        {"tolerance", c.soda.tolerance},
        {"exploit_symmetry", c.soda.exploit_symmetry}}},
      {"scale",
       {{"iterations", c.scale.iterations},
        {"repetitions", c.scale.repetitions},
        {"window", c.scale.window},
        {"end_phase", c.scale.end_phase},
        {"strategy_window", c.scale.strategy_window},
        {"samples", c.scale.samples},
        {"runs", c.scale.runs}}},
      {"sweep", sweep},
      {"evaluate_analytic", c.evaluate_analytic}};
}

// Parses a config. `scale` starts from the `paper` preset of the experiment
// kind, so configs only need to list what they change.
inline ExperimentConfig ConfigFromJson(const Json& j) {
  ExperimentConfig c;
  internal::Require(j, "experiment");
  c.kind = ExperimentKindFromString(j.at("experiment").get<std::string>());
  c.name = j.value("name", ToString(c.kind));
  c.seed = j.value("seed", c.seed);
  c.threads = j.value("threads", c.threads);
  c.evaluate_analytic = j.value("evaluate_analytic", c.evaluate_analytic);

  internal::Require(j, "game");
  const Json& g = j.at("game");
  c.game.n_players = g.value("n_players", c.game.n_players);
  internal::Require(g, "values");
  internal::Require(g, "actions");
  c.game.values = internal::GridFromJson(g.at("values"));
  c.game.actions = internal::GridFromJson(g.at("actions"));
  if (g.contains("prior")) {
    const Json& p = g.at("prior");
    if (p.is_string()) {
      c.game.prior.kind = PriorKindFromString(p.get<std::string>());
    } else {
      c.game.prior.kind = PriorKindFromString(p.value("kind", std::string("uniform")));
      c.game.prior.mu = p.value("mu", c.game.prior.mu);
      c.game.prior.sigma = p.value("sigma", c.game.prior.sigma);
    }
  }
  if (g.contains("payment")) c.game.payment = PaymentRuleFromString(g.at("payment").get<std::string>());
  if (g.contains("tie")) c.game.tie = TieRuleFromString(g.at("tie").get<std::string>());
  c.game.reserve = g.value("reserve", c.game.reserve);
  c.game.snap_reserve = g.value("snap_reserve", c.game.snap_reserve);
  if (g.contains("utilities")) {
    c.game.utilities.clear();
    for (const auto& u : g.at("utilities")) c.game.utilities.push_back(internal::UtilityFromJson(u));
    if (c.game.utilities.empty()) throw ValidationError("config: empty utility list");
  }

  if (j.contains("learners")) {
    for (const auto& l : j.at("learners")) c.learners.push_back(internal::LearnerFromJson(l));
  }

  if (j.contains("soda")) {
    const Json& s = j.at("soda");
    if (s.contains("rule")) c.soda.rule = UpdateRuleFromString(s.at("rule").get<std::string>());
    c.soda.eta0 = s.value("eta0", c.soda.eta0);
    c.soda.eta_decay = s.value("eta_decay", c.soda.eta_decay);
    c.soda.max_iters = s.value("max_iters", c.soda.max_iters);
    c.soda.tolerance = s.value("tolerance", c.soda.tolerance);
    c.soda.exploit_symmetry = s.value("exploit_symmetry", c.soda.exploit_symmetry);
  }

  c.scale = ScaleConfig::Preset(c.kind, "paper");
  if (j.contains("scale")) {
    const Json& s = j.at("scale");
    c.scale.iterations = s.value("iterations", c.scale.iterations);
    c.scale.repetitions = s.value("repetitions", c.scale.repetitions);
    c.scale.window = s.value("window", c.scale.window);
    c.scale.end_phase = s.value("end_phase", c.scale.end_phase);
    c.scale.strategy_window = s.value("strategy_window", c.scale.strategy_window);
    c.scale.samples = s.value("samples", c.scale.samples);
    c.scale.runs = s.value("runs", c.scale.runs);
  }

  if (j.contains("sweep")) {
    const Json& s = j.at("sweep");
    if (s.contains("n_players")) c.sweep.n_players = s.at("n_players").get<std::vector<int>>();
    if (s.contains("payments")) {
      for (const auto& p : s.at("payments")) c.sweep.payments.push_back(PaymentRuleFromString(p.get<std::string>()));
    }
    if (s.contains("utilities")) {
      for (const auto& u : s.at("utilities")) c.sweep.utilities.push_back(internal::UtilityFromJson(u));
    }
    if (s.contains("learners")) c.sweep.learners = s.at("learners").get<std::vector<std::string>>();
    if (s.contains("learner_pairs")) {
      c.sweep.learner_pairs = s.at("learner_pairs").get<std::vector<std::vector<std::string>>>();
    }
  }
  Validate(c);
  return c;
}

inline ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open config " + path);
  Json j;
  try {
    j = Json::parse(is);
  } catch (const Json::exception& e) {
    throw ValidationError("config " + path + ": " + e.what());
  }
  return ConfigFromJson(j);
}

inline std::string Serialize(const ExperimentConfig& c) { return ToJson(c).dump(2); }

}  // namespace auctionlab
