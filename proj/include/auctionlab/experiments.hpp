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
#include <atomic>
#include <cctype>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "auctionlab/analytic.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/config.hpp"
#include "auctionlab/metrics.hpp"
#include "auctionlab/population.hpp"
#include "auctionlab/random.hpp"
#include "auctionlab/soda.hpp"
#include "auctionlab/strategy_io.hpp"

namespace auctionlab {

// One point of an experiment's sweep: a concrete game plus, for simulated
// experiments, one learner per player.
struct Cell {
  std::string label;
  GameSpec spec;
  double analytic_reserve = 0.0;  // configured reserve, before snapping
  std::vector<LearnerConfig> learners;
};

namespace internal {

// Keeps labels usable as directory names.
inline std::string Slug(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (s.compare(i, 2, "\xCE\xB5") == 0) {  // epsilon
      out += "eps";
      ++i;
    } else if (s.compare(i, 2, "\xCE\xB3") == 0) {  // gamma
      out += "gamma";
      ++i;
    } else if (std::isalnum(c) || c == '.' || c == '=' || c == '+') {
      out += static_cast<char>(c);
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

inline std::string PaymentShort(PaymentRule p) {
  return p == PaymentRule::kFirstPrice ? "FP" : "SP";
}

inline std::string UtilityLabel(const std::vector<UtilityModel>& us) {
  std::string label = us.front().Label();
  for (std::size_t k = 1; k < us.size(); ++k) {
    if (!(us[k] == us.front())) {
      label = us.front().Label();
      for (std::size_t i = 1; i < us.size(); ++i) label += "_vs_" + us[i].Label();
      break;
    }
  }
  return label;
}

}  // namespace internal

inline GameSpec BuildGame(const GameConfig& g, int n_players,
                          PaymentRule payment,
                          const std::vector<UtilityModel>& utilities) {
  std::optional<double> budget;
  for (const auto& u : utilities) {
    if (u.has_barrier()) budget = budget ? std::min(*budget, u.budget) : u.budget;
  }
  ValueGrid values(g.values.Build(std::nullopt));
  ActionGrid actions(g.actions.Build(budget));
  double reserve = g.reserve;
  if (g.snap_reserve) reserve = actions[internal::NearestIndex(actions.points(), reserve)];
  return MakeGame(n_players, std::move(values), std::move(actions), g.prior, payment,
                  g.tie, reserve, utilities);
}

// Expands the sweep into concrete cells, in a fixed order.
inline std::vector<Cell> ExpandCells(const ExperimentConfig& c) {
  Validate(c);
  const bool simulated =
      c.kind == ExperimentKind::kComplete || c.kind == ExperimentKind::kIncomplete;
  std::vector<int> ns = c.sweep.n_players;
  if (ns.empty()) ns = {c.game.n_players};
  std::vector<PaymentRule> pays = c.sweep.payments;
  if (pays.empty()) {
    if (c.kind == ExperimentKind::kRevenue) {
      pays = {PaymentRule::kFirstPrice, PaymentRule::kSecondPrice};
    } else {
      pays = {c.game.payment};
    }
  }

  // Utility profiles: a single entry means every player shares it.
  std::vector<std::vector<UtilityModel>> profiles;
  if (c.kind == ExperimentKind::kRevenue) {
    for (const auto& a : c.sweep.utilities) {
      for (const auto& b : c.sweep.utilities) profiles.push_back({a, b});
    }
  } else if (!c.sweep.utilities.empty()) {
    for (const auto& u : c.sweep.utilities) profiles.push_back({u});
  } else {
    profiles.push_back(c.game.utilities);
  }

  std::vector<std::vector<std::string>> assignments;
  if (simulated) {
    if (!c.sweep.learner_pairs.empty()) {
      assignments = c.sweep.learner_pairs;
    } else if (!c.sweep.learners.empty()) {
      for (const auto& name : c.sweep.learners) assignments.push_back({name});
    } else {
      std::vector<std::string> names;
      for (const auto& l : c.learners) names.push_back(l.config.name);
      assignments.push_back(names);
    }
  } else {
    assignments.push_back({});
  }

  std::vector<Cell> cells;
  for (const auto& profile : profiles) {
    for (PaymentRule pay : pays) {
      for (int n : ns) {
        for (const auto& names : assignments) {
          std::vector<UtilityModel> us;
          if (c.kind == ExperimentKind::kRevenue) {
            // Player 0 uses the first model, every other player the second.
            us.push_back(profile[0]);
            for (int k = 1; k < n; ++k) us.push_back(profile[1]);
          } else if (profile.size() == 1) {
            us = profile;
          } else if (static_cast<int>(profile.size()) == n) {
            us = profile;
          } else {
            throw ValidationError("config: utilities must list one model or one per player");
          }
          Cell cell;
          cell.spec = BuildGame(c.game, n, pay, us);
          cell.analytic_reserve = c.game.reserve;
          std::ostringstream label;
          label << internal::UtilityLabel(us) << '-' << internal::PaymentShort(pay)
                << "-N" << n;
          if (simulated) {
            if (names.size() != 1 && static_cast<int>(names.size()) != n) {
              throw ValidationError("config: learner assignment must name one learner or one per player");
            }
            for (int k = 0; k < n; ++k) {
              const auto& entry = c.learner(names.size() == 1 ? names[0] : names[k]);
              cell.learners.push_back(entry.Resolve(cell.spec.utility(k)));
            }
            label << '-' << names[0];
            for (std::size_t k = 1; k < names.size(); ++k) label << "_vs_" << names[k];
          }
          cell.label = internal::Slug(label.str());
          cells.push_back(std::move(cell));
        }
      }
    }
  }
  return cells;
}

// Closed-form equilibrium for the cell, where one is known: uniform prior,
// identical utilities, QL or ROI (first price) or truthful (second price), or
// the ROS max-bid equilibrium.
inline std::optional<AnalyticStrategy> AnalyticFor(const Cell& cell) {
  const GameSpec& g = cell.spec;
  if (!g.symmetric_utilities() || g.prior_spec.kind != PriorKind::kUniform) {
    return std::nullopt;
  }
  AnalyticStrategy a;
  a.n_players = g.n_players;
  a.reserve = cell.analytic_reserve;
  a.max_bid = g.actions.max_bid();
  const bool fp = g.payment == PaymentRule::kFirstPrice;
  switch (g.utility(0).kind) {
    case UtilityKind::kQL:
      a.kind = fp ? AnalyticKind::kQLFirstPrice : AnalyticKind::kTruthful;
      return a;
    case UtilityKind::kROI:
      a.kind = fp ? AnalyticKind::kROIFirstPrice : AnalyticKind::kTruthful;
      return a;
    case UtilityKind::kROS:
      a.kind = AnalyticKind::kMaxBid;
      return a;
    default:
      return std::nullopt;
  }
}

// Runs f(0..count-1) on a pool of worker threads; f must only write to its
// own result slot. The first exception is rethrown after all workers stop.
template <typename F>
void ParallelFor(int count, int threads, F&& f) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Repeated auctions with learning agents (complete and incomplete
// information share the code path; complete information is the one-value
// population).

struct SimulationRun {
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> median_bids;  // [agent][window]
  std::vector<double> mean_revenue;              // [window]
  double end_revenue = 0.0;                      // mean over the end phase
  std::vector<double> end_median_bid;            // [agent], over the end phase
  std::vector<EmpiricalStrategy> counts;         // [agent], strategy window
  std::vector<LossReport> losses;                // [agent], aggregated strategies
  int flagged_rows = 0;

  double mean_loss() const {
    double s = 0.0;
    for (const auto& l : losses) s += l.loss;
    return losses.empty() ? 0.0 : s / static_cast<double>(losses.size());
  }
};

inline SimulationRun RunSimulation(const Cell& cell, const ScaleConfig& scale,
                                   std::uint64_t seed) {
  const GameSpec& spec = cell.spec;
  const int n = spec.n_players;
  const int nv = spec.values.size();
  const int m = spec.actions.size();
  std::vector<PopulationAgent> agents;
  for (int k = 0; k < n; ++k) agents.emplace_back(cell.learners[k], nv, m);

  SimulationRun run;
  run.seed = seed;
  run.counts.assign(n, EmpiricalStrategy(nv, m));
  Rng rng(seed);
  WindowAccumulator windows(n, static_cast<std::size_t>(scale.window));
  std::vector<PopulationDraw> draws(n);
  std::vector<int> bid_idx(n);
  std::vector<double> bids(n);
  std::vector<std::vector<double>> end_bids(n);
  for (auto& e : end_bids) e.reserve(static_cast<std::size_t>(scale.end_phase));
  const int first_ok = spec.first_eligible();
  const std::int64_t end_start = scale.iterations - scale.end_phase;
  const std::int64_t strategy_start = scale.iterations - scale.strategy_window;
  double end_sum = 0.0;

  for (std::int64_t t = 0; t < scale.iterations; ++t) {
    const double revenue = PopulationRound(spec, agents, first_ok, rng, draws, bid_idx);
    for (int k = 0; k < n; ++k) bids[k] = spec.actions[draws[k].bid_idx];
    windows.Add(bids, revenue);
    if (t >= end_start) {
      end_sum += revenue;
      for (int k = 0; k < n; ++k) end_bids[k].push_back(bids[k]);
    }
    if (t >= strategy_start) {
      for (int k = 0; k < n; ++k) run.counts[k].Record(draws[k].value_idx, draws[k].bid_idx);
    }
  }

  run.end_revenue = end_sum / static_cast<double>(scale.end_phase);
  for (int k = 0; k < n; ++k) {
    run.median_bids.push_back(windows.median_bids(k));
    run.end_median_bid.push_back(Median(std::move(end_bids[k])));
  }
  run.mean_revenue = windows.mean_revenue();

  StrategyProfile profile;
  for (int k = 0; k < n; ++k) {
    AggregatedStrategy agg = Aggregate(run.counts[k], spec);
    run.flagged_rows += agg.flagged_count();
    profile.push_back(std::move(agg.strategy));
  }
  for (int k = 0; k < n; ++k) run.losses.push_back(UtilityLoss(spec, k, profile));
  return run;
}

struct SimulationCellResult {
  Cell cell;
  std::vector<SimulationRun> runs;

  RunStatistic end_revenue() const {
    std::vector<double> xs;
    for (const auto& r : runs) xs.push_back(r.end_revenue);
    return RunStatistic::From(xs);
  }
  RunStatistic loss() const {
    std::vector<double> xs;
    for (const auto& r : runs) xs.push_back(r.mean_loss());
    return RunStatistic::From(xs);
  }
  RunStatistic end_median_bid(int agent) const {
    std::vector<double> xs;
    for (const auto& r : runs) xs.push_back(r.end_median_bid[agent]);
    return RunStatistic::From(xs);
  }
  // Strategy counts summed over repetitions.
  AggregatedStrategy pooled(int agent) const {
    EmpiricalStrategy sum(cell.spec.values.size(), cell.spec.actions.size());
    for (const auto& r : runs) {
      for (int i = 0; i < sum.rows(); ++i) {
        for (int j = 0; j < sum.cols(); ++j) {
          sum.Add(i, j, r.counts[agent].count(i, j));
        }
      }
    }
    return Aggregate(sum, cell.spec);
  }
};

struct SimulationResults {
  ExperimentConfig config;
  std::vector<SimulationCellResult> cells;

  const SimulationCellResult& cell(const std::string& label) const {
    for (const auto& c : cells) {
      if (c.cell.label == label) return c;
    }
    throw ValidationError("no cell labelled " + label);
  }
};

inline std::uint64_t CellSeed(std::uint64_t base, std::size_t cell_index) {
  return DeriveSeed(base, static_cast<std::uint64_t>(cell_index));
}

// Repetition k of cell c uses DeriveSeed(DeriveSeed(seed, c), k).
inline SimulationResults RunSimulations(const ExperimentConfig& config,
                                        std::ostream* log = nullptr) {
  SimulationResults out;
  out.config = config;
  const std::vector<Cell> cells = ExpandCells(config);
  const int reps = config.scale.repetitions;
  for (const auto& c : cells) out.cells.push_back({c, std::vector<SimulationRun>(reps)});
  std::mutex log_mu;
  ParallelFor(static_cast<int>(cells.size()) * reps, config.threads, [&](int job) {
    const int ci = job / reps;
    const int rep = job % reps;
    const std::uint64_t seed = DeriveSeed(CellSeed(config.seed, ci), rep);
    out.cells[ci].runs[rep] = RunSimulation(cells[ci], config.scale, seed);
    if (log) {
      std::lock_guard<std::mutex> lock(log_mu);
      *log << cells[ci].label << " repetition " << rep << " done\n";
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Equilibrium computation and its evaluation.

struct SodaCellResult {
  Cell cell;
  SodaResult solve;
  std::optional<AnalyticStrategy> analytic;
  std::optional<RunStatistic> utility_loss;  // L vs the analytic equilibrium
  std::optional<RunStatistic> l2;
  RevenueEstimate revenue;
};

struct SodaResults {
  ExperimentConfig config;
  std::vector<SodaCellResult> cells;

  const SodaCellResult& cell(const std::string& label) const {
    for (const auto& c : cells) {
      if (c.cell.label == label) return c;
    }
    throw ValidationError("no cell labelled " + label);
  }
};

inline SodaCellResult RunSodaCell(const Cell& cell, const ExperimentConfig& config,
                                  std::uint64_t seed) {
  SodaCellResult r;
  r.cell = cell;
  r.solve = Solve(cell.spec, config.soda);
  MonteCarloOptions mc;
  mc.samples = config.scale.samples;
  mc.runs = config.scale.runs;
  if (config.evaluate_analytic) r.analytic = AnalyticFor(cell);
  if (r.analytic) {
    const BidPolicy policy = PolicyFromStrategy(cell.spec, r.solve.strategies[0]);
    mc.seed = DeriveSeed(seed, 1);
    r.utility_loss = UtilityLossVsAnalytic(cell.spec, policy, *r.analytic, mc);
    mc.seed = DeriveSeed(seed, 2);
    r.l2 = L2Distance(cell.spec, policy, *r.analytic, mc);
  }
  mc.seed = DeriveSeed(seed, 3);
  r.revenue = SimulateRevenue(cell.spec, r.solve.strategies, mc);
  return r;
}

inline SodaResults RunSodaCells(const ExperimentConfig& config,
                                std::ostream* log = nullptr) {
  SodaResults out;
  out.config = config;
  const std::vector<Cell> cells = ExpandCells(config);
  out.cells.resize(cells.size());
  std::mutex log_mu;
  ParallelFor(static_cast<int>(cells.size()), config.threads, [&](int ci) {
    out.cells[ci] = RunSodaCell(cells[ci], config, CellSeed(config.seed, ci));
    if (log) {
      std::lock_guard<std::mutex> lock(log_mu);
      *log << cells[ci].label << " done after " << out.cells[ci].solve.iterations
           << " iterations\n";
    }
  });
  return out;
}

// Revenue of the first-price cell relative to the matching second-price
// cell, per ordered utility pair.
struct RevenueComparison {
  UtilityModel player0;
  UtilityModel others;
  int n_players = 2;
  RevenueEstimate first_price;
  RevenueEstimate second_price;

  double relative_difference() const {
    return first_price.mean / second_price.mean - 1.0;
  }
};

inline std::vector<RevenueComparison> CompareRevenue(const SodaResults& r) {
  std::vector<RevenueComparison> out;
  for (const auto& fp : r.cells) {
    if (fp.cell.spec.payment != PaymentRule::kFirstPrice) continue;
    for (const auto& sp : r.cells) {
      const GameSpec& a = fp.cell.spec;
      const GameSpec& b = sp.cell.spec;
      if (b.payment != PaymentRule::kSecondPrice || a.n_players != b.n_players ||
          !(a.utilities == b.utilities)) {
        continue;
      }
      RevenueComparison c;
      c.player0 = a.utility(0);
      c.others = a.utility(a.n_players > 1 ? 1 : 0);
      c.n_players = a.n_players;
      c.first_price = fp.revenue;
      c.second_price = sp.revenue;
      out.push_back(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output files.

namespace internal {

inline std::string Num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

inline std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const std::vector<std::string>& header)
      : os_(path) {
    if (!os_) throw std::runtime_error("cannot write " + path.string());
    Row(header);
  }
  void Row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << Quote(cells[i]);
    os_ << '\n';
  }

 private:
  std::ofstream os_;
};

inline std::string Opt(const std::optional<double>& x) { return x ? Num(*x) : ""; }

inline std::filesystem::path CellDir(const std::filesystem::path& out,
                                     std::size_t cell_count, const std::string& label) {
  if (cell_count == 1) return out;
  auto dir = out / "cells" / label;
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string LearnerNames(const Cell& c) {
  std::string s;
  for (std::size_t k = 0; k < c.learners.size(); ++k) {
    if (k) s += " vs ";
    s += c.learners[k].name;
  }
  return s;
}

}  // namespace internal

inline void WriteConfigCopy(const ExperimentConfig& c, const std::filesystem::path& out) {
  std::ofstream os(out / "config.json");
  os << Serialize(c) << '\n';
}

inline void WriteSimulationOutputs(const SimulationResults& r,
                                   const std::filesystem::path& out) {
  using internal::Num;
  std::filesystem::create_directories(out);
  WriteConfigCopy(r.config, out);
  internal::CsvFile summary(out / "summary.csv",
                            {"cell", "repetition", "seed", "agent", "learner",
                             "end_median_bid", "end_revenue", "loss", "flagged_rows"});
  internal::CsvFile windows(out / "windows.csv",
                            {"cell", "repetition", "window", "first_round", "agent",
                             "median_bid", "mean_revenue"});
  internal::CsvFile report(out / "report.csv",
                           {"cell", "utility_model", "pricing_rule", "n_players",
                            "learner", "runs", "ell", "ell_std", "L", "L_std", "L2",
                            "L2_std", "revenue", "revenue_std", "flagged_rows"});
  for (const auto& cr : r.cells) {
    const Cell& cell = cr.cell;
    const int n = cell.spec.n_players;
    int flagged = 0;
    for (std::size_t rep = 0; rep < cr.runs.size(); ++rep) {
      const SimulationRun& run = cr.runs[rep];
      flagged += run.flagged_rows;
      for (int k = 0; k < n; ++k) {
        summary.Row({cell.label, std::to_string(rep), std::to_string(run.seed),
                     std::to_string(k), cell.learners[k].name, Num(run.end_median_bid[k]),
                     Num(run.end_revenue), Num(run.losses[k].loss),
                     std::to_string(run.flagged_rows)});
      }
      for (std::size_t w = 0; w < run.mean_revenue.size(); ++w) {
        for (int k = 0; k < n; ++k) {
          windows.Row({cell.label, std::to_string(rep), std::to_string(w),
                       std::to_string(static_cast<std::int64_t>(w) * r.config.scale.window),
                       std::to_string(k), Num(run.median_bids[k][w]),
                       Num(run.mean_revenue[w])});
        }
      }
    }
    const RunStatistic loss = cr.loss();
    const RunStatistic rev = cr.end_revenue();
    report.Row({cell.label, internal::UtilityLabel(cell.spec.utilities),
                ToString(cell.spec.payment), std::to_string(n),
                internal::LearnerNames(cell), std::to_string(cr.runs.size()),
                Num(loss.mean), Num(loss.std), "", "", "", "", Num(rev.mean),
                Num(rev.std), std::to_string(flagged)});
    const auto dir = internal::CellDir(out, r.cells.size(), cell.label);
    for (int k = 0; k < n; ++k) {
      const AggregatedStrategy agg = cr.pooled(k);
      SaveStrategy((dir / ("strategy_" + std::to_string(k) + ".txt")).string(),
                   MakeStrategyFile(cell.spec, agg.strategy, agg.flagged));
    }
  }
}

inline void WriteSodaOutputs(const SodaResults& r, const std::filesystem::path& out) {
  using internal::Num;
  using internal::Opt;
  std::filesystem::create_directories(out);
  WriteConfigCopy(r.config, out);
  internal::CsvFile summary(out / "summary.csv",
                            {"cell", "player", "utility_model", "pricing_rule",
                             "n_players", "iterations", "converged", "ell",
                             "certifiable", "utility", "best_response_utility"});
  internal::CsvFile windows(out / "windows.csv", {"cell", "iteration", "max_ell"});
  internal::CsvFile report(out / "report.csv",
                           {"cell", "utility_model", "pricing_rule", "n_players",
                            "learner", "runs", "ell", "ell_std", "L", "L_std", "L2",
                            "L2_std", "revenue", "revenue_std", "flagged_rows"});
  for (const auto& cr : r.cells) {
    const Cell& cell = cr.cell;
    const GameSpec& g = cell.spec;
    for (int k = 0; k < g.n_players; ++k) {
      const LossReport& l = cr.solve.losses[k];
      summary.Row({cell.label, std::to_string(k), g.utility(k).Label(),
                   ToString(g.payment), std::to_string(g.n_players),
                   std::to_string(cr.solve.iterations), cr.solve.converged ? "1" : "0",
                   Num(l.loss), l.certifiable ? "1" : "0", Num(l.utility),
                   Num(l.best_utility)});
    }
    for (std::size_t t = 0; t < cr.solve.loss_history.size(); ++t) {
      windows.Row({cell.label, std::to_string(t), Num(cr.solve.loss_history[t])});
    }
    auto mean = [](const std::optional<RunStatistic>& s) {
      return s ? std::optional<double>(s->mean) : std::nullopt;
    };
    auto sd = [](const std::optional<RunStatistic>& s) {
      return s ? std::optional<double>(s->std) : std::nullopt;
    };
    report.Row({cell.label, internal::UtilityLabel(g.utilities), ToString(g.payment),
                std::to_string(g.n_players), "SODA(" + ToString(r.config.soda.rule) + ")",
                std::to_string(cr.revenue.runs), Num(cr.solve.max_loss()), "0",
                Opt(mean(cr.utility_loss)), Opt(sd(cr.utility_loss)), Opt(mean(cr.l2)),
                Opt(sd(cr.l2)), Num(cr.revenue.mean), Num(cr.revenue.std),
                std::to_string(cr.revenue.flagged_rows)});
    const auto dir = internal::CellDir(out, r.cells.size(), cell.label);
    for (int k = 0; k < g.n_players; ++k) {
      SaveStrategy((dir / ("strategy_" + std::to_string(k) + ".txt")).string(),
                   MakeStrategyFile(g, cr.solve.strategies[k]));
    }
  }
}

inline void WriteRevenueOutputs(const SodaResults& r, const std::filesystem::path& out) {
  using internal::Num;
  WriteSodaOutputs(r, out);
  // The revenue matrix replaces the generic report.
  internal::CsvFile report(out / "report.csv",
                           {"utility_player0", "utility_others", "n_players",
                            "revenue_first_price", "revenue_first_price_std",
                            "revenue_second_price", "revenue_second_price_std",
                            "relative_difference"});
  for (const auto& c : CompareRevenue(r)) {
    report.Row({c.player0.Label(), c.others.Label(), std::to_string(c.n_players),
                Num(c.first_price.mean), Num(c.first_price.std),
                Num(c.second_price.mean), Num(c.second_price.std),
                Num(c.relative_difference())});
  }
}

// Runs an experiment and writes its files into `out`.
inline void RunExperiment(const ExperimentConfig& config,
                          const std::filesystem::path& out,
                          std::ostream* log = nullptr) {
  switch (config.kind) {
    case ExperimentKind::kComplete:
    case ExperimentKind::kIncomplete:
      WriteSimulationOutputs(RunSimulations(config, log), out);
      return;
    case ExperimentKind::kSoda:
      WriteSodaOutputs(RunSodaCells(config, log), out);
      return;
    case ExperimentKind::kRevenue:
      WriteRevenueOutputs(RunSodaCells(config, log), out);
      return;
  }
}

}  // namespace auctionlab
