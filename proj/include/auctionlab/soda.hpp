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
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "auctionlab/auction.hpp"
#include "auctionlab/errors.hpp"

namespace auctionlab {

// Dense row-major n x m matrix. The tag keeps strategies and gradients apart
// in signatures.
template <typename Tag>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[Offset(i, j)]; }
  double operator()(int i, int j) const { return data_[Offset(i, j)]; }
  std::span<double> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double RowSum(int i) const {
    auto r = row(i);
    return std::accumulate(r.begin(), r.end(), 0.0);
  }
  // Column sums: the marginal distribution over actions.
  std::vector<double> ColumnSums() const {
    std::vector<double> out(cols_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
    }
    return out;
  }
  double MaxAbsDiff(const DenseMatrix& o) const {
    double d = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      d = std::max(d, std::abs(data_[k] - o.data_[k]));
    }
    return d;
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t Offset(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct StrategyTag {};
struct GradientTag {};

// s[i][j] = probability of the (value_i, bid_j) pair; row i sums to F(v_i).
using DistributionalStrategy = DenseMatrix<StrategyTag>;
// c[i][j] = ex-interim utility of bidding b_j with value v_i.
using UtilityGradient = DenseMatrix<GradientTag>;
using StrategyProfile = std::vector<DistributionalStrategy>;

// Prior mass of each row spread evenly over all actions.
inline DistributionalStrategy UniformStrategy(const DiscretePrior& prior,
                                              int num_actions) {
  DistributionalStrategy s(prior.size(), num_actions);
  for (int i = 0; i < prior.size(); ++i) {
    for (int j = 0; j < num_actions; ++j) s(i, j) = prior[i] / num_actions;
  }
  return s;
}

// Largest deviation of a row sum from the prior, or +inf if an entry is
// negative or non-finite.
inline double MarginalViolation(const DistributionalStrategy& s,
                                const DiscretePrior& prior) {
  double worst = 0.0;
  for (int i = 0; i < s.rows(); ++i) {
    for (double x : s.row(i)) {
      if (!(x >= 0.0) || !std::isfinite(x)) {
        return std::numeric_limits<double>::infinity();
      }
    }
    worst = std::max(worst, std::abs(s.RowSum(i) - prior[i]));
  }
  return worst;
}

namespace internal {

inline void CheckProfileShape(const GameSpec& spec,
                              std::span<const DistributionalStrategy> profile) {
  if (static_cast<int>(profile.size()) != spec.n_players) {
    throw ValidationError("profile needs one strategy per player");
  }
  for (const auto& s : profile) {
    if (s.rows() != spec.values.size() || s.cols() != spec.actions.size()) {
      throw ValidationError("strategy shape does not match the game grids");
    }
  }
}

}  // namespace internal

// Per-action win statistics against the opponents' bid marginals, reduced to
// the two coefficients of an affine-in-value ex-interim utility:
//   c[i][j] = value_i * slope[j] + intercept[j].
struct BidCoefficients {
  std::vector<double> slope;
  std::vector<double> intercept;
};

// The opponents enter only through the distribution of the highest opposing
// bid. With independent opponents this is a product of their bid CDFs; ties
// at the own bid are handled by the polynomial over the number of tied
// opponents. Cost O(N^2 m) for the tie polynomials plus O(N m).
inline BidCoefficients ComputeBidCoefficients(
    const GameSpec& spec, int player,
    const std::vector<std::vector<double>>& opponent_marginals) {
  const int m = spec.actions.size();
  const int first = spec.first_eligible();
  const UtilityModel& model = spec.utility(player);
  const std::size_t k_opp = opponent_marginals.size();

  // below[k][j] = P(opponent k bids strictly below b_j).
  std::vector<std::vector<double>> below(k_opp, std::vector<double>(m + 1, 0.0));
  for (std::size_t k = 0; k < k_opp; ++k) {
    for (int j = 0; j < m; ++j) {
      below[k][j + 1] = below[k][j] + opponent_marginals[k][j];
    }
  }

  BidCoefficients out{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
  std::vector<double> poly(k_opp + 1);
  double sp_slope = 0.0;      // running sum over strictly lower opposing maxima
  double sp_intercept = 0.0;
  for (int j = 0; j < m; ++j) {
    std::fill(poly.begin(), poly.end(), 0.0);
    poly[0] = 1.0;
    double all_le = 1.0;
    for (std::size_t k = 0; k < k_opp; ++k) {
      const double lo = below[k][j];
      const double at = opponent_marginals[k][j];
      for (std::size_t t = k + 1; t > 0; --t) {
        poly[t] = poly[t] * lo + poly[t - 1] * at;
      }
      poly[0] *= lo;
      all_le *= lo + at;
    }
    const double win_clean = poly[0];
    double win_tied = 0.0;
    if (spec.tie == TieRule::kRandomWinner) {
      for (std::size_t t = 1; t <= k_opp; ++t) win_tied += poly[t] / (t + 1.0);
    }
    if (j >= first) {
      const PayoffTerms own = WinnerTerms(model, spec.actions[j]);
      if (spec.payment == PaymentRule::kFirstPrice) {
        const double w = win_clean + win_tied;
        out.slope[j] = w * own.slope;
        out.intercept[j] = w * own.intercept;
      } else {
        out.slope[j] = sp_slope + win_tied * own.slope;
        out.intercept[j] = sp_intercept + win_tied * own.intercept;
      }
    }
    if (spec.payment == PaymentRule::kSecondPrice) {
      // P(highest opposing bid == b_j); a later own bid b_l > b_j pays
      // max(b_j, reserve).
      const double h = all_le - win_clean;
      if (h != 0.0) {
        const PayoffTerms t =
            WinnerTerms(model, std::max(spec.actions[j], spec.reserve));
        sp_slope += h * t.slope;
        sp_intercept += h * t.intercept;
      }
    }
  }
  return out;
}

// Gradient of player `player`'s expected utility with respect to its own
// distributional strategy. The player's own entry of `profile` is ignored:
// expected utility is linear in it.
inline UtilityGradient Gradient(const GameSpec& spec, int player,
                                std::span<const DistributionalStrategy> profile) {
  internal::CheckProfileShape(spec, profile);
  std::vector<std::vector<double>> marginals;
  marginals.reserve(profile.size() - 1);
  for (int k = 0; k < spec.n_players; ++k) {
    if (k != player) marginals.push_back(profile[k].ColumnSums());
  }
  const BidCoefficients coef = ComputeBidCoefficients(spec, player, marginals);
  UtilityGradient c(spec.values.size(), spec.actions.size());
  for (int i = 0; i < spec.values.size(); ++i) {
    const double v = spec.values[i];
    for (int j = 0; j < spec.actions.size(); ++j) {
      c(i, j) = v * coef.slope[j] + coef.intercept[j];
    }
  }
  return c;
}

// Expected utility sum_ij s_ij c_ij (exact, since utility is linear in s).
inline double ExpectedUtility(const DistributionalStrategy& s,
                              const UtilityGradient& c) {
  double u = 0.0;
  for (std::size_t k = 0; k < s.data().size(); ++k) u += s.data()[k] * c.data()[k];
  return u;
}

// Column of the row maximum; ties go to the lowest bid.
inline int RowArgmax(std::span<const double> row) {
  int best = 0;
  for (int j = 1; j < static_cast<int>(row.size()); ++j) {
    if (row[j] > row[best]) best = j;
  }
  return best;
}

// Pure best response: each row's prior mass on its argmax column. Solves the
// linear program max <s, c> over the scaled simplices exactly.
inline DistributionalStrategy BestResponse(const UtilityGradient& c,
                                           const DiscretePrior& prior) {
  DistributionalStrategy br(c.rows(), c.cols());
  for (int i = 0; i < c.rows(); ++i) br(i, RowArgmax(c.row(i))) = prior[i];
  return br;
}

struct LossReport {
  double loss = 0.0;           // 1 - u(s) / u(br)
  double utility = 0.0;        // u(s, s_-i)
  double best_utility = 0.0;   // u(br, s_-i)
  bool certifiable = false;    // u(br) > 0

  double absolute_loss() const { return best_utility - utility; }
};

inline LossReport LossFromGradient(const DistributionalStrategy& s,
                                   const UtilityGradient& c,
                                   const DiscretePrior& prior) {
  LossReport r;
  r.utility = ExpectedUtility(s, c);
  r.best_utility = ExpectedUtility(BestResponse(c, prior), c);
  r.certifiable = r.best_utility > 0.0;
  r.loss = r.certifiable ? 1.0 - r.utility / r.best_utility
                         : std::numeric_limits<double>::quiet_NaN();
  return r;
}

// Relative utility loss of `player` in the discretized game.
inline LossReport UtilityLoss(const GameSpec& spec, int player,
                              std::span<const DistributionalStrategy> profile) {
  const UtilityGradient c = Gradient(spec, player, profile);
  return LossFromGradient(profile[player], c, spec.prior);
}

// Euclidean projection of `x` onto {y >= 0, sum y = total} (sort-based).
inline void ProjectOntoScaledSimplex(std::span<double> x, double total) {
  const std::size_t m = x.size();
  if (total <= 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    return;
  }
  std::vector<double> u(x.begin(), x.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - total) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) theta = candidate;
  }
  for (double& v : x) v = std::max(v - theta, 0.0);
}

enum class UpdateRule { kEntropicDualAveraging, kProjectedGradient, kFrankWolfe };

inline std::string ToString(UpdateRule r) {
  switch (r) {
    case UpdateRule::kEntropicDualAveraging: return "entropic";
    case UpdateRule::kProjectedGradient: return "projected_gradient";
    case UpdateRule::kFrankWolfe: return "frank_wolfe";
  }
  return "?";
}

inline UpdateRule UpdateRuleFromString(const std::string& s) {
  if (s == "entropic") return UpdateRule::kEntropicDualAveraging;
  if (s == "projected_gradient") return UpdateRule::kProjectedGradient;
  if (s == "frank_wolfe") return UpdateRule::kFrankWolfe;
  throw ValidationError("unknown update rule: " + s);
}

// Iterate and dual state of one player.
struct SodaState {
  DistributionalStrategy strategy;
  DistributionalStrategy dual;  // accumulated gradients (entropic rule)
};

// One update step at iteration t (t >= 1) with step size eta.
inline void ApplyUpdate(UpdateRule rule, SodaState& st, const UtilityGradient& c,
                        const DiscretePrior& prior, double eta, int t) {
  auto& s = st.strategy;
  const int n = s.rows();
  const int m = s.cols();
  switch (rule) {
    case UpdateRule::kEntropicDualAveraging: {
      for (int i = 0; i < n; ++i) {
        auto y = st.dual.row(i);
        auto cr = c.row(i);
        double top = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < m; ++j) {
          y[j] += eta * cr[j];
          top = std::max(top, y[j]);
        }
        auto row = s.row(i);
        double total = 0.0;
        for (int j = 0; j < m; ++j) {
          row[j] = std::exp(y[j] - top);
          total += row[j];
        }
        const double scale = prior[i] / total;
        for (int j = 0; j < m; ++j) row[j] *= scale;
      }
      break;
    }
    case UpdateRule::kProjectedGradient: {
      for (int i = 0; i < n; ++i) {
        auto row = s.row(i);
        auto cr = c.row(i);
        for (int j = 0; j < m; ++j) row[j] += eta * cr[j];
        ProjectOntoScaledSimplex(row, prior[i]);
      }
      break;
    }
    case UpdateRule::kFrankWolfe: {
      const double gamma = 2.0 / (t + 2.0);
      for (int i = 0; i < n; ++i) {
        auto row = s.row(i);
        auto cr = c.row(i);
        const int best = RowArgmax(cr);
        double current = 0.0;
        for (int j = 0; j < m; ++j) current += row[j] * cr[j];
        // No ascent direction (e.g. constant gradient): stay put.
        const double gap = prior[i] * cr[best] - current;
        if (!(gap > 1e-15 * std::max(1.0, std::abs(current)))) continue;
        for (int j = 0; j < m; ++j) row[j] *= 1.0 - gamma;
        row[best] += gamma * prior[i];
      }
      break;
    }
  }
}

struct SodaConfig {
  UpdateRule rule = UpdateRule::kEntropicDualAveraging;
  double eta0 = 10.0;        // eta_t = eta0 * t^(-eta_decay)
  double eta_decay = 0.05;
  int max_iters = 5000;
  double tolerance = 1e-4;   // stop once every player's loss is below this
  // With identical utilities the simultaneous dynamics from the common
  // uniform start stay symmetric, so one iterate can stand in for all.
  bool exploit_symmetry = true;

  double step(int t) const { return eta0 * std::pow(static_cast<double>(t), -eta_decay); }

  bool operator==(const SodaConfig&) const = default;
};

struct SodaResult {
  StrategyProfile strategies;
  std::vector<LossReport> losses;
  int iterations = 0;   // update steps performed
  bool converged = false;
  std::vector<double> loss_history;  // largest player loss before each update

  double max_loss() const {
    double worst = 0.0;
    for (const auto& l : losses) {
      worst = std::max(worst, l.certifiable ? l.loss
                                            : std::numeric_limits<double>::infinity());
    }
    return worst;
  }
};

// Simultaneous gradient dynamics from the uniform start for every player.
// Stops after max_iters updates or once every player's relative utility
// loss is below the tolerance.
inline SodaResult Solve(const GameSpec& spec, const SodaConfig& config) {
  spec.Validate();
  const int n_players = spec.n_players;
  const bool symmetric = config.exploit_symmetry && spec.symmetric_utilities();
  const int distinct = symmetric ? 1 : n_players;

  std::vector<SodaState> states(distinct);
  for (auto& st : states) {
    st.strategy = UniformStrategy(spec.prior, spec.actions.size());
    st.dual = DistributionalStrategy(spec.values.size(), spec.actions.size());
  }
  auto profile = [&]() {
    StrategyProfile p;
    p.reserve(n_players);
    for (int k = 0; k < n_players; ++k) p.push_back(states[symmetric ? 0 : k].strategy);
    return p;
  };

  SodaResult result;
  std::vector<UtilityGradient> grads(distinct);
  for (int t = 1;; ++t) {
    const StrategyProfile current = profile();
    result.losses.assign(n_players, {});
    bool all_below = true;
    for (int k = 0; k < distinct; ++k) {
      grads[k] = Gradient(spec, k, current);
      result.losses[k] = LossFromGradient(states[k].strategy, grads[k], spec.prior);
      if (!std::isfinite(result.losses[k].utility) ||
          !std::isfinite(result.losses[k].best_utility)) {
        std::ostringstream os;
        os << "non-finite utility for player " << k << " at iteration " << t;
        throw DivergenceError(os.str());
      }
      all_below = all_below && result.losses[k].certifiable &&
                  result.losses[k].loss < config.tolerance;
    }
    if (symmetric) {
      for (int k = 1; k < n_players; ++k) result.losses[k] = result.losses[0];
    }
    result.loss_history.push_back(result.max_loss());
    if (all_below) {
      result.converged = true;
      break;
    }
    if (t > config.max_iters) break;
    const double eta = config.step(t);
    for (int k = 0; k < distinct; ++k) {
      ApplyUpdate(config.rule, states[k], grads[k], spec.prior, eta, t);
      for (double x : states[k].strategy.data()) {
        if (!std::isfinite(x)) {
          std::ostringstream os;
          os << "strategy of player " << k << " became non-finite at iteration "
             << t;
          throw DivergenceError(os.str());
        }
      }
    }
    result.iterations = t;
  }
  result.strategies = profile();
  return result;
}

}  // namespace auctionlab
