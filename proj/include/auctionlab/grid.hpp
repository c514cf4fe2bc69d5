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
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "auctionlab/errors.hpp"
#include "auctionlab/random.hpp"

namespace auctionlab {

namespace internal {

inline std::vector<double> Linspace(double lo, double hi, int count) {
  if (count < 1) throw ValidationError("grid needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = hi;
    return out;
  }
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo + step * i;
  out.back() = hi;
  return out;
}

inline void CheckStrictlyIncreasing(std::span<const double> pts,
                                    const char* what) {
  if (pts.empty()) throw ValidationError(std::string(what) + " is empty");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!std::isfinite(pts[i])) {
      throw ValidationError(std::string(what) + " has a non-finite point");
    }
    if (i > 0 && !(pts[i] > pts[i - 1])) {
      throw ValidationError(std::string(what) + " is not strictly increasing");
    }
  }
}

// Index of the grid point closest to x; exact midpoints go to the lower one.
inline int NearestIndex(std::span<const double> pts, double x) {
  auto it = std::lower_bound(pts.begin(), pts.end(), x);
  if (it == pts.begin()) return 0;
  if (it == pts.end()) return static_cast<int>(pts.size()) - 1;
  const int hi = static_cast<int>(it - pts.begin());
  const int lo = hi - 1;
  return (x - pts[lo] <= pts[hi] - x) ? lo : hi;
}

}  // namespace internal

// Discretized valuation space. Points lie in [0, 1].
class ValueGrid {
 public:
  ValueGrid() = default;
  explicit ValueGrid(std::vector<double> points) : points_(std::move(points)) {
    internal::CheckStrictlyIncreasing(points_, "value grid");
    if (points_.front() < 0.0 || points_.back() > 1.0) {
      throw ValidationError("value grid points must lie in [0, 1]");
    }
  }

  // n equidistant points on [lo, hi] including both endpoints. A single point
  // sits at hi (the complete-information convention v = 1).
  static ValueGrid Equidistant(int n, double lo = 0.0, double hi = 1.0) {
    return ValueGrid(internal::Linspace(lo, hi, n));
  }

  int size() const { return static_cast<int>(points_.size()); }
  double operator[](int i) const { return points_[i]; }
  std::span<const double> points() const { return points_; }
  int Nearest(double v) const { return internal::NearestIndex(points_, v); }

  bool operator==(const ValueGrid&) const = default;

 private:
  std::vector<double> points_;
};

// Discrete bid levels b_1 < ... < b_m, all nonnegative.
class ActionGrid {
 public:
  ActionGrid() = default;
  explicit ActionGrid(std::vector<double> points) : points_(std::move(points)) {
    internal::CheckStrictlyIncreasing(points_, "action grid");
    if (points_.front() < 0.0) {
      throw ValidationError("action grid points must be nonnegative");
    }
  }

  static ActionGrid Equidistant(int m, double lo, double hi) {
    return ActionGrid(internal::Linspace(lo, hi, m));
  }

  int size() const { return static_cast<int>(points_.size()); }
  double operator[](int j) const { return points_[j]; }
  double max_bid() const { return points_.back(); }
  std::span<const double> points() const { return points_; }

  // Grid index of `bid`, or -1 if it is not a grid point (within 1e-12).
  int IndexOf(double bid) const {
    const int j = internal::NearestIndex(points_, bid);
    return std::abs(points_[j] - bid) <= 1e-12 ? j : -1;
  }

  // Lowest index whose bid clears `reserve`; size() if none does.
  int FirstAtLeast(double reserve) const {
    for (int j = 0; j < size(); ++j) {
      if (points_[j] >= reserve - 1e-12) return j;
    }
    return size();
  }

  bool operator==(const ActionGrid&) const = default;

 private:
  std::vector<double> points_;
};

// Continuous-prior families. `UniformPoints` is the discrete uniform law over
// the grid points themselves (every point equally likely).
enum class PriorKind { kUniform, kTruncatedGaussian, kUniformPoints };

struct PriorSpec {
  PriorKind kind = PriorKind::kUniform;
  double mu = 0.5;
  double sigma = 0.3;

  bool operator==(const PriorSpec&) const = default;
};

inline std::string ToString(PriorKind kind) {
  switch (kind) {
    case PriorKind::kUniform: return "uniform";
    case PriorKind::kTruncatedGaussian: return "truncated_gaussian";
    case PriorKind::kUniformPoints: return "uniform_points";
  }
  return "?";
}

inline PriorKind PriorKindFromString(const std::string& s) {
  if (s == "uniform") return PriorKind::kUniform;
  if (s == "truncated_gaussian") return PriorKind::kTruncatedGaussian;
  if (s == "uniform_points") return PriorKind::kUniformPoints;
  throw ValidationError("unknown prior kind: " + s);
}

// Probability weights F^d over a ValueGrid.
class DiscretePrior {
 public:
  DiscretePrior() = default;
  explicit DiscretePrior(std::vector<double> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty()) throw ValidationError("prior is empty");
    double total = 0.0;
    for (double w : weights_) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw ValidationError("prior weights must be finite and nonnegative");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "prior weights sum to " << total << ", expected 1";
      throw ValidationError(os.str());
    }
    cumulative_.resize(weights_.size());
    std::partial_sum(weights_.begin(), weights_.end(), cumulative_.begin());
    cumulative_.back() = 1.0;
  }

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  int Sample(Rng& rng) const {
    const double u = Uniform01(rng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto idx = static_cast<int>(it - cumulative_.begin());
    return std::min(idx, size() - 1);
  }

  bool operator==(const DiscretePrior& o) const { return weights_ == o.weights_; }

 private:
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

inline double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Nearest-neighbour cell mass of each grid point under the continuous law
// restricted to [0, 1]; cell boundaries are midpoints between neighbours.
inline DiscretePrior BuildPrior(const PriorSpec& spec, const ValueGrid& grid) {
  const int n = grid.size();
  if (n < 1) throw ValidationError("prior needs a nonempty grid");
  std::vector<double> w(static_cast<std::size_t>(n));
  if (spec.kind == PriorKind::kUniformPoints) {
    std::fill(w.begin(), w.end(), 1.0 / n);
    return DiscretePrior(std::move(w));
  }
  if (spec.kind == PriorKind::kTruncatedGaussian && !(spec.sigma > 0.0)) {
    throw ValidationError("truncated Gaussian needs sigma > 0");
  }
  auto cdf = [&](double x) {
    x = std::clamp(x, 0.0, 1.0);
    if (spec.kind == PriorKind::kUniform) return x;
    return NormalCdf((x - spec.mu) / spec.sigma);
  };
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lo = i == 0 ? 0.0 : 0.5 * (grid[i - 1] + grid[i]);
    const double hi = i == n - 1 ? 1.0 : 0.5 * (grid[i] + grid[i + 1]);
    w[i] = std::max(0.0, cdf(hi) - cdf(lo));
    total += w[i];
  }
  if (!(total > 0.0)) throw ValidationError("prior has no mass on [0, 1]");
  for (double& x : w) x /= total;
  // Push the rounding residue into the largest cell so the sum is 1.
  const double residue =
      1.0 - std::accumulate(w.begin(), w.end(), 0.0);
  *std::max_element(w.begin(), w.end()) += residue;
  return DiscretePrior(std::move(w));
}

// One draw from the continuous prior on [0, 1]. For kUniformPoints the
// continuous law is the discrete one, so a grid point is returned.
inline double SampleContinuous(const PriorSpec& spec, const ValueGrid& grid,
                               Rng& rng) {
  switch (spec.kind) {
    case PriorKind::kUniform:
      return Uniform01(rng);
    case PriorKind::kTruncatedGaussian:
      for (;;) {
        const double x = spec.mu + spec.sigma * StandardNormal(rng);
        if (x >= 0.0 && x <= 1.0) return x;
      }
    case PriorKind::kUniformPoints:
      return grid[UniformIndex(rng, grid.size())];
  }
  return 0.0;
}

}  // namespace auctionlab
