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
#include <cstdint>
#include <limits>
#include <random>

namespace auctionlab {

// All simulation code draws from this engine. The conversions below are
// written out by hand so that trajectories do not depend on the standard
// library's distribution implementations.
using Rng = std::mt19937_64;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of repetition `k` under base seed `base`. Pure function of both
// arguments; distinct k give decorrelated mt19937_64 streams.
inline std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t k) {
  return SplitMix64(SplitMix64(base) ^ SplitMix64(k + 0x632BE59BD9B4E019ULL));
}

// Uniform double in [0, 1) with 53 random bits.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Lemire's multiply-shift with rejection.
inline int UniformIndex(Rng& rng, int n) {
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  std::uint64_t x = rng();
  __uint128_t m = static_cast<__uint128_t>(x) * range;
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      x = rng();
      m = static_cast<__uint128_t>(x) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<int>(m >> 64);
}

inline bool Bernoulli(Rng& rng, double p) { return Uniform01(rng) < p; }

// Standard normal via the Marsaglia polar method (no cached second value, so
// the generator state fully determines the output).
inline double StandardNormal(Rng& rng) {
  double u, v, s;
  do {
    u = 2.0 * Uniform01(rng) - 1.0;
    v = 2.0 * Uniform01(rng) - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return u * std::sqrt(-2.0 * std::log(s) / s);
}

}  // namespace auctionlab
