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

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "auctionlab/errors.hpp"
#include "auctionlab/soda.hpp"

namespace auctionlab {

// Plain-text strategy file:
//
//   auctionlab-strategy 1
//   n <rows>
//   m <cols>
//   values <n numbers>
//   actions <m numbers>
//   prior <n numbers>
//   flagged <n zeros/ones>
//   matrix
//   <n lines of m numbers>
//
// Numbers are written with 17 significant digits so files round-trip exactly.
struct StrategyFile {
  std::vector<double> values;
  std::vector<double> actions;
  std::vector<double> prior;
  std::vector<bool> flagged;
  DistributionalStrategy strategy;

  bool operator==(const StrategyFile&) const = default;
};

namespace internal {

template <typename Range>
void WriteRow(std::ostream& os, const char* key, const Range& xs) {
  os << key;
  for (const auto& x : xs) os << ' ' << x;
  os << '\n';
}

inline std::vector<double> ReadNumbers(std::istream& is, const std::string& key,
                                       int count) {
  std::string line;
  if (!std::getline(is, line)) throw ValidationError("strategy file: missing " + key);
  std::istringstream ls(line);
  std::string got;
  ls >> got;
  if (got != key) {
    throw ValidationError("strategy file: expected '" + key + "', found '" + got + "'");
  }
  std::vector<double> out;
  double x;
  while (ls >> x) out.push_back(x);
  if (count >= 0 && static_cast<int>(out.size()) != count) {
    throw ValidationError("strategy file: wrong number of entries for " + key);
  }
  return out;
}

}  // namespace internal

inline void WriteStrategy(std::ostream& os, const StrategyFile& f) {
  const int n = f.strategy.rows();
  const int m = f.strategy.cols();
  if (static_cast<int>(f.values.size()) != n || static_cast<int>(f.prior.size()) != n ||
      static_cast<int>(f.actions.size()) != m) {
    throw ValidationError("strategy file: header does not match matrix shape");
  }
  const auto old_precision = os.precision(17);
  os << "auctionlab-strategy 1\n";
  os << "n " << n << "\nm " << m << '\n';
  internal::WriteRow(os, "values", f.values);
  internal::WriteRow(os, "actions", f.actions);
  internal::WriteRow(os, "prior", f.prior);
  os << "flagged";
  for (int i = 0; i < n; ++i) {
    os << ' ' << (i < static_cast<int>(f.flagged.size()) && f.flagged[i] ? 1 : 0);
  }
  os << "\nmatrix\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) os << (j ? " " : "") << f.strategy(i, j);
    os << '\n';
  }
  os.precision(old_precision);
}

inline StrategyFile ReadStrategy(std::istream& is) {
  std::string magic;
  int version = 0;
  std::string line;
  std::getline(is, line);
  std::istringstream(line) >> magic >> version;
  if (magic != "auctionlab-strategy" || version != 1) {
    throw ValidationError("strategy file: bad header");
  }
  const int n = static_cast<int>(internal::ReadNumbers(is, "n", 1)[0]);
  const int m = static_cast<int>(internal::ReadNumbers(is, "m", 1)[0]);
  if (n < 1 || m < 1) throw ValidationError("strategy file: empty shape");
  StrategyFile f;
  f.values = internal::ReadNumbers(is, "values", n);
  f.actions = internal::ReadNumbers(is, "actions", m);
  f.prior = internal::ReadNumbers(is, "prior", n);
  for (double x : internal::ReadNumbers(is, "flagged", n)) f.flagged.push_back(x != 0.0);
  std::getline(is, line);
  if (line != "matrix") throw ValidationError("strategy file: missing matrix");
  f.strategy = DistributionalStrategy(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!(is >> f.strategy(i, j))) {
        throw ValidationError("strategy file: truncated matrix");
      }
    }
  }
  return f;
}

inline StrategyFile MakeStrategyFile(const GameSpec& spec,
                                     const DistributionalStrategy& s,
                                     std::vector<bool> flagged = {}) {
  StrategyFile f;
  f.values.assign(spec.values.points().begin(), spec.values.points().end());
  f.actions.assign(spec.actions.points().begin(), spec.actions.points().end());
  f.prior.assign(spec.prior.weights().begin(), spec.prior.weights().end());
  flagged.resize(s.rows(), false);
  f.flagged = std::move(flagged);
  f.strategy = s;
  return f;
}

inline void SaveStrategy(const std::string& path, const StrategyFile& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  WriteStrategy(os, f);
}

inline StrategyFile LoadStrategy(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return ReadStrategy(is);
}

}  // namespace auctionlab
