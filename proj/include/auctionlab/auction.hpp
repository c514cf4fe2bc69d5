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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "auctionlab/errors.hpp"
#include "auctionlab/grid.hpp"
#include "auctionlab/random.hpp"
#include "auctionlab/utility.hpp"

namespace auctionlab {

enum class PaymentRule { kFirstPrice, kSecondPrice };
enum class TieRule { kRandomWinner, kAllLose };

inline std::string ToString(PaymentRule r) {
  return r == PaymentRule::kFirstPrice ? "first_price" : "second_price";
}
inline std::string ToString(TieRule r) {
  return r == TieRule::kRandomWinner ? "random_winner" : "all_lose";
}
inline PaymentRule PaymentRuleFromString(const std::string& s) {
  if (s == "first_price" || s == "FP") return PaymentRule::kFirstPrice;
  if (s == "second_price" || s == "SP") return PaymentRule::kSecondPrice;
  throw ValidationError("unknown payment rule: " + s);
}
inline TieRule TieRuleFromString(const std::string& s) {
  if (s == "random_winner") return TieRule::kRandomWinner;
  if (s == "all_lose") return TieRule::kAllLose;
  throw ValidationError("unknown tie rule: " + s);
}

// A discretized symmetric-prior single-item auction. `utilities` holds either
// one model shared by all players or one model per player.
struct GameSpec {
  int n_players = 2;
  ValueGrid values;
  ActionGrid actions;
  PriorSpec prior_spec;
  DiscretePrior prior;
  PaymentRule payment = PaymentRule::kFirstPrice;
  TieRule tie = TieRule::kRandomWinner;
  double reserve = 0.0;
  std::vector<UtilityModel> utilities{UtilityModel::QL()};

  const UtilityModel& utility(int player) const {
    return utilities.size() == 1 ? utilities.front() : utilities.at(player);
  }
  bool symmetric_utilities() const {
    return std::all_of(utilities.begin(), utilities.end(),
                       [&](const UtilityModel& u) { return u == utilities[0]; });
  }
  // Lowest action index that may win.
  int first_eligible() const { return actions.FirstAtLeast(reserve); }

  void Validate() const {
    if (n_players < 2) throw ValidationError("need at least two players");
    if (values.size() < 1 || actions.size() < 1) {
      throw ValidationError("empty value or action grid");
    }
    if (prior.size() != values.size()) {
      throw ValidationError("prior length differs from value grid length");
    }
    if (utilities.empty() ||
        (utilities.size() != 1 &&
         utilities.size() != static_cast<std::size_t>(n_players))) {
      throw ValidationError("need one utility model or one per player");
    }
    if (!(reserve >= 0.0)) throw ValidationError("reserve must be >= 0");
    for (const auto& u : utilities) u.Validate(reserve, actions.max_bid());
  }
};

// Builds a spec and its discrete prior, then validates it.
inline GameSpec MakeGame(int n_players, ValueGrid values, ActionGrid actions,
                         PriorSpec prior_spec, PaymentRule payment,
                         TieRule tie, double reserve,
                         std::vector<UtilityModel> utilities) {
  GameSpec g;
  g.n_players = n_players;
  g.prior = BuildPrior(prior_spec, values);
  g.values = std::move(values);
  g.actions = std::move(actions);
  g.prior_spec = prior_spec;
  g.payment = payment;
  g.tie = tie;
  g.reserve = reserve;
  g.utilities = std::move(utilities);
  g.Validate();
  return g;
}

struct AuctionOutcome {
  std::optional<int> winner;
  std::vector<double> prices;   // 0 for everyone but the winner
  std::vector<int> allocation;  // 0/1

  double revenue() const { return winner ? prices[*winner] : 0.0; }
};

// Winner and payment of one round; winner = -1 when nobody wins.
struct RoundResult {
  int winner = -1;
  double price = 0.0;
};

// Resolves a round from action indices. Index -1 means a zero bid that is not
// itself on the grid. Bids below the reserve never win.
// `first_ok` is spec.first_eligible(), hoisted out of hot loops.
inline RoundResult ResolveIndexed(std::span<const int> bid_idx,
                                  const GameSpec& spec, int first_ok,
                                  Rng& rng) {
  int best = -2;
  int ties = 0;
  for (int b : bid_idx) {
    if (b > best) {
      best = b;
      ties = 1;
    } else if (b == best) {
      ++ties;
    }
  }
  RoundResult out;
  if (best < first_ok || best < 0) return out;
  int pick;
  if (ties == 1) {
    pick = 0;
  } else if (spec.tie == TieRule::kAllLose) {
    return out;
  } else {
    pick = UniformIndex(rng, ties);
  }
  const int n = static_cast<int>(bid_idx.size());
  for (int i = 0; i < n; ++i) {
    if (bid_idx[i] == best && pick-- == 0) {
      out.winner = i;
      break;
    }
  }
  const double own = spec.actions[best];
  if (spec.payment == PaymentRule::kFirstPrice) {
    out.price = own;
  } else {
    double opposing = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i == out.winner || bid_idx[i] < 0) continue;
      opposing = std::max(opposing, spec.actions[bid_idx[i]]);
    }
    out.price = std::max(opposing, spec.reserve);
  }
  return out;
}

inline RoundResult ResolveIndexed(std::span<const int> bid_idx,
                                  const GameSpec& spec, Rng& rng) {
  return ResolveIndexed(bid_idx, spec, spec.first_eligible(), rng);
}

// Maps a bid amount to its grid index (-1 for an off-grid zero bid).
inline int BidIndex(const GameSpec& spec, double bid) {
  const int j = spec.actions.IndexOf(bid);
  if (j >= 0) return j;
  if (bid == 0.0) return -1;
  std::ostringstream os;
  os << "bid " << bid << " is not on the action grid";
  throw ValidationError(os.str());
}

// Executes one sealed-bid round on explicit bid amounts.
inline AuctionOutcome RunRound(std::span<const double> bids,
                               const GameSpec& spec, Rng& rng) {
  if (static_cast<int>(bids.size()) != spec.n_players) {
    throw ValidationError("expected one bid per player");
  }
  std::vector<int> idx(bids.size());
  for (std::size_t i = 0; i < bids.size(); ++i) idx[i] = BidIndex(spec, bids[i]);
  const RoundResult r = ResolveIndexed(idx, spec, rng);
  AuctionOutcome out;
  out.prices.assign(bids.size(), 0.0);
  out.allocation.assign(bids.size(), 0);
  if (r.winner >= 0) {
    out.winner = r.winner;
    out.prices[r.winner] = r.price;
    out.allocation[r.winner] = 1;
  }
  return out;
}

// Expected utility of `player` for a fixed bid profile, averaging exactly over
// the tie-breaking lottery.
inline double ExpectedRoundUtility(std::span<const int> bid_idx,
                                   const GameSpec& spec, int player,
                                   double value) {
  const int own = bid_idx[player];
  if (own < 0 || own < spec.first_eligible()) return 0.0;
  int ties = 0;
  double opposing = 0.0;
  for (int i = 0; i < static_cast<int>(bid_idx.size()); ++i) {
    if (i == player) continue;
    if (bid_idx[i] > own) return 0.0;
    if (bid_idx[i] == own) ++ties;
    if (bid_idx[i] >= 0) opposing = std::max(opposing, spec.actions[bid_idx[i]]);
  }
  if (ties > 0 && spec.tie == TieRule::kAllLose) return 0.0;
  const double price = spec.payment == PaymentRule::kFirstPrice
                           ? spec.actions[own]
                           : std::max(opposing, spec.reserve);
  return ExPostUtility(spec.utility(player), value, true, price) / (ties + 1);
}

}  // namespace auctionlab
