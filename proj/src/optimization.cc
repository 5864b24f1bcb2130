// Copyright 2026 The Gateway Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gateway/optimization.h"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "gateway/error.h"

namespace gateway {
namespace {

Rational CostOf(const Game& game, std::span<const NodeId> members) {
  std::vector<int> to_gateways = game.GatewayDistances(members);
  return game.alpha() * static_cast<std::int64_t>(members.size()) +
         Rational(game.TotalDistance(to_gateways));
}

// Running minimum under (cost, profile order).
struct Best {
  std::optional<StrategyProfile> profile;
  Rational cost;

  void Offer(const Rational& c, const std::vector<NodeId>& members, int n) {
    if (profile && c > cost) return;
    StrategyProfile candidate = StrategyProfile::FromNodes(n, members);
    if (profile && c == cost && !(candidate < *profile)) return;
    profile = std::move(candidate);
    cost = c;
  }
};

OptimumResult FullEnumeration(const Game& game) {
  const int n = game.node_count();
  Best best;
  std::vector<NodeId> members;
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= last; ++mask) {
    members.clear();
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      members.push_back(std::countr_zero(rest));
    }
    best.Offer(CostOf(game, members), members, n);
  }
  OptimumResult result;
  result.best_profile = *best.profile;
  result.best_cost = best.cost;
  result.method = OptimumMethod::kFullEnumeration;
  result.certified_exact = true;
  result.profiles_evaluated = last;
  return result;
}

StrategyProfile DefaultUpperBoundProfile(const Game& game) {
  const int n = game.node_count();
  std::vector<StrategyProfile> candidates = {GreedyGateways(game),
                                             StrategyProfile::All(n)};
  Best best;
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> one = {v};
    best.Offer(CostOf(game, one), one, n);
  }
  for (const StrategyProfile& p : candidates) {
    best.Offer(game.SocialCost(p), p.Members(), n);
  }
  return *best.profile;
}

// Number of per-class count vectors with total exactly s, saturating at cap.
std::uint64_t CountSelections(const std::vector<std::vector<NodeId>>& classes,
                              int s, std::uint64_t cap) {
  std::vector<std::uint64_t> ways(s + 1, 0);
  ways[0] = 1;
  for (const auto& cls : classes) {
    std::vector<std::uint64_t> next(s + 1, 0);
    for (int t = 0; t <= s; ++t) {
      if (!ways[t]) continue;
      for (int k = 0; k <= static_cast<int>(cls.size()) && t + k <= s; ++k) {
        next[t + k] = std::min(cap, next[t + k] + ways[t]);
      }
    }
    ways = std::move(next);
  }
  return ways[s];
}

class OrbitSearch {
 public:
  OrbitSearch(const Game& game, std::vector<std::vector<NodeId>> classes,
              Best& best)
      : game_(game), classes_(std::move(classes)), best_(best) {}

  std::uint64_t Run(int s) {
    evaluated_ = 0;
    members_.clear();
    Recurse(0, s);
    return evaluated_;
  }

 private:
  void Recurse(std::size_t index, int remaining) {
    if (remaining == 0) {
      std::vector<NodeId> sorted = members_;
      std::sort(sorted.begin(), sorted.end());
      best_.Offer(CostOf(game_, sorted), sorted, game_.node_count());
      ++evaluated_;
      return;
    }
    if (index == classes_.size()) return;
    const auto& cls = classes_[index];
    const int take_max = std::min<int>(remaining, cls.size());
    for (int k = 0; k <= take_max; ++k) {
      if (k > 0) members_.push_back(cls[k - 1]);
      Recurse(index + 1, remaining - k);
    }
    members_.resize(members_.size() - take_max);
  }

  const Game& game_;
  std::vector<std::vector<NodeId>> classes_;
  Best& best_;
  std::vector<NodeId> members_;
  std::uint64_t evaluated_ = 0;
};

OptimumResult BoundedSearch(const Game& game, const OptimumOptions& options) {
  const int n = game.node_count();
  StrategyProfile upper = options.upper_bound_profile
                              ? *options.upper_bound_profile
                              : DefaultUpperBoundProfile(game);
  game.CheckProfile(upper);

  OptimumResult result;
  result.method = OptimumMethod::kBoundedCardinality;
  result.upper_bound = game.SocialCost(upper);
  result.bound = CardinalityBound(game, result.upper_bound);
  result.alpha_bound =
      static_cast<int>(std::min<std::int64_t>(Floor(result.upper_bound /
                                                    game.alpha()), n));

  std::vector<std::vector<NodeId>> classes = TwinClasses(game.graph());
  std::uint64_t planned = 0;
  for (int s = 1; s <= result.bound; ++s) {
    planned += CountSelections(classes, s, options.bounded_state_cap);
    if (planned > options.bounded_state_cap) {
      throw GameError(ErrorCode::kStateSpaceTooLarge,
                      "bounded search over |S| <= " +
                          std::to_string(result.bound) + " exceeds " +
                          std::to_string(options.bounded_state_cap) +
                          " profiles");
    }
  }

  Best best;
  best.Offer(result.upper_bound, upper.Members(), n);
  OrbitSearch search(game, std::move(classes), best);
  for (int s = 1; s <= result.bound; ++s) {
    if (CardinalityLowerBound(game, s) > best.cost) continue;
    result.profiles_evaluated += search.Run(s);
  }
  result.best_profile = *best.profile;
  result.best_cost = best.cost;
  result.certified_exact = true;
  return result;
}

}  // namespace

std::string_view OptimumMethodName(OptimumMethod method) {
  switch (method) {
    case OptimumMethod::kFullEnumeration:
      return "full_enumeration";
    case OptimumMethod::kBoundedCardinality:
      return "bounded_cardinality";
  }
  return "unknown";
}

Rational CardinalityLowerBound(const Game& game, int s) {
  const std::int64_t n = game.node_count();
  const Rational fee = game.alpha() * static_cast<std::int64_t>(s);
  if (n == 1) return fee;
  if (game.variant() == Variant::kSum) {
    // Non-gateways reach the n-1 others at distance >= 1; gateways reach
    // the n-s non-gateways at distance >= 1.
    return fee + Rational((n - s) * (n - 1) + s * (n - s));
  }
  return fee + Rational((n - s) + (s < n ? s : 0));
}

int CardinalityBound(const Game& game, const Rational& upper) {
  int bound = 0;
  for (int s = 1; s <= game.node_count(); ++s) {
    if (CardinalityLowerBound(game, s) <= upper) bound = s;
  }
  return bound;
}

std::vector<std::vector<NodeId>> TwinClasses(const Graph& g) {
  const int n = g.node_count();
  std::map<std::vector<NodeId>, std::vector<NodeId>> open_groups;
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> key(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(key.begin(), key.end());
    open_groups[key].push_back(v);
  }
  std::vector<std::vector<NodeId>> classes;
  std::map<std::vector<NodeId>, std::vector<NodeId>> closed_groups;
  for (auto& [key, group] : open_groups) {
    if (group.size() > 1) {
      classes.push_back(group);
      continue;
    }
    std::vector<NodeId> closed = key;
    closed.insert(std::upper_bound(closed.begin(), closed.end(), group[0]),
                  group[0]);
    closed_groups[closed].push_back(group[0]);
  }
  for (auto& [key, group] : closed_groups) classes.push_back(group);
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

OptimumResult BruteForceOptimum(const Game& game,
                                const OptimumOptions& options) {
  const int n = game.node_count();
  const int limit = std::min(options.exhaustive_limit, kMaxSubsetBits);
  if (!options.bounded && n <= limit) return FullEnumeration(game);
  if (!options.bounded && !options.upper_bound_profile) {
    throw GameError(ErrorCode::kStateSpaceTooLarge,
                    "full enumeration over " + std::to_string(n) +
                        " nodes exceeds the exhaustive limit of " +
                        std::to_string(limit) +
                        "; request the bounded search");
  }
  return BoundedSearch(game, options);
}

StrategyProfile GreedyGateways(const Game& game) {
  const int n = game.node_count();
  Best start;
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> one = {v};
    start.Offer(CostOf(game, one), one, n);
  }
  std::vector<NodeId> members = start.profile->Members();
  Rational cost = start.cost;
  for (;;) {
    std::optional<NodeId> pick;
    Rational pick_cost = cost;
    for (NodeId v = 0; v < n; ++v) {
      if (std::find(members.begin(), members.end(), v) != members.end()) {
        continue;
      }
      std::vector<NodeId> grown = members;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), v), v);
      Rational c = CostOf(game, grown);
      if (c < pick_cost) {
        pick = v;
        pick_cost = c;
      }
    }
    if (!pick) break;
    members.insert(std::upper_bound(members.begin(), members.end(), *pick),
                   *pick);
    cost = pick_cost;
  }
  return StrategyProfile::FromNodes(n, members);
}

EquilibriumCatalog EnumerateEquilibria(const Game& game,
                                       int exhaustive_limit) {
  const int n = game.node_count();
  const int limit = std::min(exhaustive_limit, kMaxSubsetBits);
  if (n > limit) {
    throw GameError(ErrorCode::kStateSpaceTooLarge,
                    "equilibrium enumeration over " + std::to_string(n) +
                        " nodes exceeds the exhaustive limit of " +
                        std::to_string(limit));
  }
  EquilibriumCatalog catalog;
  OptimumOptions options;
  options.exhaustive_limit = limit;
  catalog.optimum = BruteForceOptimum(game, options);
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= last; ++mask) {
    StrategyProfile s = StrategyProfile::FromMask(n, mask);
    if (!game.IsNashEquilibrium(s)) continue;
    Rational cost = game.SocialCost(s);
    catalog.equilibria.push_back(
        {std::move(s), cost, cost == catalog.optimum.best_cost});
  }
  std::sort(catalog.equilibria.begin(), catalog.equilibria.end(),
            [](const EquilibriumEntry& a, const EquilibriumEntry& b) {
              return a.profile < b.profile;
            });
  if (!catalog.equilibria.empty()) {
    auto [lo, hi] = std::minmax_element(
        catalog.equilibria.begin(), catalog.equilibria.end(),
        [](const EquilibriumEntry& a, const EquilibriumEntry& b) {
          return a.cost < b.cost;
        });
    catalog.poa = hi->cost / catalog.optimum.best_cost;
    catalog.pos = lo->cost / catalog.optimum.best_cost;
  }
  return catalog;
}

PoaRegimeReport PoaRegime(const Game& game, const EquilibriumCatalog& catalog) {
  PoaRegimeReport report;
  report.poa = catalog.poa;
  report.pos = catalog.pos;
  const std::int64_t n = game.node_count();
  const Rational& a = game.alpha();
  if (a < 1) {
    report.regime = "alpha<1";
    report.envelope = "1";
    report.upper_bound = Rational(1);
  } else if (game.variant() == Variant::kMax) {
    report.regime = "alpha>=1";
    report.envelope = "Theta(1+n/sqrt(alpha))";
  } else if (a <= n - 1) {
    report.regime = "[1,n-1]";
    report.envelope = "Theta(n/sqrt(alpha))";
    if (a >= 2) {
      report.upper_bound =
          (a * n + Rational(2 * n * n * CeilSqrt(a))) / (a * n);
    }
  } else if (a < n * (n - 1)) {
    report.regime = "(n-1,n(n-1))";
    report.envelope = "O(sqrt(alpha))";
  } else {
    report.regime = ">=n(n-1)";
    report.envelope = "constant";
    report.upper_bound =
        (a + Rational(n * (n - 1))) / (a + Rational((n - 1) * n));
  }
  if (report.upper_bound && report.poa) {
    report.within_bound = *report.poa <= *report.upper_bound;
  }
  return report;
}

}  // namespace gateway
