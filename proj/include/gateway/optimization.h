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

// Social optimum, equilibrium enumeration and price of anarchy at small n.

#ifndef GATEWAY_OPTIMIZATION_H_
#define GATEWAY_OPTIMIZATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gateway/game.h"
#include "gateway/rational.h"

namespace gateway {

// Subset enumeration is capped at 2^kMaxSubsetBits profiles.
inline constexpr int kMaxSubsetBits = 31;

enum class OptimumMethod { kFullEnumeration, kBoundedCardinality };

std::string_view OptimumMethodName(OptimumMethod method);

struct OptimumResult {
  StrategyProfile best_profile;
  Rational best_cost;
  OptimumMethod method = OptimumMethod::kFullEnumeration;
  // Bounded search only: largest cardinality that can beat `upper_bound`,
  // and the weaker bound floor(upper_bound / alpha).
  int bound = 0;
  int alpha_bound = 0;
  Rational upper_bound;
  bool certified_exact = false;
  std::uint64_t profiles_evaluated = 0;
};

struct OptimumOptions {
  // Full enumeration runs when n is at most this limit.
  int exhaustive_limit = 20;
  // Run the bounded search even when full enumeration is possible.
  bool bounded = false;
  // Feasible profile whose cost bounds the optimum; defaults to the best of
  // greedy, V and the best singleton.
  std::optional<StrategyProfile> upper_bound_profile;
  // Upper limit on profiles the bounded search may visit.
  std::uint64_t bounded_state_cap = std::uint64_t{1} << 28;
};

// Ties are broken by smaller |S|, then by the sorted member list.
OptimumResult BruteForceOptimum(const Game& game,
                                const OptimumOptions& options = {});

// Lower bound on c(S) over all profiles with |S| = s.
Rational CardinalityLowerBound(const Game& game, int s);

// Largest s whose cardinality lower bound does not exceed `upper`.
int CardinalityBound(const Game& game, const Rational& upper);

// Groups of pairwise twins (same open or same closed neighborhood), each
// sorted ascending; groups ordered by smallest member.
std::vector<std::vector<NodeId>> TwinClasses(const Graph& g);

// Best singleton, then repeatedly the open that lowers social cost most
// (ties by node id) while some open lowers it.
StrategyProfile GreedyGateways(const Game& game);

struct EquilibriumEntry {
  StrategyProfile profile;
  Rational cost;
  bool is_optimal = false;
};

struct EquilibriumCatalog {
  // Sorted by profile order.
  std::vector<EquilibriumEntry> equilibria;
  OptimumResult optimum;
  // Unset when the game has no equilibrium.
  std::optional<Rational> poa;
  std::optional<Rational> pos;
};

EquilibriumCatalog EnumerateEquilibria(const Game& game,
                                       int exhaustive_limit = 20);

struct PoaRegimeReport {
  std::string regime;
  std::string envelope;
  std::optional<Rational> poa;
  std::optional<Rational> pos;
  // Proven upper bound for this regime, when it has a closed form.
  std::optional<Rational> upper_bound;
  bool within_bound = true;
};

PoaRegimeReport PoaRegime(const Game& game, const EquilibriumCatalog& catalog);

}  // namespace gateway

#endif  // GATEWAY_OPTIMIZATION_H_
