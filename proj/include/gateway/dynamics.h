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

#ifndef GATEWAY_DYNAMICS_H_
#define GATEWAY_DYNAMICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gateway/constructions.h"
#include "gateway/game.h"

namespace gateway {

inline constexpr int kDefaultExhaustiveLimit = 20;
// Hard ceiling for exhaustive state graphs (state ids are 32-bit).
inline constexpr int kMaxExhaustiveLimit = 31;

// min(10 * 2^n, 10^6).
std::int64_t DefaultMaxSteps(int node_count);

// Scans nodes in ascending id starting after the previous mover (wrapping)
// and applies the first improving move.
struct RoundRobin {};
// Picks uniformly among the improving moves with a seeded mt19937_64.
struct RandomSeeded {
  std::uint64_t seed = 0;
};
// Largest |cost_delta|; ties by smaller node id, then open before close.
struct BestGain {};
// Cycles through `order`, skipping entries whose node has no improving move.
struct FixedSequence {
  std::vector<NodeId> order;
};
// Only opens by the listed nodes, smallest id first.
struct OpensOnly {
  std::vector<NodeId> nodes;
};

using Scheduler =
    std::variant<RoundRobin, RandomSeeded, BestGain, FixedSequence, OpensOnly>;

enum class OutcomeKind {
  kConvergedToNe,
  kCycleDetected,
  kBudgetExhausted,
  // The scheduler has no admissible move but the profile is not an
  // equilibrium (only FixedSequence and OpensOnly can stall).
  kStalled,
};

std::string_view OutcomeName(OutcomeKind kind);

struct TraceStep {
  StrategyProfile before;
  Move move;
};

struct DynamicsTrace {
  std::vector<TraceStep> steps;
  OutcomeKind outcome = OutcomeKind::kBudgetExhausted;
  StrategyProfile final_profile;
  // For kCycleDetected: steps[cycle_entry].before is the first revisited
  // profile and cycle_period the number of moves until it recurs.
  std::size_t cycle_entry = 0;
  std::size_t cycle_period = 0;
};

// Sequential improving-response dynamics. Stops at an equilibrium, at the
// first revisited profile, when the scheduler stalls, or after `max_steps`
// moves.
DynamicsTrace RunDynamics(const Game& game, const StrategyProfile& start,
                          const Scheduler& scheduler, std::int64_t max_steps);
inline DynamicsTrace RunDynamics(const Game& game,
                                 const StrategyProfile& start,
                                 const Scheduler& scheduler) {
  return RunDynamics(game, start, scheduler,
                     DefaultMaxSteps(game.node_count()));
}

// --- Exhaustive improving-response state graph ------------------------------

enum class Convergence { kFip, kWeaklyAcyclicOnly, kNotWeaklyAcyclic };

std::string_view ConvergenceName(Convergence c);

struct StateGraphReport {
  std::uint64_t state_count = 0;
  std::uint64_t edge_count = 0;
  std::vector<StrategyProfile> ne_states;
  Convergence classification = Convergence::kFip;
  // A directed cycle of states (first state repeated implicitly); empty iff
  // FIP.
  std::vector<StrategyProfile> cycle;
  // States from which no equilibrium is reachable; empty unless
  // kNotWeaklyAcyclic.
  std::vector<StrategyProfile> trapped;
};

// Resolves the exhaustive cap: explicit value if given, else the
// GATEWAY_GAMES_EXHAUSTIVE_LIMIT environment variable, else the default.
int ResolveExhaustiveLimit(std::optional<int> requested);

// All non-empty gateway subsets; edges are improving moves. Throws
// kStateSpaceTooLarge when n exceeds `exhaustive_limit`.
StateGraphReport BuildIrStateGraph(
    const Game& game, int exhaustive_limit = kDefaultExhaustiveLimit);

struct ReachabilityResult {
  bool reachable = false;
  // Shortest improving path start -> equilibrium (inclusive) when reachable.
  std::vector<StrategyProfile> path;
  std::vector<Move> moves;
  std::size_t explored = 0;
  // The search hit its state cap before finding an equilibrium or
  // exhausting the reachable set.
  bool truncated = false;
};

// Breadth-first search over improving moves from `start`. Explores at most
// 2^exhaustive_limit profiles; throws kStateSpaceTooLarge beyond that.
ReachabilityResult ReachesNeFrom(const Game& game, const StrategyProfile& start,
                                 int exhaustive_limit = kDefaultExhaustiveLimit);
// Same search with an explicit cap on visited profiles.
ReachabilityResult SearchEquilibriumPath(const Game& game,
                                         const StrategyProfile& start,
                                         std::size_t max_states);

// --- Cycle inequalities of the IR-cycle and MAX-line constructions ----------

struct CycleCondition {
  std::string label;       // "I".."IV"
  std::string mover;       // role of the moving node
  MoveKind kind = MoveKind::kOpen;
  std::string inequality;  // human-readable form with numbers substituted
  // The inequality as stated for the construction, evaluated exactly.
  bool holds_symbolic = false;
  // Direct evaluation: the move is strictly improving in the cycle state.
  bool holds_simulated = false;
  Rational cost_delta;
  // SUM constructions: alpha threshold from the formula and the exact
  // threshold implied by the simulated distance change. MAX line: private
  // cost before and after, formula vs simulated.
  Rational symbolic_lhs, symbolic_rhs;
  Rational simulated_lhs, simulated_rhs;

  bool agrees() const { return holds_symbolic == holds_simulated; }
};

// Conditions I-IV for the u/v cycle started from {w}. Throws
// kParameterOutOfRange only for shapes CheckIrCycleShape rejects.
std::vector<CycleCondition> VerifyCycleConditions(const IrCycleParams& p);

// Conditions I-IV for the w/v cycle on the MAX line started from {u}.
std::vector<CycleCondition> VerifyMaxLineConditions(const Rational& alpha);

}  // namespace gateway

#endif  // GATEWAY_DYNAMICS_H_
