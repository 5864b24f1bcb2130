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

#ifndef GATEWAY_CONSTRUCTIONS_H_
#define GATEWAY_CONSTRUCTIONS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gateway/game.h"
#include "gateway/graph.h"
#include "gateway/rational.h"

namespace gateway {

// Symbolic names for the nodes of a generated graph, so tests and the CLI
// never hard-code ids.
struct Roles {
  // Named singleton roles such as "u", "v", "w", "c".
  std::map<std::string, NodeId> named;
  // One descriptive role per node id ("path", "pendant-u", "X", "set:2", ...).
  std::vector<std::string> node_roles;

  NodeId at(const std::string& name) const;
};

struct GeneratedGraph {
  std::string family;
  Graph graph;
  Roles roles;
  StrategyProfile initial;
  // Set when the construction is tied to a specific alpha.
  std::optional<Rational> alpha;
};

// --- IR cycle (path u - ... - v - ... - w with pendants) -------------------

struct IrCycleParams {
  int n = 0;
  // Number of edges between u and v (and between v and w); 1 or n/4.
  int c = 1;
  // Pendants at w.
  int r = 0;
  Rational alpha{1};
};

// Structural ranges only: c in {1, n/4 with 4 | n}, r >= 0, enough nodes for
// the path, n - 2c - r - 1 >= 0. Throws kParameterOutOfRange.
void CheckIrCycleShape(const IrCycleParams& p);

// Full validity: shape plus the alpha/r inequalities that make u and v cycle.
// For c = 1:   r + 2 < alpha < min{n - 1, 2r + 2}.
// For c = n/4: n > 16, 3n^2/32 + n < alpha < 5n^2/32 and
//              2alpha/n - n/8 - 1/2 < r < 4alpha/n - 5n/16 - 3/2.
// The exception message names the violated inequality.
void ValidateIrCycleParams(const IrCycleParams& p);

// Ids: u = 0, path 1..c-1, v = c, path c+1..2c-1, w = 2c, then r pendants at
// w, then n - 2c - r - 1 pendants at u. No alpha checks.
Graph BuildIrCycleGraph(int n, int c, int r);

GeneratedGraph GenIrCycle(const IrCycleParams& p);

// --- SUM not weakly acyclic gadget -----------------------------------------

// Line u - v - w, clique X of ceil(alpha/2) nodes joined to c and u, clique Y
// of floor(alpha/2) nodes joined to c and w, c joined to v. Only alpha = 7 is
// known to trap {w}; other values need `experimental`.
GeneratedGraph GenNonWag(const Rational& alpha = Rational(7),
                         bool experimental = false);

// --- Price of anarchy lower-bound instances --------------------------------

// Center u plus k = floor((n-1)/(floor(sqrt(alpha))-1)) paths of
// floor(sqrt(alpha))-1 nodes and one path with the remaining nodes. The
// initial profile is the leaf of the first full path. Needs 4 <= alpha <= n-1.
GeneratedGraph GenSumPoaStar(int n, const Rational& alpha);

// Center c with two paths of k = floor((n-1)/3) nodes and one path of
// n - 2k - 1 nodes. Initial profile: leaf of the last path. Needs n >= 7.
GeneratedGraph GenMaxPoaStar(int n);

// --- MAX game improvement cycle --------------------------------------------

// Line of 3*floor(alpha)+4 nodes; u = 0, v = floor(alpha)+1,
// w = 2*floor(alpha)+2. Initial profile {u}. Needs alpha > 1.
GeneratedGraph GenMaxLine(const Rational& alpha);

// --- Common shapes used across the proofs ----------------------------------

GeneratedGraph GenPath(int n);
GeneratedGraph GenClique(int n);
// Center 0 with n - 1 leaves.
GeneratedGraph GenStar(int n);

// --- MAX equilibria on high-girth graphs -----------------------------------

struct GirthNeParams {
  Edge peripheral_pair{0, 0};
  int peripheral_distance = 0;
  // Set when the level-R construction ran (d(x1, x2) >= 2 alpha).
  std::optional<int> radius;
  std::vector<NodeId> level_gateways;
  std::vector<NodeId> spread_gateways;
};

struct MaxNeConstruction {
  StrategyProfile profile;
  GirthNeParams params;
  // Profile produced by the level construction before any repair.
  StrategyProfile constructed;
  // Improving moves applied to reach an equilibrium from `constructed`
  // (empty when the construction was already an equilibrium).
  std::vector<Move> repair_moves;
};

// Requires girth(g) >= 4 alpha (trees always qualify) and
// 1 <= alpha < diam(g). Opens a center in the shallow case, otherwise the
// level-R gateways around a peripheral pair followed by every node at
// distance exactly ceil(alpha) from the gateway set. The result is checked
// with the MAX equilibrium test; when the construction alone is not an
// equilibrium, a breadth-first search over improving moves (bounded by
// `repair_state_limit` states) continues from it.
// Throws kGirthTooSmall, kParameterOutOfRange, kConstructionNotEquilibrium.
MaxNeConstruction ConstructMaxNe(const Graph& g, const Rational& alpha,
                                 std::size_t repair_state_limit = 1 << 18);

// --- Set-Cover reductions --------------------------------------------------

struct SetCoverInstance {
  int element_count = 0;
  std::vector<std::vector<int>> sets;
  std::optional<int> known_optimum;
};

// Smallest cover size by subset enumeration (tiny instances only).
int MinimumCoverSize(const SetCoverInstance& inst);
bool IsCover(const SetCoverInstance& inst, const std::vector<int>& chosen);

struct ReductionArtifact {
  Variant variant = Variant::kSum;
  Graph graph;
  Roles roles;
  Rational alpha;
  // Copies per element (SUM: number of sets; MAX: 1) and clique size.
  int w = 1;
  int k = 0;
  NodeId c = 0;
  std::vector<NodeId> set_nodes;
  // element_nodes[i] lists the copies of element i.
  std::vector<std::vector<NodeId>> element_nodes;
  // The instance actually encoded (MAX pads to m = 2 * n_sets).
  SetCoverInstance encoded;
  std::vector<std::string> warnings;
};

// Throws kElementUncovered if some element lies in no set,
// kParameterOutOfRange for fewer than 2 sets or elements or out-of-range ids.
ReductionArtifact ReduceSetCover(const SetCoverInstance& inst,
                                 Variant variant);

// Set indices whose set nodes are gateways in `s`.
std::vector<int> DecodeCover(const ReductionArtifact& artifact,
                             const StrategyProfile& s);

}  // namespace gateway

#endif  // GATEWAY_CONSTRUCTIONS_H_
