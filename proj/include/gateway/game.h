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

#ifndef GATEWAY_GAME_H_
#define GATEWAY_GAME_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "gateway/graph.h"
#include "gateway/rational.h"

namespace gateway {

enum class Variant { kSum, kMax };

std::string_view VariantName(Variant variant);

class GameConfig {
 public:
  // Throws GameError(kInvalidAlpha) unless alpha > 0.
  GameConfig(Variant variant, Rational alpha);

  Variant variant() const { return variant_; }
  const Rational& alpha() const { return alpha_; }

 private:
  Variant variant_;
  Rational alpha_;
};

// Non-empty set of gateway nodes over a graph with `node_count` nodes.
class StrategyProfile {
 public:
  // Placeholder over zero nodes; not a valid profile for any game.
  StrategyProfile() = default;

  // Throws kEmptyProfile or kNodeIdOutOfRange. Duplicates are ignored.
  static StrategyProfile FromNodes(int node_count,
                                   std::span<const NodeId> gateways);
  static StrategyProfile Single(int node_count, NodeId gateway);
  static StrategyProfile All(int node_count);
  // Bit i of `mask` marks node i; node_count <= 64.
  static StrategyProfile FromMask(int node_count, std::uint64_t mask);

  int node_count() const { return n_; }
  int size() const { return size_; }
  bool Contains(NodeId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1ULL;
  }
  std::vector<NodeId> Members() const;
  std::uint64_t ToMask() const;

  // False only when v is the sole gateway.
  bool CanToggle(NodeId v) const { return !(size_ == 1 && Contains(v)); }
  // Throws kEmptyProfile when closing the last gateway.
  StrategyProfile Toggled(NodeId v) const;

  std::size_t Hash() const;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
  // Cardinality first, then lexicographic on the sorted member list.
  friend std::strong_ordering operator<=>(const StrategyProfile& a,
                                          const StrategyProfile& b);

 private:
  explicit StrategyProfile(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int n_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ProfileHash {
  std::size_t operator()(const StrategyProfile& s) const { return s.Hash(); }
};

enum class MoveKind { kOpen, kClose };

std::string_view MoveKindName(MoveKind kind);

struct Move {
  NodeId node = 0;
  MoveKind kind = MoveKind::kOpen;
  // c_v(toggled profile) - c_v(current profile).
  Rational cost_delta;
  // Set when `node` is the last gateway; such a close is never applied.
  bool forbidden = false;

  bool IsImproving() const { return !forbidden && cost_delta < 0; }

  friend bool operator==(const Move&, const Move&) = default;
};

struct CostReport {
  std::vector<Rational> private_costs;
  Rational social;
};

// A game instance: graph, its distance oracle and the configuration. All
// queries are const; d(., S) is recomputed per call (one multi-source BFS)
// and shared across the nodes evaluated by that call.
class Game {
 public:
  Game(Graph graph, GameConfig config);

  const Graph& graph() const { return graph_; }
  const DistanceOracle& distances() const { return distances_; }
  const GameConfig& config() const { return config_; }
  Variant variant() const { return config_.variant(); }
  const Rational& alpha() const { return config_.alpha(); }
  int node_count() const { return graph_.node_count(); }

  // delta(u, v) = min{d(u,v), d(u,S) + d(S,v)}.
  int CommDistance(const StrategyProfile& s, NodeId u, NodeId v) const;
  Rational PrivateCost(const StrategyProfile& s, NodeId v) const;
  Rational SocialCost(const StrategyProfile& s) const;
  CostReport Costs(const StrategyProfile& s) const;

  Move EvaluateMove(const StrategyProfile& s, NodeId v) const;
  // Strictly improving, non-forbidden moves sorted by node id.
  std::vector<Move> ImprovingMoves(const StrategyProfile& s) const;
  bool IsNashEquilibrium(const StrategyProfile& s) const;

  // Lower-level access used by the search modules. `to_gateways` is the
  // vector d(., S) for the profile in question.
  std::vector<int> GatewayDistances(const StrategyProfile& s) const;
  std::vector<int> GatewayDistances(std::span<const NodeId> gateways) const;
  // Sum (SUM) or max (MAX) of delta(v, .) given d(., S).
  std::int64_t DistanceTerm(NodeId v, std::span<const int> to_gateways) const;
  // Sum over v of DistanceTerm(v, .).
  std::int64_t TotalDistance(std::span<const int> to_gateways) const;

  void CheckProfile(const StrategyProfile& s) const;

 private:
  Graph graph_;
  DistanceOracle distances_;
  GameConfig config_;
};

}  // namespace gateway

template <>
struct std::hash<gateway::StrategyProfile> {
  std::size_t operator()(const gateway::StrategyProfile& s) const {
    return s.Hash();
  }
};

#endif  // GATEWAY_GAME_H_
