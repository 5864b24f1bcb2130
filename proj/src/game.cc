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

#include "gateway/game.h"

#include <algorithm>
#include <bit>
#include <string>

#include "gateway/error.h"

namespace gateway {

std::string_view VariantName(Variant variant) {
  return variant == Variant::kSum ? "sum" : "max";
}

std::string_view MoveKindName(MoveKind kind) {
  return kind == MoveKind::kOpen ? "open" : "close";
}

GameConfig::GameConfig(Variant variant, Rational alpha)
    : variant_(variant), alpha_(alpha) {
  if (alpha_ <= 0) {
    throw GameError(ErrorCode::kInvalidAlpha,
                    "alpha must be positive, got " + FormatRational(alpha_));
  }
}

StrategyProfile StrategyProfile::FromNodes(int node_count,
                                           std::span<const NodeId> gateways) {
  StrategyProfile s(node_count);
  for (NodeId v : gateways) {
    if (v < 0 || v >= node_count) {
      throw GameError(ErrorCode::kNodeIdOutOfRange,
                      "gateway " + std::to_string(v) + " outside [0," +
                          std::to_string(node_count) + ")");
    }
    std::uint64_t bit = 1ULL << (v & 63);
    if (!(s.words_[v >> 6] & bit)) {
      s.words_[v >> 6] |= bit;
      ++s.size_;
    }
  }
  if (s.size_ == 0) {
    throw GameError(ErrorCode::kEmptyProfile,
                    "a strategy profile needs at least one gateway");
  }
  return s;
}

StrategyProfile StrategyProfile::Single(int node_count, NodeId gateway) {
  return FromNodes(node_count, std::span<const NodeId>(&gateway, 1));
}

StrategyProfile StrategyProfile::All(int node_count) {
  std::vector<NodeId> all(node_count);
  for (NodeId v = 0; v < node_count; ++v) all[v] = v;
  return FromNodes(node_count, all);
}

StrategyProfile StrategyProfile::FromMask(int node_count, std::uint64_t mask) {
  if (node_count > 64 ||
      (node_count < 64 && (mask >> node_count) != 0)) {
    throw GameError(ErrorCode::kNodeIdOutOfRange,
                    "mask does not fit " + std::to_string(node_count) +
                        " nodes");
  }
  if (mask == 0) {
    throw GameError(ErrorCode::kEmptyProfile,
                    "a strategy profile needs at least one gateway");
  }
  StrategyProfile s(node_count);
  s.words_[0] = mask;
  s.size_ = std::popcount(mask);
  return s;
}

std::vector<NodeId> StrategyProfile::Members() const {
  std::vector<NodeId> out;
  out.reserve(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<NodeId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t StrategyProfile::ToMask() const {
  if (n_ > 64) {
    throw GameError(ErrorCode::kStateSpaceTooLarge,
                    "profile over more than 64 nodes has no mask form");
  }
  return words_[0];
}

StrategyProfile StrategyProfile::Toggled(NodeId v) const {
  if (v < 0 || v >= n_) {
    throw GameError(ErrorCode::kNodeIdOutOfRange,
                    "node " + std::to_string(v) + " out of range");
  }
  if (!CanToggle(v)) {
    throw GameError(ErrorCode::kEmptyProfile,
                    "the last gateway is not allowed to close");
  }
  StrategyProfile out = *this;
  out.words_[v >> 6] ^= 1ULL << (v & 63);
  out.size_ += Contains(v) ? -1 : 1;
  return out;
}

std::size_t StrategyProfile::Hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const StrategyProfile& a,
                                 const StrategyProfile& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Equal cardinality: the lowest differing node decides, its owner first.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Game::Game(Graph graph, GameConfig config)
    : graph_(std::move(graph)), distances_(graph_), config_(config) {}

void Game::CheckProfile(const StrategyProfile& s) const {
  if (s.node_count() != graph_.node_count()) {
    throw GameError(ErrorCode::kNodeIdOutOfRange,
                    "profile is over " + std::to_string(s.node_count()) +
                        " nodes, graph has " +
                        std::to_string(graph_.node_count()));
  }
}

std::vector<int> Game::GatewayDistances(const StrategyProfile& s) const {
  CheckProfile(s);
  return GatewayDistances(s.Members());
}

std::vector<int> Game::GatewayDistances(
    std::span<const NodeId> gateways) const {
  if (gateways.empty()) return {};
  return MultiSourceDistances(graph_, gateways);
}

std::int64_t Game::DistanceTerm(NodeId v,
                                std::span<const int> to_gateways) const {
  const int n = graph_.node_count();
  std::span<const int> row = distances_.row(v);
  std::int64_t sum = 0;
  int max = 0;
  if (to_gateways.empty()) {
    for (NodeId u = 0; u < n; ++u) {
      sum += row[u];
      max = std::max(max, row[u]);
    }
  } else {
    const int own = to_gateways[v];
    for (NodeId u = 0; u < n; ++u) {
      int delta = std::min(row[u], own + to_gateways[u]);
      sum += delta;
      max = std::max(max, delta);
    }
  }
  return config_.variant() == Variant::kSum ? sum : max;
}

std::int64_t Game::TotalDistance(std::span<const int> to_gateways) const {
  std::int64_t total = 0;
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    total += DistanceTerm(v, to_gateways);
  }
  return total;
}

int Game::CommDistance(const StrategyProfile& s, NodeId u, NodeId v) const {
  std::vector<int> to_gateways = GatewayDistances(s);
  return std::min(distances_(u, v), to_gateways[u] + to_gateways[v]);
}

Rational Game::PrivateCost(const StrategyProfile& s, NodeId v) const {
  std::vector<int> to_gateways = GatewayDistances(s);
  Rational cost(DistanceTerm(v, to_gateways));
  if (s.Contains(v)) cost += config_.alpha();
  return cost;
}

CostReport Game::Costs(const StrategyProfile& s) const {
  std::vector<int> to_gateways = GatewayDistances(s);
  CostReport report;
  report.private_costs.reserve(graph_.node_count());
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    Rational cost(DistanceTerm(v, to_gateways));
    if (s.Contains(v)) cost += config_.alpha();
    report.social += cost;
    report.private_costs.push_back(cost);
  }
  return report;
}

Rational Game::SocialCost(const StrategyProfile& s) const {
  std::vector<int> to_gateways = GatewayDistances(s);
  return config_.alpha() * s.size() + Rational(TotalDistance(to_gateways));
}

namespace {

// Delta of v's private cost when toggling v, given d(., S) for the current
// profile. Opening can update d(., S) in O(n) from v's distance row.
Move EvaluateWith(const Game& game, const StrategyProfile& s, NodeId v,
                  std::span<const int> to_gateways) {
  Move move;
  move.node = v;
  const bool is_gateway = s.Contains(v);
  move.kind = is_gateway ? MoveKind::kClose : MoveKind::kOpen;
  const std::int64_t before = game.DistanceTerm(v, to_gateways);
  std::int64_t after = 0;
  if (is_gateway) {
    std::vector<NodeId> rest;
    rest.reserve(s.size());
    for (NodeId g : s.Members()) {
      if (g != v) rest.push_back(g);
    }
    move.forbidden = rest.empty();
    after = game.DistanceTerm(v, game.GatewayDistances(rest));
    move.cost_delta = Rational(after - before) - game.alpha();
  } else {
    std::vector<int> opened(to_gateways.begin(), to_gateways.end());
    std::span<const int> row = game.distances().row(v);
    for (std::size_t u = 0; u < opened.size(); ++u) {
      opened[u] = std::min(opened[u], row[u]);
    }
    after = game.DistanceTerm(v, opened);
    move.cost_delta = Rational(after - before) + game.alpha();
  }
  return move;
}

}  // namespace

Move Game::EvaluateMove(const StrategyProfile& s, NodeId v) const {
  CheckProfile(s);
  if (v < 0 || v >= graph_.node_count()) {
    throw GameError(ErrorCode::kNodeIdOutOfRange,
                    "node " + std::to_string(v) + " out of range");
  }
  std::vector<int> to_gateways = GatewayDistances(s);
  return EvaluateWith(*this, s, v, to_gateways);
}

std::vector<Move> Game::ImprovingMoves(const StrategyProfile& s) const {
  std::vector<int> to_gateways = GatewayDistances(s);
  std::vector<Move> out;
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    if (!s.CanToggle(v)) continue;
    Move move = EvaluateWith(*this, s, v, to_gateways);
    if (move.IsImproving()) out.push_back(std::move(move));
  }
  return out;
}

bool Game::IsNashEquilibrium(const StrategyProfile& s) const {
  std::vector<int> to_gateways = GatewayDistances(s);
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    if (!s.CanToggle(v)) continue;
    if (EvaluateWith(*this, s, v, to_gateways).IsImproving()) return false;
  }
  return true;
}

}  // namespace gateway
