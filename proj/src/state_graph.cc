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

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>

#include "gateway/dynamics.h"
#include "gateway/error.h"

namespace gateway {
namespace {

using Mask = std::uint32_t;

// Improving toggles of a mask-encoded profile, evaluated straight from the
// distance rows. Mirrors Game::ImprovingMoves without allocating profiles.
class MaskEvaluator {
 public:
  explicit MaskEvaluator(const Game& game)
      : game_(game), n_(game.node_count()), base_(n_), toggled_(n_) {}

  // Appends the masks reachable by one improving move from `mask`.
  void Successors(Mask mask, std::vector<Mask>& out) {
    Fill(mask, base_);
    const int gateways = std::popcount(mask);
    for (NodeId v = 0; v < n_; ++v) {
      const bool open = (mask >> v) & 1U;
      if (open && gateways == 1) continue;
      const std::int64_t before = game_.DistanceTerm(v, base_);
      std::int64_t after;
      Rational delta;
      if (open) {
        Fill(mask & ~(1U << v), toggled_);
        after = game_.DistanceTerm(v, toggled_);
        delta = Rational(after - before) - game_.alpha();
      } else {
        std::span<const int> row = game_.distances().row(v);
        for (int u = 0; u < n_; ++u) toggled_[u] = std::min(base_[u], row[u]);
        after = game_.DistanceTerm(v, toggled_);
        delta = Rational(after - before) + game_.alpha();
      }
      if (delta < 0) out.push_back(mask ^ (1U << v));
    }
  }

 private:
  void Fill(Mask mask, std::vector<int>& to_gateways) const {
    std::fill(to_gateways.begin(), to_gateways.end(), n_);
    while (mask) {
      NodeId s = std::countr_zero(mask);
      mask &= mask - 1;
      std::span<const int> row = game_.distances().row(s);
      for (int u = 0; u < n_; ++u) {
        to_gateways[u] = std::min(to_gateways[u], row[u]);
      }
    }
  }

  const Game& game_;
  int n_;
  std::vector<int> base_;
  std::vector<int> toggled_;
};

// Finds a directed cycle reachable from `root` (iterative DFS with colors).
// `color` is shared across calls: 0 new, 1 on stack, 2 done.
std::vector<Mask> FindCycleFrom(Mask root,
                                const std::vector<std::uint64_t>& offsets,
                                const std::vector<Mask>& targets,
                                std::vector<std::uint8_t>& color) {
  if (color[root] != 0) return {};
  struct Frame {
    Mask state;
    std::uint64_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({root, offsets[root]});
  color[root] = 1;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == offsets[top.state + 1]) {
      color[top.state] = 2;
      stack.pop_back();
      continue;
    }
    Mask succ = targets[top.next++];
    if (color[succ] == 1) {
      std::vector<Mask> cycle;
      auto it = std::find_if(stack.begin(), stack.end(),
                             [succ](const Frame& f) { return f.state == succ; });
      for (; it != stack.end(); ++it) cycle.push_back(it->state);
      return cycle;
    }
    if (color[succ] == 0) {
      color[succ] = 1;
      stack.push_back({succ, offsets[succ]});
    }
  }
  return {};
}

}  // namespace

std::string_view ConvergenceName(Convergence c) {
  switch (c) {
    case Convergence::kFip:
      return "FIP";
    case Convergence::kWeaklyAcyclicOnly:
      return "WEAKLY_ACYCLIC";
    case Convergence::kNotWeaklyAcyclic:
      return "NOT_WEAKLY_ACYCLIC";
  }
  return "UNKNOWN";
}

int ResolveExhaustiveLimit(std::optional<int> requested) {
  if (requested) return *requested;
  if (const char* env = std::getenv("GATEWAY_GAMES_EXHAUSTIVE_LIMIT")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value < 64) {
      return static_cast<int>(value);
    }
    throw GameError(ErrorCode::kParseError,
                    "GATEWAY_GAMES_EXHAUSTIVE_LIMIT must be an integer in "
                    "[1, 63], got '" + std::string(env) + "'");
  }
  return kDefaultExhaustiveLimit;
}

StateGraphReport BuildIrStateGraph(const Game& game, int exhaustive_limit) {
  const int n = game.node_count();
  if (n > exhaustive_limit || n > kMaxExhaustiveLimit) {
    throw GameError(ErrorCode::kStateSpaceTooLarge,
                    "state graph over " + std::to_string(n) +
                        " nodes exceeds the exhaustive limit of " +
                        std::to_string(std::min(exhaustive_limit,
                                                kMaxExhaustiveLimit)));
  }
  const Mask last = static_cast<Mask>((1ULL << n) - 1);
  const std::size_t slots = static_cast<std::size_t>(last) + 1;

  // Forward adjacency in CSR form; slot 0 (empty profile) stays empty.
  std::vector<std::uint64_t> offsets(slots + 1, 0);
  std::vector<Mask> targets;
  MaskEvaluator eval(game);
  std::vector<Mask> succ;
  for (std::size_t mask = 1; mask <= last; ++mask) {
    succ.clear();
    eval.Successors(static_cast<Mask>(mask), succ);
    targets.insert(targets.end(), succ.begin(), succ.end());
    offsets[mask + 1] = targets.size();
  }
  offsets[1] = 0;

  StateGraphReport report;
  report.state_count = last;
  report.edge_count = targets.size();

  // Reverse reachability from the sinks.
  std::vector<std::uint64_t> in_offsets(slots + 1, 0);
  for (Mask t : targets) ++in_offsets[t + 1];
  for (std::size_t i = 1; i <= slots; ++i) in_offsets[i] += in_offsets[i - 1];
  std::vector<Mask> sources(targets.size());
  {
    std::vector<std::uint64_t> fill(in_offsets.begin(), in_offsets.end() - 1);
    for (std::size_t mask = 1; mask <= last; ++mask) {
      for (std::uint64_t e = offsets[mask]; e < offsets[mask + 1]; ++e) {
        sources[fill[targets[e]]++] = static_cast<Mask>(mask);
      }
    }
  }
  std::vector<std::uint8_t> reaches(slots, 0);
  std::deque<Mask> queue;
  for (std::size_t mask = 1; mask <= last; ++mask) {
    if (offsets[mask] == offsets[mask + 1]) {
      report.ne_states.push_back(
          StrategyProfile::FromMask(n, static_cast<std::uint64_t>(mask)));
      reaches[mask] = 1;
      queue.push_back(static_cast<Mask>(mask));
    }
  }
  while (!queue.empty()) {
    Mask x = queue.front();
    queue.pop_front();
    for (std::uint64_t e = in_offsets[x]; e < in_offsets[x + 1]; ++e) {
      Mask p = sources[e];
      if (!reaches[p]) {
        reaches[p] = 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<Mask> trapped;
  for (std::size_t mask = 1; mask <= last; ++mask) {
    if (!reaches[mask]) trapped.push_back(static_cast<Mask>(mask));
  }

  std::vector<std::uint8_t> color(slots, 0);
  std::vector<Mask> cycle;
  if (!trapped.empty()) {
    // Every trapped state has successors, all trapped: a cycle lives there.
    cycle = FindCycleFrom(trapped.front(), offsets, targets, color);
  } else {
    for (std::size_t mask = 1; mask <= last && cycle.empty(); ++mask) {
      cycle = FindCycleFrom(static_cast<Mask>(mask), offsets, targets, color);
    }
  }

  for (Mask m : cycle) report.cycle.push_back(StrategyProfile::FromMask(n, m));
  for (Mask m : trapped) {
    report.trapped.push_back(StrategyProfile::FromMask(n, m));
  }
  if (!trapped.empty()) {
    report.classification = Convergence::kNotWeaklyAcyclic;
  } else if (!cycle.empty()) {
    report.classification = Convergence::kWeaklyAcyclicOnly;
  } else {
    report.classification = Convergence::kFip;
  }
  return report;
}

ReachabilityResult SearchEquilibriumPath(const Game& game,
                                         const StrategyProfile& start,
                                         std::size_t max_states) {
  game.CheckProfile(start);
  struct Node {
    StrategyProfile profile;
    std::size_t parent;
    std::optional<Move> via;
  };
  ReachabilityResult result;
  std::vector<Node> nodes;
  std::unordered_map<StrategyProfile, std::size_t, ProfileHash> index;
  nodes.push_back({start, 0, std::nullopt});
  index.emplace(start, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    std::vector<Move> moves = game.ImprovingMoves(nodes[head].profile);
    if (moves.empty()) {
      result.reachable = true;
      for (std::size_t at = head;; at = nodes[at].parent) {
        result.path.push_back(nodes[at].profile);
        if (!nodes[at].via) break;
        result.moves.push_back(*nodes[at].via);
      }
      std::reverse(result.path.begin(), result.path.end());
      std::reverse(result.moves.begin(), result.moves.end());
      break;
    }
    for (const Move& m : moves) {
      StrategyProfile next = nodes[head].profile.Toggled(m.node);
      if (index.contains(next)) continue;
      if (nodes.size() >= max_states) {
        result.truncated = true;
        break;
      }
      index.emplace(next, nodes.size());
      nodes.push_back({std::move(next), head, m});
    }
    if (result.truncated) break;
  }
  result.explored = nodes.size();
  return result;
}

ReachabilityResult ReachesNeFrom(const Game& game, const StrategyProfile& start,
                                 int exhaustive_limit) {
  const int bits = std::clamp(exhaustive_limit, 1, 40);
  ReachabilityResult result =
      SearchEquilibriumPath(game, start, std::size_t{1} << bits);
  if (result.truncated) {
    throw GameError(ErrorCode::kStateSpaceTooLarge,
                    "reachable state set exceeds 2^" + std::to_string(bits) +
                        " profiles");
  }
  return result;
}

}  // namespace gateway
