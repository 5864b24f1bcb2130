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

#include "gateway/dynamics.h"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

#include "gateway/error.h"

namespace gateway {
namespace {

// Unbiased draw in [0, bound) from the raw mt19937_64 stream, so traces do
// not depend on the standard library's distribution implementation.
std::size_t Draw(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

class Selector {
 public:
  Selector(const Scheduler& scheduler, int n) : scheduler_(scheduler), n_(n) {
    if (const auto* r = std::get_if<RandomSeeded>(&scheduler_)) {
      rng_.seed(r->seed);
    }
    if (const auto* o = std::get_if<OpensOnly>(&scheduler_)) {
      allowed_.assign(n, false);
      for (NodeId v : o->nodes) {
        if (v < 0 || v >= n) {
          throw GameError(ErrorCode::kNodeIdOutOfRange,
                          "scheduler node " + std::to_string(v) +
                              " out of range");
        }
        allowed_[v] = true;
      }
    }
    if (const auto* f = std::get_if<FixedSequence>(&scheduler_)) {
      for (NodeId v : f->order) {
        if (v < 0 || v >= n) {
          throw GameError(ErrorCode::kNodeIdOutOfRange,
                          "scheduler node " + std::to_string(v) +
                              " out of range");
        }
      }
    }
  }

  // `moves` is the sorted list of improving moves; returns nullptr to stall.
  const Move* Pick(const std::vector<Move>& moves) {
    std::vector<const Move*> by_node(n_, nullptr);
    for (const Move& m : moves) by_node[m.node] = &m;
    return std::visit(
        [&](const auto& s) -> const Move* { return PickFor(s, moves, by_node); },
        scheduler_);
  }

 private:
  const Move* PickFor(const RoundRobin&, const std::vector<Move>&,
                      const std::vector<const Move*>& by_node) {
    for (int i = 0; i < n_; ++i) {
      NodeId v = (cursor_ + i) % n_;
      if (by_node[v]) {
        cursor_ = (v + 1) % n_;
        return by_node[v];
      }
    }
    return nullptr;
  }

  const Move* PickFor(const RandomSeeded&, const std::vector<Move>& moves,
                      const std::vector<const Move*>&) {
    return &moves[Draw(rng_, moves.size())];
  }

  const Move* PickFor(const BestGain&, const std::vector<Move>& moves,
                      const std::vector<const Move*>&) {
    const Move* best = &moves.front();
    for (const Move& m : moves) {
      // Most negative delta wins; moves arrive in ascending node order, so
      // keeping the first of equal deltas prefers the smaller id.
      if (m.cost_delta < best->cost_delta) best = &m;
    }
    return best;
  }

  const Move* PickFor(const FixedSequence& f, const std::vector<Move>&,
                      const std::vector<const Move*>& by_node) {
    const std::size_t len = f.order.size();
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t at = (cursor_ + i) % len;
      if (const Move* m = by_node[f.order[at]]) {
        cursor_ = static_cast<int>((at + 1) % len);
        return m;
      }
    }
    return nullptr;
  }

  const Move* PickFor(const OpensOnly&, const std::vector<Move>& moves,
                      const std::vector<const Move*>&) {
    for (const Move& m : moves) {
      if (allowed_[m.node] && m.kind == MoveKind::kOpen) return &m;
    }
    return nullptr;
  }

  const Scheduler& scheduler_;
  int n_;
  int cursor_ = 0;
  std::mt19937_64 rng_;
  std::vector<bool> allowed_;
};

}  // namespace

std::int64_t DefaultMaxSteps(int node_count) {
  constexpr std::int64_t kCap = 1'000'000;
  if (node_count >= 17) return kCap;
  return std::min<std::int64_t>(kCap, 10LL << node_count);
}

std::string_view OutcomeName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kConvergedToNe:
      return "converged";
    case OutcomeKind::kCycleDetected:
      return "cycle";
    case OutcomeKind::kBudgetExhausted:
      return "budget_exhausted";
    case OutcomeKind::kStalled:
      return "stalled";
  }
  return "unknown";
}

DynamicsTrace RunDynamics(const Game& game, const StrategyProfile& start,
                          const Scheduler& scheduler,
                          std::int64_t max_steps) {
  if (max_steps < 1) {
    throw GameError(ErrorCode::kParameterOutOfRange,
                    "max_steps must be at least 1");
  }
  game.CheckProfile(start);
  Selector selector(scheduler, game.node_count());
  DynamicsTrace trace;
  std::unordered_map<StrategyProfile, std::size_t, ProfileHash> seen;
  StrategyProfile current = start;
  for (std::int64_t step = 0;; ++step) {
    std::vector<Move> moves = game.ImprovingMoves(current);
    if (moves.empty()) {
      trace.outcome = OutcomeKind::kConvergedToNe;
      break;
    }
    auto [it, inserted] = seen.emplace(current, trace.steps.size());
    if (!inserted) {
      trace.outcome = OutcomeKind::kCycleDetected;
      trace.cycle_entry = it->second;
      trace.cycle_period = trace.steps.size() - it->second;
      break;
    }
    if (step == max_steps) {
      trace.outcome = OutcomeKind::kBudgetExhausted;
      break;
    }
    const Move* move = selector.Pick(moves);
    if (move == nullptr) {
      trace.outcome = OutcomeKind::kStalled;
      break;
    }
    StrategyProfile next = current.Toggled(move->node);
    trace.steps.push_back({std::move(current), *move});
    current = std::move(next);
  }
  trace.final_profile = std::move(current);
  return trace;
}

}  // namespace gateway
