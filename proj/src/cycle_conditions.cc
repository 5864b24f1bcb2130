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

#include <array>
#include <string>

#include "gateway/dynamics.h"
#include "gateway/error.h"

namespace gateway {
namespace {

struct Step {
  const char* label;
  const char* mover;
  NodeId node;
};

std::string Str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return FormatRational(q);
}

}  // namespace

std::vector<CycleCondition> VerifyCycleConditions(const IrCycleParams& p) {
  CheckIrCycleShape(p);
  if (p.alpha <= 0) {
    throw GameError(ErrorCode::kInvalidAlpha, "alpha must be positive");
  }
  const int n = p.n, c = p.c, r = p.r;
  const std::int64_t h = c / 2;
  // Thresholds on alpha: opens need alpha below, closes need alpha above.
  std::array<std::int64_t, 4> formula;
  std::array<std::string, 4> text;
  if (c == 1) {
    formula = {2 * r + 2, n - 1, r + 2, r + 1};
    text = {"2r+2", "n-1", "r+2", "r+1"};
  } else {
    formula = {std::int64_t{c} * (c + 1) + 2LL * r * c,
               2 * h * (h + 1) + std::int64_t{n - 2 * c - 1} * c,
               h * (h + 1) + std::int64_t{r + c + 1} * c,
               h * (h + 1) + std::int64_t{r + 1} * c};
    text = {"sum_{i<=c} 2i + 2rc", "2 sum_{i<=c/2} 2i + (n-2c-1)c",
            "sum_{i<=c/2} 2i + (r+c+1)c", "sum_{i<=c/2} 2i + (r+1)c"};
  }

  Game game(BuildIrCycleGraph(n, c, r), GameConfig(Variant::kSum, p.alpha));
  const NodeId u = 0, v = c, w = 2 * c;
  const std::array<Step, 4> steps = {{{"I", "u", u},
                                      {"II", "v", v},
                                      {"III", "u", u},
                                      {"IV", "v", v}}};
  std::vector<CycleCondition> out;
  StrategyProfile state = StrategyProfile::Single(n, w);
  for (int i = 0; i < 4; ++i) {
    Move m = game.EvaluateMove(state, steps[i].node);
    CycleCondition cond;
    cond.label = steps[i].label;
    cond.mover = steps[i].mover;
    cond.kind = m.kind;
    cond.cost_delta = m.cost_delta;
    const bool opens = m.kind == MoveKind::kOpen;
    // delta = change in distance term +/- alpha; recover the exact threshold.
    Rational distance_change =
        opens ? m.cost_delta - p.alpha : m.cost_delta + p.alpha;
    Rational exact = opens ? -distance_change : distance_change;
    cond.symbolic_lhs = cond.simulated_lhs = p.alpha;
    cond.symbolic_rhs = Rational(formula[i]);
    cond.simulated_rhs = exact;
    cond.holds_symbolic = opens ? p.alpha < cond.symbolic_rhs
                                : p.alpha > cond.symbolic_rhs;
    cond.holds_simulated = m.IsImproving();
    cond.inequality = std::string(steps[i].mover) +
                      (opens ? " opens if alpha < " : " closes if alpha > ") +
                      text[i] + ": " + Str(p.alpha) + (opens ? " < " : " > ") +
                      Str(cond.symbolic_rhs);
    out.push_back(std::move(cond));
    if (!m.forbidden) state = state.Toggled(steps[i].node);
  }
  return out;
}

std::vector<CycleCondition> VerifyMaxLineConditions(const Rational& alpha) {
  if (alpha <= 1) {
    throw GameError(ErrorCode::kParameterOutOfRange,
                    "MAX line requires alpha > 1, got " + Str(alpha));
  }
  GeneratedGraph line = GenMaxLine(alpha);
  Game game(line.graph, GameConfig(Variant::kMax, alpha));
  const std::int64_t f = Floor(alpha);
  const NodeId v = line.roles.at("v"), w = line.roles.at("w");
  // Private cost before and after each move as printed.
  struct Printed {
    Rational before, after;
    const char* text;
  };
  const std::array<Printed, 4> printed = {{
      {Rational(2 * f + 2), alpha + f + 1,
       "2floor(a)+2 > a+floor(a)+1"},
      {Rational(2 * f + 2), alpha + f + 1,
       "2floor(a)+2 > a+floor(a)+1"},
      {alpha + f + 1, Rational(f + 1), "a+floor(a)+1 > floor(a)+1"},
      {alpha + 2 * f + 2, Rational(2 * f + 2),
       "a+2floor(a)+2 > 2floor(a)+2"},
  }};
  const std::array<Step, 4> steps = {{{"I", "w", w},
                                      {"II", "v", v},
                                      {"III", "w", w},
                                      {"IV", "v", v}}};
  std::vector<CycleCondition> out;
  StrategyProfile state = line.initial;
  for (int i = 0; i < 4; ++i) {
    Move m = game.EvaluateMove(state, steps[i].node);
    CycleCondition cond;
    cond.label = steps[i].label;
    cond.mover = steps[i].mover;
    cond.kind = m.kind;
    cond.cost_delta = m.cost_delta;
    cond.symbolic_lhs = printed[i].before;
    cond.symbolic_rhs = printed[i].after;
    cond.simulated_lhs = game.PrivateCost(state, steps[i].node);
    cond.simulated_rhs = cond.simulated_lhs + m.cost_delta;
    cond.holds_symbolic = cond.symbolic_lhs > cond.symbolic_rhs;
    cond.holds_simulated = m.IsImproving();
    cond.inequality = std::string(steps[i].mover) + " " +
                      std::string(MoveKindName(m.kind)) + "s since " +
                      printed[i].text + ": " + Str(cond.symbolic_lhs) +
                      " > " + Str(cond.symbolic_rhs);
    out.push_back(std::move(cond));
    if (!m.forbidden) state = state.Toggled(steps[i].node);
  }
  return out;
}

}  // namespace gateway
