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
#include <deque>
#include <string>

#include "gateway/constructions.h"
#include "gateway/dynamics.h"
#include "gateway/error.h"

namespace gateway {
namespace {

// Nodes at BFS level `level` from `root`, in discovery order.
std::vector<NodeId> LevelNodes(const Graph& g, NodeId root, int level) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeId> out;
  std::deque<NodeId> queue = {root};
  dist[root] = 0;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    if (dist[x] == level) {
      out.push_back(x);
      continue;
    }
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

MaxNeConstruction ConstructMaxNe(const Graph& g, const Rational& alpha,
                                 std::size_t repair_state_limit) {
  DistanceOracle d(g);
  GraphMetrics metrics = ComputeMetrics(g, d);
  if (alpha < 1 || alpha >= metrics.diameter) {
    throw GameError(ErrorCode::kParameterOutOfRange,
                    "need 1 <= alpha < diam = " +
                        std::to_string(metrics.diameter) + ", got " +
                        FormatRational(alpha));
  }
  if (metrics.girth && Rational(*metrics.girth) < 4 * alpha) {
    throw GameError(ErrorCode::kGirthTooSmall,
                    "girth " + std::to_string(*metrics.girth) +
                        " is below 4 alpha = " + FormatRational(4 * alpha));
  }
  const int n = g.node_count();
  GirthNeParams params;
  params.peripheral_pair = metrics.peripheral_pair;
  params.peripheral_distance = metrics.diameter;
  std::vector<NodeId> gateways;

  if (Rational(metrics.diameter) < 2 * alpha) {
    // First node of minimum eccentricity.
    NodeId best = 0;
    int best_ecc = n;
    for (NodeId v = 0; v < n; ++v) {
      std::span<const int> row = d.row(v);
      int ecc = *std::max_element(row.begin(), row.end());
      if (ecc < best_ecc) {
        best = v;
        best_ecc = ecc;
      }
    }
    gateways.push_back(best);
  } else {
    const Rational half = (Rational(metrics.diameter) - alpha) / 2;
    const int radius =
        static_cast<int>(Floor(std::min(alpha - 1, half)));
    params.radius = radius;
    for (NodeId root : {metrics.peripheral_pair.first,
                        metrics.peripheral_pair.second}) {
      for (NodeId x : LevelNodes(g, root, radius)) {
        bool spaced = std::all_of(gateways.begin(), gateways.end(),
                                  [&](NodeId s) { return d(x, s) >= radius; });
        if (spaced && std::find(gateways.begin(), gateways.end(), x) ==
                          gateways.end()) {
          gateways.push_back(x);
          params.level_gateways.push_back(x);
        }
      }
    }
    const int target = static_cast<int>(Ceil(alpha));
    std::vector<int> to_gateways = MultiSourceDistances(g, gateways);
    for (bool changed = true; changed;) {
      changed = false;
      for (NodeId v = 0; v < n; ++v) {
        if (to_gateways[v] != target) continue;
        gateways.push_back(v);
        params.spread_gateways.push_back(v);
        std::span<const int> row = d.row(v);
        for (NodeId u = 0; u < n; ++u) {
          to_gateways[u] = std::min(to_gateways[u], row[u]);
        }
        changed = true;
      }
    }
  }

  Game game(g, GameConfig(Variant::kMax, alpha));
  StrategyProfile constructed = StrategyProfile::FromNodes(n, gateways);
  MaxNeConstruction result;
  result.profile = constructed;
  result.params = std::move(params);
  result.constructed = constructed;
  if (game.IsNashEquilibrium(constructed)) return result;

  // The level construction is not always an equilibrium; look for the
  // nearest one along improving moves.
  if (repair_state_limit > 0) {
    ReachabilityResult search =
        SearchEquilibriumPath(game, constructed, repair_state_limit);
    if (search.reachable) {
      result.profile = search.path.back();
      result.repair_moves = std::move(search.moves);
      return result;
    }
  }
  throw GameError(ErrorCode::kConstructionNotEquilibrium,
                  "constructed profile over " + std::to_string(n) +
                      " nodes is not an equilibrium and no repair path was "
                      "found");
}

}  // namespace gateway
