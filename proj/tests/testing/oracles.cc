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

#include "testing/oracles.h"

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>
#include <set>

namespace gateway::testing {
namespace {

constexpr int kInf = INT_MAX / 4;

bool Contains(const std::vector<NodeId>& s, NodeId v) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

}  // namespace

Graph RandomTree(int n, std::mt19937_64& rng) {
  if (n == 1) return Graph::Build(1, {});
  if (n == 2) {
    std::vector<Edge> e = {{0, 1}};
    return Graph::Build(2, e);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& x : code) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int x : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph::Build(n, edges);
}

Graph RandomConnectedGraph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges = RandomTree(n, rng).Edges();
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::Build(n, edges);
}

std::vector<NodeId> RandomProfile(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.3);
  std::vector<NodeId> out;
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) out.push_back(v);
  }
  if (out.empty()) {
    out.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
  }
  return out;
}

std::vector<Graph> AllConnectedGraphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    }
    // Union-find connectivity check before building.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int parts = n;
    for (auto [u, v] : edges) {
      int a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --parts;
      }
    }
    if (parts == 1) out.push_back(Graph::Build(n, edges));
  }
  return out;
}

std::vector<std::vector<int>> FloydWarshall(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (NodeId u : g.neighbors(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> AugmentedDistances(
    const Graph& g, const std::vector<NodeId>& gateways) {
  const int n = g.node_count();
  const int hub = n;
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
  for (int v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v)) adj[v].push_back({u, 1});
  }
  for (NodeId s : gateways) {
    adj[s].push_back({hub, 0});
    adj[hub].push_back({s, 0});
  }
  std::vector<std::vector<int>> out(n);
  for (int src = 0; src < n; ++src) {
    std::vector<int> dist(n + 1, kInf);
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du > dist[u]) continue;
      for (auto [v, w] : adj[u]) {
        if (du + w < dist[v]) {
          dist[v] = du + w;
          pq.push({dist[v], v});
        }
      }
    }
    dist.pop_back();
    out[src] = std::move(dist);
  }
  return out;
}

Rational OraclePrivateCost(const Graph& g, Variant variant,
                           const Rational& alpha,
                           const std::vector<NodeId>& gateways, NodeId v) {
  std::vector<int> row = AugmentedDistances(g, gateways)[v];
  std::int64_t term = 0;
  for (int x : row) {
    term = variant == Variant::kSum ? term + x : std::max<std::int64_t>(term, x);
  }
  Rational cost(term);
  if (Contains(gateways, v)) cost += alpha;
  return cost;
}

Rational OracleSocialCost(const Graph& g, Variant variant,
                          const Rational& alpha,
                          const std::vector<NodeId>& gateways) {
  auto d = AugmentedDistances(g, gateways);
  Rational total(0);
  for (int v = 0; v < g.node_count(); ++v) {
    std::int64_t term = 0;
    for (int x : d[v]) {
      term = variant == Variant::kSum ? term + x
                                      : std::max<std::int64_t>(term, x);
    }
    total += Rational(term);
    if (Contains(gateways, v)) total += alpha;
  }
  return total;
}

bool OracleIsNash(const Graph& g, Variant variant, const Rational& alpha,
                  const std::vector<NodeId>& gateways) {
  for (int v = 0; v < g.node_count(); ++v) {
    std::vector<NodeId> toggled;
    if (Contains(gateways, v)) {
      if (gateways.size() == 1) continue;
      for (NodeId s : gateways) {
        if (s != v) toggled.push_back(s);
      }
    } else {
      toggled = gateways;
      toggled.push_back(v);
    }
    if (OraclePrivateCost(g, variant, alpha, toggled, v) <
        OraclePrivateCost(g, variant, alpha, gateways, v)) {
      return false;
    }
  }
  return true;
}

std::optional<int> OracleGirth(const Graph& g) {
  const int n = g.node_count();
  std::optional<int> best;
  for (auto [a, b] : g.Edges()) {
    // BFS from a to b avoiding the edge a-b.
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (NodeId y : g.neighbors(x)) {
        if ((x == a && y == b) || (x == b && y == a)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[b] >= 0 && (!best || dist[b] + 1 < *best)) best = dist[b] + 1;
  }
  return best;
}

Rational OracleOptimum(const Graph& g, Variant variant, const Rational& alpha) {
  const int n = g.node_count();
  std::optional<Rational> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Rational c = OracleSocialCost(g, variant, alpha, MaskMembers(mask));
    if (!best || c < *best) best = c;
  }
  return *best;
}

std::vector<NodeId> MaskMembers(std::uint64_t mask) {
  std::vector<NodeId> out;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

}  // namespace gateway::testing
