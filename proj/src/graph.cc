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

#include "gateway/graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "gateway/error.h"

namespace gateway {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

std::vector<int> Bfs(const Graph& g, std::span<const NodeId> sources) {
  std::vector<int> dist(g.node_count(), kUnreached);
  std::deque<NodeId> queue;
  for (NodeId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

Graph Graph::Build(int node_count, std::span<const Edge> edges) {
  if (node_count < 1) {
    throw GameError(ErrorCode::kNodeIdOutOfRange,
                    "graph needs at least one node, got " +
                        std::to_string(node_count));
  }
  Graph g;
  g.adjacency_.assign(node_count, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw GameError(ErrorCode::kNodeIdOutOfRange,
                      "edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") outside [0," + std::to_string(node_count) + ")");
    }
    if (u == v) {
      throw GameError(ErrorCode::kSelfLoop,
                      "self-loop at node " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;

  const NodeId root = 0;
  std::vector<int> dist = Bfs(g, std::span<const NodeId>(&root, 1));
  for (NodeId v = 0; v < node_count; ++v) {
    if (dist[v] == kUnreached) {
      throw GameError(ErrorCode::kDisconnectedGraph,
                      "node " + std::to_string(v) +
                          " is not reachable from node 0");
    }
  }

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(node_count));
  for (auto [u, v] : g.Edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  g.fingerprint_ = h;
  return g;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DistanceOracle::DistanceOracle(const Graph& g)
    : n_(g.node_count()), graph_fingerprint_(g.Fingerprint()) {
  dist_.resize(static_cast<std::size_t>(n_) * n_);
  for (NodeId s = 0; s < n_; ++s) {
    std::vector<int> row = Bfs(g, std::span<const NodeId>(&s, 1));
    std::copy(row.begin(), row.end(), dist_.begin() + s * n_);
  }
}

std::optional<int> Girth(const Graph& g) {
  const int n = g.node_count();
  int best = kUnreached;
  std::vector<int> dist(n);
  std::vector<NodeId> parent(n);
  std::deque<NodeId> queue;
  for (NodeId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      // Closing a cycle at x or later costs at least 2 * dist[x] edges.
      if (2 * dist[x] >= best) break;
      for (NodeId y : g.neighbors(x)) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

GraphMetrics ComputeMetrics(const Graph& g, const DistanceOracle& d) {
  if (d.graph_fingerprint() != g.Fingerprint() ||
      d.node_count() != g.node_count()) {
    throw std::invalid_argument("distance oracle belongs to a different graph");
  }
  GraphMetrics m;
  const int n = g.node_count();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u; v < n; ++v) {
      if (d(u, v) > m.diameter) {
        m.diameter = d(u, v);
        m.peripheral_pair = {u, v};
      }
    }
  }
  m.girth = Girth(g);
  return m;
}

ComponentSet ComponentsWithout(const Graph& g,
                               std::span<const NodeId> removed) {
  const int n = g.node_count();
  ComponentSet out;
  out.assignment.assign(n, 0);
  std::vector<bool> gone(n, false);
  for (NodeId v : removed) {
    if (v < 0 || v >= n) {
      throw GameError(ErrorCode::kNodeIdOutOfRange,
                      "removed node " + std::to_string(v) + " out of range");
    }
    gone[v] = true;
    out.assignment[v] = kRemovedNode;
  }
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (gone[start] || seen[start]) continue;
    const int index = out.count();
    int size = 0;
    seen[start] = true;
    stack.assign(1, start);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      out.assignment[x] = index;
      ++size;
      for (NodeId y : g.neighbors(x)) {
        if (!gone[y] && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

std::vector<int> MultiSourceDistances(const Graph& g,
                                      std::span<const NodeId> sources) {
  return Bfs(g, sources);
}

}  // namespace gateway
