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

#ifndef GATEWAY_GRAPH_H_
#define GATEWAY_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gateway {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

// Immutable, simple, connected, undirected graph over dense ids [0, n).
class Graph {
 public:
  // Zero-node placeholder; use Build for real graphs.
  Graph() = default;

  // Duplicate edges (in either orientation) are merged. Throws GameError with
  // kNodeIdOutOfRange, kSelfLoop or kDisconnectedGraph.
  static Graph Build(int node_count, std::span<const Edge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  bool HasEdge(NodeId u, NodeId v) const;

  // Canonical edge list (u < v), sorted.
  std::vector<Edge> Edges() const;

  // Stable 64-bit FNV-1a over the canonical edge list; identifies the graph
  // in distance oracles and run manifests.
  std::uint64_t Fingerprint() const { return fingerprint_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::uint64_t fingerprint_ = 0;
};

// All-pairs hop distances, one BFS per source.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g);

  int node_count() const { return n_; }
  int operator()(NodeId u, NodeId v) const { return dist_[u * n_ + v]; }
  std::span<const int> row(NodeId u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::uint64_t graph_fingerprint() const { return graph_fingerprint_; }

 private:
  int n_;
  std::uint64_t graph_fingerprint_;
  std::vector<int> dist_;
};

inline DistanceOracle AllPairsDistances(const Graph& g) {
  return DistanceOracle(g);
}

struct GraphMetrics {
  int diameter = 0;
  // Length of a shortest cycle; std::nullopt means the graph is a tree.
  std::optional<int> girth;
  // Lexicographically smallest (u, v), u <= v, with dist(u, v) == diameter.
  Edge peripheral_pair{0, 0};
};

// Throws std::invalid_argument if `d` was not computed for `g`.
GraphMetrics ComputeMetrics(const Graph& g, const DistanceOracle& d);

// Shortest cycle length, or nullopt for trees. Per-root BFS.
std::optional<int> Girth(const Graph& g);

inline constexpr int kRemovedNode = -1;

struct ComponentSet {
  // assignment[v] is the component index of v, or kRemovedNode.
  std::vector<int> assignment;
  std::vector<int> sizes;

  int count() const { return static_cast<int>(sizes.size()); }
};

// Components of the subgraph induced on V \ removed, numbered in order of
// their smallest node id.
ComponentSet ComponentsWithout(const Graph& g, std::span<const NodeId> removed);

// Multi-source BFS distances to the nearest source.
std::vector<int> MultiSourceDistances(const Graph& g,
                                      std::span<const NodeId> sources);

}  // namespace gateway

#endif  // GATEWAY_GRAPH_H_
