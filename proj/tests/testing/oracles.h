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

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond Graph and Rational.

#ifndef GATEWAY_TESTS_TESTING_ORACLES_H_
#define GATEWAY_TESTS_TESTING_ORACLES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gateway/game.h"
#include "gateway/graph.h"
#include "gateway/rational.h"

namespace gateway::testing {

// Uniform random labelled tree (Pruefer sequence) on n >= 1 nodes.
Graph RandomTree(int n, std::mt19937_64& rng);

// Random tree plus each remaining pair independently with probability p.
Graph RandomConnectedGraph(int n, double p, std::mt19937_64& rng);

// Random non-empty subset of [0, n).
std::vector<NodeId> RandomProfile(int n, std::mt19937_64& rng);

// Every connected simple graph on exactly n labelled nodes (n <= 6).
std::vector<Graph> AllConnectedGraphs(int n);

// Hop distances by Floyd-Warshall on the adjacency matrix.
std::vector<std::vector<int>> FloydWarshall(const Graph& g);

// Shortest-path distances in G plus a hub joined to every gateway by
// zero-length edges, by Dijkstra. Equals the communication distance.
std::vector<std::vector<int>> AugmentedDistances(
    const Graph& g, const std::vector<NodeId>& gateways);

Rational OraclePrivateCost(const Graph& g, Variant variant,
                           const Rational& alpha,
                           const std::vector<NodeId>& gateways, NodeId v);
Rational OracleSocialCost(const Graph& g, Variant variant,
                          const Rational& alpha,
                          const std::vector<NodeId>& gateways);
// No single toggle (except closing the last gateway) strictly helps.
bool OracleIsNash(const Graph& g, Variant variant, const Rational& alpha,
                  const std::vector<NodeId>& gateways);

// Shortest cycle by removing each edge and measuring the detour.
std::optional<int> OracleGirth(const Graph& g);

// Minimum social cost over all non-empty subsets (n <= 16).
Rational OracleOptimum(const Graph& g, Variant variant, const Rational& alpha);

std::vector<NodeId> MaskMembers(std::uint64_t mask);

}  // namespace gateway::testing

#endif  // GATEWAY_TESTS_TESTING_ORACLES_H_
