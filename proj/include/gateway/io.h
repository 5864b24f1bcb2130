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

// File formats: graphs (JSON or edge-list text), profiles, role sidecars,
// Set-Cover instances, dynamics traces and catalog CSV.

#ifndef GATEWAY_IO_H_
#define GATEWAY_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gateway/constructions.h"
#include "gateway/dynamics.h"
#include "gateway/game.h"
#include "gateway/graph.h"
#include "gateway/optimization.h"
#include "json.hpp"

namespace gateway {

using Json = nlohmann::ordered_json;

// Accepts {"n": int, "edges": [[u, v], ...]} or text whose first line is n
// followed by one "u v" pair per line. Blank lines and '#' comments are
// skipped in the text form.
Graph ParseGraph(std::string_view text);
Graph ReadGraphFile(const std::filesystem::path& path);
Json GraphToJson(const Graph& g);

Json ProfileToJson(const StrategyProfile& s);
StrategyProfile ProfileFromJson(int node_count, const Json& j);

struct RolesFile {
  std::string family;
  std::optional<Rational> alpha;
  std::vector<NodeId> initial;
  Roles roles;
};

Json RolesToJson(const GeneratedGraph& gen);
RolesFile ParseRoles(std::string_view text);
// "<stem>.roles.json" next to the graph file.
std::filesystem::path RolesSidecarPath(const std::filesystem::path& graph);

// First line "m n_sets", then one set per line of 0-based element ids.
SetCoverInstance ParseSetCover(std::string_view text);

Json TraceStepJson(std::size_t index, const TraceStep& step);
Json TraceOutcomeJson(const DynamicsTrace& trace);

// Header "profile,cost,is_optimal"; profile ids space-separated.
std::string CatalogCsv(const EquilibriumCatalog& catalog);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace gateway

#endif  // GATEWAY_IO_H_
