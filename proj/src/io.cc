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

#include "gateway/io.h"

#include <fstream>
#include <sstream>

#include "gateway/error.h"

namespace gateway {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw GameError(ErrorCode::kParseError, message);
}

int ToInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) Fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(std::string("invalid JSON: ") + e.what());
  }
}

Graph GraphFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["edges"].is_array()) {
    Fail("graph JSON needs \"n\" and an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) Fail("each edge must be [u, v]");
    edges.emplace_back(ToInt(e[0], "edge endpoint"), ToInt(e[1], "edge endpoint"));
  }
  return Graph::Build(ToInt(j["n"], "n"), edges);
}

Graph GraphFromText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        Fail("line " + std::to_string(line_no) + ": '" + token +
             "' is not an integer");
      }
    }
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1) Fail("first line must hold only n");
      n = static_cast<int>(values[0]);
    } else if (values.size() != 2) {
      Fail("line " + std::to_string(line_no) + ": expected \"u v\"");
    } else {
      edges.emplace_back(static_cast<int>(values[0]),
                         static_cast<int>(values[1]));
    }
  }
  if (!n) Fail("graph text is empty");
  return Graph::Build(*n, edges);
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) Fail("cannot write " + path.string());
}

Graph ParseGraph(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return GraphFromJson(ParseJson(text));
  }
  return GraphFromText(text);
}

Graph ReadGraphFile(const std::filesystem::path& path) {
  return ParseGraph(ReadFile(path));
}

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.Edges()) edges.push_back({u, v});
  return Json{{"n", g.node_count()}, {"edges", std::move(edges)}};
}

Json ProfileToJson(const StrategyProfile& s) {
  Json out = Json::array();
  for (NodeId v : s.Members()) out.push_back(v);
  return out;
}

StrategyProfile ProfileFromJson(int node_count, const Json& j) {
  if (!j.is_array()) Fail("profile must be a JSON list of node ids");
  std::vector<NodeId> nodes;
  for (const Json& v : j) nodes.push_back(ToInt(v, "profile entry"));
  return StrategyProfile::FromNodes(node_count, nodes);
}

Json RolesToJson(const GeneratedGraph& gen) {
  Json named = Json::object();
  for (const auto& [name, id] : gen.roles.named) named[name] = id;
  Json out;
  out["family"] = gen.family;
  out["alpha"] = gen.alpha ? Json(FormatRational(*gen.alpha)) : Json(nullptr);
  out["initial"] = ProfileToJson(gen.initial);
  out["named"] = std::move(named);
  out["nodes"] = gen.roles.node_roles;
  return out;
}

RolesFile ParseRoles(std::string_view text) {
  Json j = ParseJson(text);
  if (!j.is_object()) Fail("roles file must be a JSON object");
  RolesFile out;
  try {
    out.family = j.value("family", "");
    if (j.contains("alpha") && !j["alpha"].is_null()) {
      out.alpha = ParseRational(j["alpha"].get<std::string>());
    }
    if (j.contains("initial")) {
      for (const Json& v : j["initial"]) out.initial.push_back(v.get<int>());
    }
    if (j.contains("named")) {
      for (const auto& [name, id] : j["named"].items()) {
        out.roles.named[name] = id.get<int>();
      }
    }
    if (j.contains("nodes")) {
      out.roles.node_roles = j["nodes"].get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    Fail(std::string("malformed roles file: ") + e.what());
  }
  return out;
}

std::filesystem::path RolesSidecarPath(const std::filesystem::path& graph) {
  std::filesystem::path out = graph;
  if (out.extension() == ".json") out.replace_extension();
  out += ".roles.json";
  return out;
}

SetCoverInstance ParseSetCover(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long long>> rows;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        Fail("set-cover entry '" + token + "' is not an integer");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows[0].size() != 2) {
    Fail("set-cover header must be \"m n_sets\"");
  }
  SetCoverInstance inst;
  inst.element_count = static_cast<int>(rows[0][0]);
  const long long sets = rows[0][1];
  if (static_cast<long long>(rows.size()) - 1 != sets) {
    Fail("header declares " + std::to_string(sets) + " sets but " +
         std::to_string(rows.size() - 1) + " follow");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    inst.sets.emplace_back(rows[i].begin(), rows[i].end());
  }
  return inst;
}

Json TraceStepJson(std::size_t index, const TraceStep& step) {
  Json out;
  out["step"] = index;
  out["node"] = step.move.node;
  out["move"] = std::string(MoveKindName(step.move.kind));
  out["delta"] = FormatRational(step.move.cost_delta);
  return out;
}

Json TraceOutcomeJson(const DynamicsTrace& trace) {
  Json out;
  out["outcome"] = std::string(OutcomeName(trace.outcome));
  out["steps"] = trace.steps.size();
  out["final"] = ProfileToJson(trace.final_profile);
  if (trace.outcome == OutcomeKind::kCycleDetected) {
    out["cycle_entry"] = trace.cycle_entry;
    out["cycle_period"] = trace.cycle_period;
  }
  return out;
}

std::string CatalogCsv(const EquilibriumCatalog& catalog) {
  std::string out = "profile,cost,is_optimal\n";
  for (const EquilibriumEntry& e : catalog.equilibria) {
    std::string ids;
    for (NodeId v : e.profile.Members()) {
      if (!ids.empty()) ids += ' ';
      ids += std::to_string(v);
    }
    out += ids + "," + FormatRational(e.cost) + "," +
           (e.is_optimal ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace gateway
