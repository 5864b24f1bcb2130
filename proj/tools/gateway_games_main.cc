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

// Command-line entry point. Data goes to stdout, the run manifest to stderr.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gateway/constructions.h"
#include "gateway/dynamics.h"
#include "gateway/error.h"
#include "gateway/game.h"
#include "gateway/io.h"
#include "gateway/optimization.h"

namespace gateway {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 2;
constexpr int kExitCycle = 3;
constexpr int kExitBudget = 4;
constexpr int kExitStalled = 5;

struct Options {
  std::string command_line;
  // Game inputs.
  std::string graph_path;
  std::string roles_path;
  std::string variant = "sum";
  std::string alpha;
  int exhaustive_limit = 0;  // 0: environment or default.
  // gen.
  std::string family;
  int n = 0;
  int c = 1;
  int r = 0;
  bool experimental = false;
  std::string out;
  // dynamics.
  std::string init;
  std::string scheduler = "round-robin";
  std::uint64_t seed = 0;
  std::int64_t max_steps = 0;
  // optimum / equilibria.
  bool bounded = false;
  std::string upper;
  bool csv = false;
};

std::string Timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string Hex(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

void EmitManifest(const Options& opt, const Graph* g,
                  const std::optional<GameConfig>& cfg) {
  Json m;
  m["command"] = opt.command_line;
  m["graph_hash"] = g ? Json(Hex(g->Fingerprint())) : Json(nullptr);
  m["variant"] = cfg ? Json(std::string(VariantName(cfg->variant())))
                     : Json(nullptr);
  m["alpha"] = cfg ? Json(FormatRational(cfg->alpha())) : Json(nullptr);
  m["seed"] = opt.seed;
  m["version"] = GATEWAY_GAMES_VERSION;
  m["timestamp"] = Timestamp();
  std::cerr << m.dump() << "\n";
}

Variant ParseVariant(const std::string& name) {
  if (name == "sum") return Variant::kSum;
  if (name == "max") return Variant::kMax;
  throw GameError(ErrorCode::kParseError,
                  "variant must be sum or max, got '" + name + "'");
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// A graph file together with whatever its sidecar says about it.
struct LoadedGame {
  Graph graph;
  RolesFile roles;
  std::optional<GameConfig> config;
};

LoadedGame Load(const Options& opt) {
  LoadedGame out;
  out.graph = ReadGraphFile(opt.graph_path);
  std::filesystem::path roles = opt.roles_path.empty()
                                    ? RolesSidecarPath(opt.graph_path)
                                    : std::filesystem::path(opt.roles_path);
  if (std::filesystem::exists(roles)) {
    out.roles = ParseRoles(ReadFile(roles));
  } else if (!opt.roles_path.empty()) {
    throw GameError(ErrorCode::kParseError,
                    "roles file not found: " + opt.roles_path);
  }
  std::optional<Rational> alpha = out.roles.alpha;
  if (!opt.alpha.empty()) alpha = ParseRational(opt.alpha);
  if (!alpha) {
    throw GameError(ErrorCode::kParseError,
                    "--alpha is required (no alpha in the roles sidecar)");
  }
  out.config.emplace(ParseVariant(opt.variant), *alpha);
  return out;
}

NodeId ResolveNode(const LoadedGame& loaded, const std::string& token) {
  if (!token.empty() && std::isdigit(static_cast<unsigned char>(token[0]))) {
    std::size_t used = 0;
    int id = std::stoi(token, &used);
    if (used == token.size()) return id;
  }
  auto it = loaded.roles.roles.named.find(token);
  if (it == loaded.roles.roles.named.end()) {
    throw GameError(ErrorCode::kParseError,
                    "'" + token + "' is neither a node id nor a named role");
  }
  return it->second;
}

std::vector<NodeId> ResolveNodes(const LoadedGame& loaded,
                                 const std::string& list) {
  std::vector<NodeId> out;
  for (const std::string& token : SplitCommas(list)) {
    out.push_back(ResolveNode(loaded, token));
  }
  return out;
}

Scheduler ParseScheduler(const Options& opt, const LoadedGame& loaded) {
  const std::string& s = opt.scheduler;
  std::string head = s.substr(0, s.find(':'));
  std::string tail = s.find(':') == std::string::npos
                         ? std::string()
                         : s.substr(s.find(':') + 1);
  if (head == "round-robin" && tail.empty()) return RoundRobin{};
  if (head == "best-gain" && tail.empty()) return BestGain{};
  if (head == "random" && tail.empty()) return RandomSeeded{opt.seed};
  if (head == "fixed" && !tail.empty()) {
    return FixedSequence{ResolveNodes(loaded, tail)};
  }
  if (head == "opens-only") {
    std::vector<NodeId> nodes;
    if (tail.empty()) {
      for (NodeId v = 0; v < loaded.graph.node_count(); ++v) nodes.push_back(v);
    } else {
      nodes = ResolveNodes(loaded, tail);
    }
    return OpensOnly{nodes};
  }
  throw GameError(ErrorCode::kParseError,
                  "unknown scheduler '" + s +
                      "' (round-robin, best-gain, random, fixed:a,b, "
                      "opens-only[:a,b])");
}

std::optional<int> LimitFlag(const Options& opt) {
  if (opt.exhaustive_limit > 0) return opt.exhaustive_limit;
  return std::nullopt;
}

void PrintJson(const Json& j) { std::cout << j.dump(2) << "\n"; }

int CmdGen(const Options& opt) {
  std::optional<Rational> alpha;
  if (!opt.alpha.empty()) alpha = ParseRational(opt.alpha);
  auto need_alpha = [&]() {
    if (!alpha) {
      throw GameError(ErrorCode::kParameterOutOfRange,
                      "family '" + opt.family + "' needs --alpha");
    }
    return *alpha;
  };
  GeneratedGraph gen = [&]() {
    const std::string& f = opt.family;
    if (f == "ir-cycle") {
      return GenIrCycle(
          {.n = opt.n, .c = opt.c, .r = opt.r, .alpha = need_alpha()});
    }
    if (f == "non-wag") {
      return GenNonWag(alpha.value_or(Rational(7)), opt.experimental);
    }
    if (f == "sum-poa-star") return GenSumPoaStar(opt.n, need_alpha());
    if (f == "max-poa-star") return GenMaxPoaStar(opt.n);
    if (f == "max-line") return GenMaxLine(need_alpha());
    if (f == "path") return GenPath(opt.n);
    if (f == "clique") return GenClique(opt.n);
    if (f == "star") return GenStar(opt.n);
    throw GameError(ErrorCode::kParameterOutOfRange,
                    "unknown family '" + f + "'");
  }();
  EmitManifest(opt, &gen.graph,
               gen.alpha ? std::optional<GameConfig>(
                               GameConfig(Variant::kSum, *gen.alpha))
                         : std::nullopt);
  Json graph = GraphToJson(gen.graph);
  Json roles = RolesToJson(gen);
  if (opt.out.empty()) {
    PrintJson(Json{{"graph", graph}, {"roles", roles}});
  } else {
    WriteFile(opt.out, graph.dump() + "\n");
    WriteFile(RolesSidecarPath(opt.out), roles.dump(2) + "\n");
  }
  return kExitOk;
}

int CmdDynamics(const Options& opt) {
  LoadedGame loaded = Load(opt);
  EmitManifest(opt, &loaded.graph, loaded.config);
  Game game(loaded.graph, *loaded.config);
  std::vector<NodeId> init;
  if (!opt.init.empty()) {
    init = ResolveNodes(loaded, opt.init);
  } else if (!loaded.roles.initial.empty()) {
    init = loaded.roles.initial;
  } else {
    init = {0};
  }
  StrategyProfile start = StrategyProfile::FromNodes(game.node_count(), init);
  Scheduler scheduler = ParseScheduler(opt, loaded);
  std::int64_t steps = opt.max_steps > 0 ? opt.max_steps
                                         : DefaultMaxSteps(game.node_count());
  DynamicsTrace trace = RunDynamics(game, start, scheduler, steps);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    std::cout << TraceStepJson(i, trace.steps[i]).dump() << "\n";
  }
  std::cout << TraceOutcomeJson(trace).dump() << "\n";
  switch (trace.outcome) {
    case OutcomeKind::kConvergedToNe:
      return kExitOk;
    case OutcomeKind::kCycleDetected:
      return kExitCycle;
    case OutcomeKind::kBudgetExhausted:
      return kExitBudget;
    case OutcomeKind::kStalled:
      return kExitStalled;
  }
  return kExitError;
}

Json ProfileList(const std::vector<StrategyProfile>& list, std::size_t cap) {
  Json out = Json::array();
  for (std::size_t i = 0; i < list.size() && i < cap; ++i) {
    out.push_back(ProfileToJson(list[i]));
  }
  return out;
}

int CmdClassify(const Options& opt) {
  LoadedGame loaded = Load(opt);
  EmitManifest(opt, &loaded.graph, loaded.config);
  Game game(loaded.graph, *loaded.config);
  StateGraphReport report =
      BuildIrStateGraph(game, ResolveExhaustiveLimit(LimitFlag(opt)));
  constexpr std::size_t kSample = 64;
  Json out;
  out["classification"] = std::string(ConvergenceName(report.classification));
  out["states"] = report.state_count;
  out["edges"] = report.edge_count;
  out["equilibrium_count"] = report.ne_states.size();
  out["equilibria"] = ProfileList(report.ne_states, kSample);
  out["cycle"] = ProfileList(report.cycle, report.cycle.size());
  out["trapped_count"] = report.trapped.size();
  out["trapped"] = ProfileList(report.trapped, kSample);
  PrintJson(out);
  return kExitOk;
}

Json OptimumJson(const OptimumResult& r) {
  Json out;
  out["profile"] = ProfileToJson(r.best_profile);
  out["cost"] = FormatRational(r.best_cost);
  out["method"] = std::string(OptimumMethodName(r.method));
  if (r.method == OptimumMethod::kBoundedCardinality) {
    out["upper_bound"] = FormatRational(r.upper_bound);
    out["cardinality_bound"] = r.bound;
    out["alpha_bound"] = r.alpha_bound;
  }
  out["certified_exact"] = r.certified_exact;
  out["profiles_evaluated"] = r.profiles_evaluated;
  return out;
}

int CmdOptimum(const Options& opt) {
  LoadedGame loaded = Load(opt);
  EmitManifest(opt, &loaded.graph, loaded.config);
  Game game(loaded.graph, *loaded.config);
  OptimumOptions options;
  options.exhaustive_limit = ResolveExhaustiveLimit(LimitFlag(opt));
  options.bounded = opt.bounded;
  if (!opt.upper.empty()) {
    options.upper_bound_profile = StrategyProfile::FromNodes(
        game.node_count(), ResolveNodes(loaded, opt.upper));
  }
  OptimumResult result = BruteForceOptimum(game, options);
  Json out = OptimumJson(result);
  // Set-node roles make reduction outputs readable without a lookup.
  const auto& node_roles = loaded.roles.roles.node_roles;
  if (static_cast<int>(node_roles.size()) == game.node_count()) {
    Json roles = Json::array();
    for (NodeId v : result.best_profile.Members()) roles.push_back(node_roles[v]);
    out["roles"] = std::move(roles);
  }
  PrintJson(out);
  return kExitOk;
}

int CmdEquilibria(const Options& opt, bool poa_only) {
  LoadedGame loaded = Load(opt);
  EmitManifest(opt, &loaded.graph, loaded.config);
  Game game(loaded.graph, *loaded.config);
  EquilibriumCatalog catalog =
      EnumerateEquilibria(game, ResolveExhaustiveLimit(LimitFlag(opt)));
  auto ratio = [](const std::optional<Rational>& q) {
    return q ? Json(FormatRational(*q)) : Json(nullptr);
  };
  if (poa_only) {
    PoaRegimeReport report = PoaRegime(game, catalog);
    Json out;
    out["poa"] = ratio(report.poa);
    out["pos"] = ratio(report.pos);
    out["optimum"] = FormatRational(catalog.optimum.best_cost);
    out["equilibrium_count"] = catalog.equilibria.size();
    out["regime"] = report.regime;
    out["envelope"] = report.envelope;
    out["upper_bound"] = ratio(report.upper_bound);
    out["within_bound"] = report.within_bound;
    PrintJson(out);
    return kExitOk;
  }
  if (opt.csv) {
    std::cout << CatalogCsv(catalog);
    return kExitOk;
  }
  Json list = Json::array();
  for (const EquilibriumEntry& e : catalog.equilibria) {
    list.push_back({{"profile", ProfileToJson(e.profile)},
                    {"cost", FormatRational(e.cost)},
                    {"is_optimal", e.is_optimal}});
  }
  Json out;
  out["optimum"] = OptimumJson(catalog.optimum);
  out["equilibria"] = std::move(list);
  out["poa"] = ratio(catalog.poa);
  out["pos"] = ratio(catalog.pos);
  PrintJson(out);
  return kExitOk;
}

int CmdReduce(const Options& opt) {
  SetCoverInstance inst = ParseSetCover(ReadFile(opt.graph_path));
  ReductionArtifact art = ReduceSetCover(inst, ParseVariant(opt.variant));
  EmitManifest(opt, &art.graph, GameConfig(art.variant, art.alpha));
  for (const std::string& w : art.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  GeneratedGraph gen{.family = std::string("set-cover-") +
                               std::string(VariantName(art.variant)),
                     .graph = art.graph,
                     .roles = art.roles,
                     .initial = StrategyProfile::Single(
                         art.graph.node_count(), art.c),
                     .alpha = art.alpha};
  Json out;
  out["variant"] = std::string(VariantName(art.variant));
  out["alpha"] = FormatRational(art.alpha);
  out["w"] = art.w;
  out["k"] = art.k;
  out["c"] = art.c;
  out["set_nodes"] = art.set_nodes;
  out["element_nodes"] = art.element_nodes;
  out["encoded_elements"] = art.encoded.element_count;
  out["encoded_sets"] = art.encoded.sets;
  out["warnings"] = art.warnings;
  if (opt.out.empty()) {
    out["graph"] = GraphToJson(art.graph);
    out["roles"] = RolesToJson(gen);
  } else {
    WriteFile(opt.out, GraphToJson(art.graph).dump() + "\n");
    WriteFile(RolesSidecarPath(opt.out), RolesToJson(gen).dump(2) + "\n");
  }
  PrintJson(out);
  return kExitOk;
}

void AddGameFlags(CLI::App* cmd, Options& opt) {
  cmd->add_option("graph", opt.graph_path, "Graph file (JSON or edge list)")
      ->required();
  cmd->add_option("--variant", opt.variant, "sum or max")
      ->check(CLI::IsMember({"sum", "max"}));
  cmd->add_option("--alpha", opt.alpha,
                  "Gateway price as p/q, integer or decimal");
  cmd->add_option("--roles", opt.roles_path,
                  "Roles sidecar (default: <graph>.roles.json)");
  cmd->add_option("--exhaustive-limit", opt.exhaustive_limit,
                  "Largest n for exhaustive search");
}

int Run(int argc, char** argv) {
  Options opt;
  for (int i = 0; i < argc; ++i) {
    if (i) opt.command_line += ' ';
    opt.command_line += argv[i];
  }
  CLI::App app{"Gateway placement games on graphs"};
  app.set_version_flag("--version", GATEWAY_GAMES_VERSION);
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", opt.family,
                  "ir-cycle, non-wag, sum-poa-star, max-poa-star, max-line, "
                  "path, clique, star")
      ->required();
  gen->add_option("--n", opt.n, "Node count");
  gen->add_option("--c", opt.c, "IR-cycle path length (1 or n/4)");
  gen->add_option("--r", opt.r, "IR-cycle pendants at w");
  gen->add_option("--alpha", opt.alpha, "Gateway price");
  gen->add_flag("--experimental", opt.experimental,
                "Allow the non-wag gadget at alpha != 7");
  gen->add_option("--out", opt.out,
                  "Graph JSON path; roles go to the sidecar next to it");

  CLI::App* dyn = app.add_subcommand("dynamics", "Run improving responses");
  AddGameFlags(dyn, opt);
  dyn->add_option("--init", opt.init, "Initial gateways: ids or role names");
  dyn->add_option("--scheduler", opt.scheduler,
                  "round-robin, best-gain, random, fixed:a,b, opens-only[:a,b]");
  dyn->add_option("--seed", opt.seed, "Seed for the random scheduler");
  dyn->add_option("--max-steps", opt.max_steps, "Step budget");

  CLI::App* cls = app.add_subcommand("classify", "Classify the IR state graph");
  AddGameFlags(cls, opt);

  CLI::App* optimum = app.add_subcommand("optimum", "Exact social optimum");
  AddGameFlags(optimum, opt);
  optimum->add_flag("--bounded", opt.bounded, "Use the bounded search");
  optimum->add_option("--upper", opt.upper,
                      "Feasible profile bounding the optimum");

  CLI::App* eq = app.add_subcommand("equilibria", "Enumerate equilibria");
  AddGameFlags(eq, opt);
  eq->add_flag("--csv", opt.csv, "CSV instead of JSON");

  CLI::App* poa = app.add_subcommand("poa", "Price of anarchy and stability");
  AddGameFlags(poa, opt);

  CLI::App* reduce = app.add_subcommand("reduce", "Set-Cover reduction");
  reduce->add_option("instance", opt.graph_path, "Set-Cover text file")
      ->required();
  reduce->add_option("--variant", opt.variant, "sum or max")
      ->check(CLI::IsMember({"sum", "max"}));
  reduce->add_option("--out", opt.out, "Graph JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) return CmdGen(opt);
    if (*dyn) return CmdDynamics(opt);
    if (*cls) return CmdClassify(opt);
    if (*optimum) return CmdOptimum(opt);
    if (*eq) return CmdEquilibria(opt, false);
    if (*poa) return CmdEquilibria(opt, true);
    if (*reduce) return CmdReduce(opt);
  } catch (const GameError& e) {
    std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace
}  // namespace gateway

int main(int argc, char** argv) { return gateway::Run(argc, argv); }
