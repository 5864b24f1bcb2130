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

#include <filesystem>
#include <random>

#include "gateway/error.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace gateway {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const GameError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GameError";
  return ErrorCode::kDisconnectedGraph;
}

TEST(ParseGraphTest, TextFormat) {
  Graph g = ParseGraph("# a path\n3\n0 1\n1 2  # tail\n\n");
  EXPECT_EQ(g.node_count(), 3);
  EXPECT_TRUE(g.HasEdge(0, 1));
  EXPECT_TRUE(g.HasEdge(2, 1));
  EXPECT_FALSE(g.HasEdge(0, 2));
}

TEST(ParseGraphTest, JsonFormat) {
  Graph g = ParseGraph(R"({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})");
  EXPECT_EQ(g.node_count(), 4);
  EXPECT_EQ(g.Edges().size(), 3u);
}

TEST(ParseGraphTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseGraph(""); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseGraph("3\n0 x\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseGraph("3\n0 1 2\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseGraph("{\"n\": 2}"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseGraph("{\"n\": 2, \"edges\": [[0]]}"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseGraph("{broken"); }), ErrorCode::kParseError);
  // Structural errors come from the graph itself.
  EXPECT_EQ(CodeOf([] { ParseGraph("3\n0 1\n"); }),
            ErrorCode::kDisconnectedGraph);
  EXPECT_EQ(CodeOf([] { ParseGraph("2\n0 0\n0 1\n"); }), ErrorCode::kSelfLoop);
}

TEST(GraphJsonTest, RoundTrip) {
  std::mt19937_64 rng(173);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::RandomConnectedGraph(1 + rng() % 15, 0.3, rng);
    Graph back = ParseGraph(GraphToJson(g).dump());
    EXPECT_EQ(back.Edges(), g.Edges());
    EXPECT_EQ(back.Fingerprint(), g.Fingerprint());
  }
  EXPECT_EQ(GraphToJson(ParseGraph("2\n1 0\n")).dump(),
            R"({"n":2,"edges":[[0,1]]})");
}

TEST(ProfileJsonTest, RoundTripAndErrors) {
  StrategyProfile s = StrategyProfile::FromMask(6, 0b101001);
  EXPECT_EQ(ProfileToJson(s).dump(), "[0,3,5]");
  EXPECT_EQ(ProfileFromJson(6, ProfileToJson(s)), s);
  EXPECT_EQ(CodeOf([] { ProfileFromJson(3, Json::object()); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ProfileFromJson(3, Json::array()); }),
            ErrorCode::kEmptyProfile);
  EXPECT_EQ(CodeOf([] { ProfileFromJson(3, Json::parse("[4]")); }),
            ErrorCode::kNodeIdOutOfRange);
}

TEST(RolesTest, RoundTrip) {
  GeneratedGraph gen = GenNonWag();
  RolesFile back = ParseRoles(RolesToJson(gen).dump());
  EXPECT_EQ(back.family, gen.family);
  EXPECT_EQ(back.alpha, Rational(7));
  EXPECT_EQ(back.initial, gen.initial.Members());
  EXPECT_EQ(back.roles.named, gen.roles.named);
  EXPECT_EQ(back.roles.node_roles, gen.roles.node_roles);

  RolesFile path = ParseRoles(RolesToJson(GenPath(3)).dump());
  EXPECT_FALSE(path.alpha.has_value());
  EXPECT_EQ(CodeOf([] { ParseRoles("[]"); }), ErrorCode::kParseError);
  EXPECT_EQ(RolesSidecarPath("out/g.json"), "out/g.roles.json");
  EXPECT_EQ(RolesSidecarPath("g.txt"), "g.txt.roles.json");
}

TEST(SetCoverTest, Parse) {
  SetCoverInstance inst = ParseSetCover("6 3 # header\n0 1\n2 3\n4 5\n");
  EXPECT_EQ(inst.element_count, 6);
  ASSERT_EQ(inst.sets.size(), 3u);
  EXPECT_EQ(inst.sets[2], std::vector<int>({4, 5}));
  EXPECT_EQ(CodeOf([] { ParseSetCover("6\n0 1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseSetCover("6 3\n0 1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseSetCover("2 1\na\n"); }), ErrorCode::kParseError);
}

TEST(TraceJsonTest, Format) {
  GeneratedGraph gadget = GenNonWag();
  Game game(gadget.graph, GameConfig(Variant::kSum, Rational(7)));
  DynamicsTrace trace = RunDynamics(game, gadget.initial, RoundRobin{});
  ASSERT_EQ(trace.steps.size(), 4u);
  EXPECT_EQ(TraceStepJson(0, trace.steps[0]).dump(),
            R"({"step":0,"node":0,"move":"open","delta":"-1/1"})");
  Json outcome = TraceOutcomeJson(trace);
  EXPECT_EQ(outcome["outcome"], "cycle");
  EXPECT_EQ(outcome["cycle_period"], 4);
  EXPECT_EQ(outcome["final"].dump(), "[2]");
}

TEST(CatalogCsvTest, Format) {
  Game game(GenClique(3).graph, GameConfig(Variant::kSum, Rational(3, 2)));
  std::string csv = CatalogCsv(EnumerateEquilibria(game));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "profile,cost,is_optimal");
  EXPECT_NE(csv.find("0 1 2,9/2,true\n"), std::string::npos);
}

TEST(FileTest, ReadWrite) {
  auto dir = std::filesystem::temp_directory_path() / "gateway_io_test";
  std::filesystem::create_directories(dir);
  WriteFile(dir / "g.txt", "2\n0 1\n");
  EXPECT_EQ(ReadGraphFile(dir / "g.txt").node_count(), 2);
  EXPECT_EQ(CodeOf([&] { ReadFile(dir / "missing"); }), ErrorCode::kParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace gateway
