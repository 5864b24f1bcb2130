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

#include "gateway/optimization.h"

#include <random>
#include <set>
#include <vector>

#include "gateway/constructions.h"
#include "gateway/dynamics.h"
#include "gateway/error.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace gateway {
namespace {

Game SumGame(const Graph& g, Rational alpha) {
  return Game(g, GameConfig(Variant::kSum, alpha));
}

TEST(BruteForceOptimumTest, SmallAlphaOpensEverything) {
  Game game = SumGame(GenPath(5).graph, Rational(3));
  OptimumResult r = BruteForceOptimum(game);
  EXPECT_EQ(r.best_cost, Rational(15));
  EXPECT_EQ(r.best_profile, StrategyProfile::All(5));
  EXPECT_EQ(r.method, OptimumMethod::kFullEnumeration);
  EXPECT_TRUE(r.certified_exact);
  EXPECT_EQ(r.profiles_evaluated, 31u);
}

TEST(BruteForceOptimumTest, StarTieGoesToSmallestSingleton) {
  Game game = SumGame(GenStar(5).graph, Rational(10));
  OptimumResult r = BruteForceOptimum(game);
  EXPECT_EQ(r.best_cost, Rational(42));
  EXPECT_EQ(r.best_profile, StrategyProfile::Single(5, 0));
  // A leaf singleton costs the same.
  EXPECT_EQ(game.SocialCost(StrategyProfile::Single(5, 3)), Rational(42));
}

TEST(BruteForceOptimumTest, MatchesOracle) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = testing::RandomConnectedGraph(n, 0.2, rng);
    Variant variant = trial % 2 ? Variant::kMax : Variant::kSum;
    Rational alpha(1 + rng() % 60, 1 + rng() % 3);
    Game game(g, GameConfig(variant, alpha));
    OptimumResult r = BruteForceOptimum(game);
    EXPECT_EQ(r.best_cost, testing::OracleOptimum(g, variant, alpha));
    EXPECT_EQ(game.SocialCost(r.best_profile), r.best_cost);
  }
}

TEST(BruteForceOptimumTest, SmallAlphaOptimumIsNAlpha) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 10);
    Graph g = testing::RandomConnectedGraph(n, 0.15, rng);
    Rational alpha(1 + rng() % ((n - 1) * 3), 3);
    if (alpha > n - 1) alpha = Rational(n - 1);
    OptimumResult r = BruteForceOptimum(SumGame(g, alpha));
    EXPECT_EQ(r.best_cost, alpha * n);
  }
}

TEST(BruteForceOptimumTest, BoundedSearchMatchesFullEnumeration) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    Graph g = testing::RandomConnectedGraph(n, 0.12, rng);
    Variant variant = trial % 3 == 0 ? Variant::kMax : Variant::kSum;
    Rational alpha(1 + rng() % (3 * n * n), 2);
    Game game(g, GameConfig(variant, alpha));
    OptimumResult full = BruteForceOptimum(game);
    OptimumResult bounded = BruteForceOptimum(game, {.bounded = true});
    EXPECT_EQ(bounded.method, OptimumMethod::kBoundedCardinality);
    EXPECT_TRUE(bounded.certified_exact);
    EXPECT_EQ(bounded.best_cost, full.best_cost) << "trial " << trial;
    EXPECT_LE(static_cast<int>(full.best_profile.size()), bounded.bound);
    EXPECT_LE(bounded.bound, bounded.alpha_bound);
  }
}

TEST(BruteForceOptimumTest, BoundedSearchBeyondExhaustiveLimit) {
  Game game = SumGame(GenStar(26).graph, Rational(400));
  EXPECT_THROW(BruteForceOptimum(game), GameError);
  OptimumResult r = BruteForceOptimum(game, {.bounded = true});
  EXPECT_TRUE(r.certified_exact);
  // Center alone: 400 + 25 + 2 * 25 * 24 / 2 ... computed directly.
  EXPECT_EQ(r.best_cost, game.SocialCost(StrategyProfile::Single(26, 0)));
  EXPECT_EQ(r.best_profile.size(), 1);
}

TEST(CardinalityBoundTest, LowerBoundIsSound) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = testing::RandomConnectedGraph(n, 0.3, rng);
    Variant variant = trial % 2 ? Variant::kMax : Variant::kSum;
    Game game(g, GameConfig(variant, Rational(1 + rng() % 40, 2)));
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      StrategyProfile s = StrategyProfile::FromMask(n, mask);
      ASSERT_GE(game.SocialCost(s), CardinalityLowerBound(game, s.size()));
    }
  }
}

TEST(CardinalityBoundTest, BoundCoversOptimum) {
  Game game = SumGame(GenPath(9).graph, Rational(30));
  OptimumResult opt = BruteForceOptimum(game);
  int bound = CardinalityBound(game, opt.best_cost);
  EXPECT_GE(bound, opt.best_profile.size());
  EXPECT_LE(CardinalityLowerBound(game, bound), opt.best_cost);
  if (bound < 9) {
    EXPECT_GT(CardinalityLowerBound(game, bound + 1), opt.best_cost);
  }
}

TEST(TwinClassesTest, StarAndClique) {
  auto star = TwinClasses(GenStar(5).graph);
  ASSERT_EQ(star.size(), 2u);
  EXPECT_EQ(star[0], std::vector<NodeId>({0}));
  EXPECT_EQ(star[1], std::vector<NodeId>({1, 2, 3, 4}));
  auto clique = TwinClasses(GenClique(4).graph);
  ASSERT_EQ(clique.size(), 1u);
  EXPECT_EQ(clique[0].size(), 4u);
  auto path = TwinClasses(GenPath(5).graph);
  EXPECT_EQ(path.size(), 5u);
}

TEST(TwinClassesTest, PartitionAndSwapInvariance) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = testing::RandomConnectedGraph(n, 0.4, rng);
    Game game = SumGame(g, Rational(5));
    std::set<NodeId> all;
    for (const auto& cls : TwinClasses(g)) {
      for (NodeId v : cls) EXPECT_TRUE(all.insert(v).second);
      if (cls.size() < 2) continue;
      // Swapping twins preserves social cost.
      NodeId a = cls[0], b = cls[1];
      for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        bool has_a = mask >> a & 1, has_b = mask >> b & 1;
        if (has_a == has_b) continue;
        std::uint64_t swapped = mask ^ (1ULL << a) ^ (1ULL << b);
        EXPECT_EQ(game.SocialCost(StrategyProfile::FromMask(n, mask)),
                  game.SocialCost(StrategyProfile::FromMask(n, swapped)));
      }
    }
    EXPECT_EQ(static_cast<int>(all.size()), n);
  }
}

TEST(GreedyTest, Examples) {
  Game star = SumGame(GenStar(5).graph, Rational(10));
  StrategyProfile s = GreedyGateways(star);
  EXPECT_EQ(s.size(), 1);
  EXPECT_EQ(star.SocialCost(s), Rational(42));

  Game path = SumGame(GenPath(5).graph, Rational(100));
  EXPECT_EQ(GreedyGateways(path).size(), 1);
}

TEST(GreedyTest, NeverBeatsOptimum) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = testing::RandomConnectedGraph(n, 0.2, rng);
    Rational alpha(1 + rng() % (2 * n * n), 2);
    Game game = SumGame(g, alpha);
    StrategyProfile greedy = GreedyGateways(game);
    EXPECT_GE(game.SocialCost(greedy), BruteForceOptimum(game).best_cost);
    if (alpha <= n - 1) EXPECT_EQ(greedy, StrategyProfile::All(n));
  }
}

TEST(EnumerateEquilibriaTest, CliqueMidAlpha) {
  Game game = SumGame(GenClique(4).graph, Rational(3, 2));
  EquilibriumCatalog cat = EnumerateEquilibria(game);
  ASSERT_EQ(cat.equilibria.size(), 5u);
  int singles = 0;
  for (const EquilibriumEntry& e : cat.equilibria) {
    if (e.profile.size() == 1) {
      ++singles;
      EXPECT_EQ(e.cost, Rational(27, 2));
      EXPECT_FALSE(e.is_optimal);
    } else {
      EXPECT_EQ(e.profile, StrategyProfile::All(4));
      EXPECT_EQ(e.cost, Rational(6));
      EXPECT_TRUE(e.is_optimal);
    }
  }
  EXPECT_EQ(singles, 4);
  EXPECT_EQ(cat.poa, Rational(9, 4));
  EXPECT_EQ(cat.pos, Rational(1));
}

TEST(EnumerateEquilibriaTest, TinyAlphaUniqueEquilibrium) {
  Game game = SumGame(GenPath(3).graph, Rational(1, 2));
  EquilibriumCatalog cat = EnumerateEquilibria(game);
  ASSERT_EQ(cat.equilibria.size(), 1u);
  EXPECT_EQ(cat.equilibria[0].profile, StrategyProfile::All(3));
  EXPECT_EQ(cat.poa, Rational(1));
  EXPECT_EQ(cat.pos, Rational(1));
}

TEST(EnumerateEquilibriaTest, StarOfPathsLeafEquilibrium) {
  GeneratedGraph gen = GenSumPoaStar(13, Rational(9));
  Game game = SumGame(gen.graph, Rational(9));
  EquilibriumCatalog cat = EnumerateEquilibria(game);
  bool found = false;
  for (const EquilibriumEntry& e : cat.equilibria) {
    found |= e.profile == gen.initial;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(cat.optimum.best_cost, Rational(9 * 13));
  Rational leaf_ratio = game.SocialCost(gen.initial) / cat.optimum.best_cost;
  ASSERT_TRUE(cat.poa.has_value());
  EXPECT_GE(*cat.poa, leaf_ratio);
  // Lower estimate n/2 * k * L(L+1) over alpha n with L = 2, k = 6.
  EXPECT_GE(leaf_ratio, Rational(13 * 6 * 2 * 3, 2) / Rational(9 * 13));
}

TEST(EnumerateEquilibriaTest, CatalogInvariants) {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = testing::RandomConnectedGraph(n, 0.2, rng);
    Variant variant = trial % 2 ? Variant::kMax : Variant::kSum;
    Rational alpha(1 + rng() % (2 * n * n), 1 + rng() % 3);
    Game game(g, GameConfig(variant, alpha));
    EquilibriumCatalog cat = EnumerateEquilibria(game);
    std::size_t ne = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      ne += testing::OracleIsNash(g, variant, alpha,
                                  testing::MaskMembers(mask));
    }
    EXPECT_EQ(cat.equilibria.size(), ne);
    for (std::size_t i = 0; i < cat.equilibria.size(); ++i) {
      const EquilibriumEntry& e = cat.equilibria[i];
      EXPECT_TRUE(game.IsNashEquilibrium(e.profile));
      EXPECT_EQ(e.cost, game.SocialCost(e.profile));
      EXPECT_EQ(e.is_optimal, e.cost == cat.optimum.best_cost);
      if (i > 0) EXPECT_LT(cat.equilibria[i - 1].profile, e.profile);
    }
    if (ne == 0) {
      EXPECT_FALSE(cat.poa.has_value());
      continue;
    }
    EXPECT_GE(*cat.poa, *cat.pos);
    EXPECT_GE(*cat.pos, Rational(1));
    if (variant == Variant::kSum && alpha <= n - 1) {
      EXPECT_EQ(*cat.pos, Rational(1));
    }
  }
}

TEST(EnumerateEquilibriaTest, RespectsLimit) {
  Game game = SumGame(GenPath(12).graph, Rational(5));
  EXPECT_THROW(EnumerateEquilibria(game, 10), GameError);
}

TEST(PoaRegimeTest, Regimes) {
  Game tiny = SumGame(GenPath(4).graph, Rational(1, 2));
  PoaRegimeReport r = PoaRegime(tiny, EnumerateEquilibria(tiny));
  EXPECT_EQ(r.poa, Rational(1));
  EXPECT_TRUE(r.within_bound);

  // MAX with alpha < 1 still admits {0, 3} on P4: opening node 1 or 2 keeps
  // its eccentricity at 1, so the envelope of 1 is exceeded and flagged.
  Game max_tiny(GenPath(4).graph, GameConfig(Variant::kMax, Rational(1, 3)));
  EquilibriumCatalog mc = EnumerateEquilibria(max_tiny);
  ASSERT_EQ(mc.equilibria.size(), 2u);
  EXPECT_EQ(mc.equilibria[0].profile, StrategyProfile::FromMask(4, 0b1001));
  EXPECT_TRUE(testing::OracleIsNash(GenPath(4).graph, Variant::kMax,
                                    Rational(1, 3), {0, 3}));
  PoaRegimeReport m = PoaRegime(max_tiny, mc);
  EXPECT_EQ(m.poa, Rational(7, 2));
  EXPECT_EQ(m.pos, Rational(1));
  EXPECT_EQ(m.upper_bound, Rational(1));
  EXPECT_FALSE(m.within_bound);

  Game max_k3(GenClique(3).graph, GameConfig(Variant::kMax, Rational(1, 2)));
  PoaRegimeReport k3 = PoaRegime(max_k3, EnumerateEquilibria(max_k3));
  EXPECT_EQ(k3.poa, Rational(7, 3));
  EXPECT_EQ(k3.pos, Rational(1));

  Game huge = SumGame(GenPath(5).graph, Rational(20));
  PoaRegimeReport h = PoaRegime(huge, EnumerateEquilibria(huge));
  EXPECT_EQ(h.envelope, "constant");
  ASSERT_TRUE(h.upper_bound.has_value());
  EXPECT_LE(*h.poa, *h.upper_bound);
  EXPECT_TRUE(h.within_bound);

  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = testing::RandomConnectedGraph(n, 0.2, rng);
    Game game = SumGame(g, Rational(2 + rng() % (n - 2 + 1), 1));
    PoaRegimeReport rep = PoaRegime(game, EnumerateEquilibria(game));
    EXPECT_FALSE(rep.regime.empty());
    EXPECT_TRUE(rep.within_bound) << rep.regime;
  }
}

}  // namespace
}  // namespace gateway
