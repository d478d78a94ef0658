// Copyright 2026 The biasgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biasgraph/oracle.h"

#include <cmath>
#include <cstdlib>
#include <set>

#include "biasgraph/bne.h"
#include "biasgraph/error.h"
#include "biasgraph/generators.h"
#include "biasgraph/pure_eq.h"
#include "gtest/gtest.h"

namespace biasgraph {
namespace {

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(EnumeratePaths(MakeNamedInstance("fig1").graph).size(), 3u);
  for (int n : {1, 4, 9}) {
    EXPECT_EQ(EnumeratePaths(MakeFan({n, 2})).size(), static_cast<size_t>(n + 1));
  }
  RawGraph single;
  single.vertices = {"a", "b"};
  single.edges = {{"a", "b", 3}};
  single.source = "a";
  single.sink = "b";
  const std::vector<PathRecord> paths = EnumeratePaths(Validate(single).graph);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].cost, 3);
}

TEST(EnumerateTest, LexicographicAndCosted) {
  const TaskGraph fan = MakeFan({3, 2});
  const std::vector<PathRecord> paths = EnumeratePaths(fan);
  for (size_t i = 1; i < paths.size(); ++i) {
    EXPECT_LT(paths[i - 1].vertices, paths[i].vertices);
  }
  std::set<Rational> costs;
  for (const PathRecord& p : paths) costs.insert(p.cost);
  EXPECT_EQ(costs, (std::set<Rational>{1, 2, 4, 8}));
}

TEST(EnumerateTest, SizeGuard) {
  const TaskGraph big = MakeFan({13, 2});  // 15 vertices
  unsetenv("BIASGRAPH_MAX_BRUTE");
  EXPECT_EQ(MaxBruteVertices(), 14);
  try {
    EnumeratePaths(big);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_EQ(EnumeratePaths(big, big.source(), 15).size(), 14u);
  setenv("BIASGRAPH_MAX_BRUTE", "20", 1);
  EXPECT_EQ(EnumeratePaths(big).size(), 14u);
  setenv("BIASGRAPH_MAX_BRUTE", "junk", 1);
  EXPECT_EQ(MaxBruteVertices(), 14);
  unsetenv("BIASGRAPH_MAX_BRUTE");
}

TEST(BrutePerceivedTest, Examples) {
  const TaskGraph g = MakeNamedInstance("fig1").graph;
  const TraversalState start = TraversalState::AtSource(g);
  EXPECT_EQ(BrutePerceivedMin(g, start, *g.FindVertex("x"), 2, std::nullopt), 12);
  EXPECT_EQ(BrutePerceivedMin(g, start, *g.FindVertex("v"), 2, std::nullopt), 11);

  const TaskGraph fan = MakeFan({2, 2});
  const TraversalState at_s = TraversalState::AtSource(fan);
  const Competition race{1, 3};
  // Direct edge ties the opponent: 2 * 1 - 3/2.
  EXPECT_EQ(BrutePerceivedMin(fan, at_s, fan.sink(), 2, race), Rational(1, 2));
  EXPECT_EQ(BrutePerceivedMin(fan, at_s, fan.sink(), 2, race, TieRule::kBothFull), -1);
  EXPECT_EQ(BrutePerceivedMin(fan, at_s, fan.sink(), 2, race, TieRule::kNone), 2);
  // Every continuation through v1 loses.
  EXPECT_EQ(BrutePerceivedMin(fan, at_s, *fan.FindVertex("v1"), 2, race), 2);
}

TEST(BruteTraverseTest, MatchesExamples) {
  const NamedInstance fig1 = MakeNamedInstance("fig1");
  EXPECT_EQ(BruteTraverse(fig1.graph, 2, nullptr, 0), fig1.paths.at("biased"));
  EXPECT_EQ(BruteTraverse(fig1.graph, 1, nullptr, 0), fig1.paths.at("optimal"));
  const TaskGraph fan = MakeFan({5, Rational(3, 2)});
  const PathRecord p0 = FanPath(fan, 0);
  EXPECT_EQ(BruteTraverse(fan, 2, &p0, 1, &p0), p0);
  EXPECT_EQ(BruteTraverse(fan, 2, &p0, Rational(1, 2), &p0), FanPath(fan, 5));
}

TEST(RewardSweepTest, Examples) {
  const TaskGraph fan = MakeFan({5, Rational(3, 2)});
  const std::vector<Rational> probes = {Rational(1, 2), 1, 2};
  EXPECT_EQ(RewardSweepNe(fan, FanPath(fan, 0), 2, probes), (std::vector<Rational>{1, 2}));
  EXPECT_TRUE(RewardSweepNe(fan, FanPath(fan, 2), 2, probes).empty());
  EXPECT_TRUE(BruteCheckNe(fan, FanPath(fan, 5), Rational(81, 16), 2));
  EXPECT_FALSE(BruteCheckNe(fan, FanPath(fan, 5), Rational(82, 16), 2));

  const NamedInstance a = MakeNamedInstance("fig7a");
  const std::vector<Rational> a_probes = {1, 300};
  EXPECT_EQ(RewardSweepNe(a.graph, a.paths.at("Q"), 10, a_probes),
            (std::vector<Rational>{1}));
}

TEST(BruteDominantTest, AgreesWithLibrary) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const TaskGraph g = RandomLayeredDag(rng);
    EXPECT_EQ(BruteDominantPath(g), FindDominantPath(g));
  }
  const TaskGraph fan = MakeFan({3, 2});
  EXPECT_EQ(BruteDominantPath(fan), FanPath(fan, 0));
}

TEST(LadderTableTest, FanIsNotALadderButStillTabulates) {
  // Fan exits get more expensive with length, so only P0 survives.
  const LadderTable table = BruteLadderTable(MakeFan({3, 2}), 1, TieRule::kSplit);
  ASSERT_EQ(table.paths.size(), 1u);
  EXPECT_EQ(table.Symmetric(), (std::vector<int>{0}));
  EXPECT_TRUE(table.Asymmetric().empty());
}

TEST(MonteCarloTest, EqualRevenueFrequencyMatchesFixedPoint) {
  const BiasDistribution d = BiasDistribution::ShiftedEqualRevenue(2);
  const FanBneSolution s = SolveFanBne(3, 2, d, 4);
  ASSERT_NEAR(s.cutoff, 3, 1e-12);
  const PathFrequencies f = MonteCarloFanBne(3, 2, d, 4, s.cutoff, 100000, 11);
  EXPECT_EQ(f.samples, 100000);
  EXPECT_NEAR(f.frequency[0], 0.5, 3 * f.std_error[0]);
  EXPECT_NEAR(f.frequency[0] + f.frequency[3], 1, 1e-12);
}

TEST(MonteCarloTest, DegenerateCases) {
  const BiasDistribution u = BiasDistribution::Uniform(1.5, 3.5);
  // r = 4: cutoff 3.5 covers the whole support.
  EXPECT_EQ(MonteCarloFanBne(3, 1.5, u, 4, 3.5, 5000, 1).frequency[0], 1);
  EXPECT_EQ(MonteCarloFanBne(3, 1.5, u, 0, 1.5, 5000, 1).frequency[3], 1);
  const PathFrequencies a = MonteCarloFanBne(3, 1.5, u, 2, 2.5, 5000, 9);
  const PathFrequencies b = MonteCarloFanBne(3, 1.5, u, 2, 2.5, 5000, 9);
  EXPECT_EQ(a.frequency, b.frequency);
  EXPECT_THROW(MonteCarloFanBne(0, 1.5, u, 2, 2.5, 10, 9), Error);
}

TEST(MonteCarloTest, InverseShare) {
  const double exact = ExpectedInverseShare(0.3, 6);
  const double estimate = MonteCarloInverseShare(0.3, 6, 200000, 3);
  // Variance of 1/(N+1) is below 1/4.
  EXPECT_NEAR(estimate, exact, 3 * 0.5 / std::sqrt(200000.0));
  EXPECT_NEAR(MonteCarloInverseShare(1, 4, 100, 3), 0.2, 1e-15);
}

TEST(GeneratorTest, RandomLayeredDagRespectsOptions) {
  std::mt19937_64 rng(17);
  const std::set<Rational> grid = {0, Rational(1, 2), 1, 2, 5, 8};
  for (int i = 0; i < 300; ++i) {
    const TaskGraph g = RandomLayeredDag(rng);
    EXPECT_LE(g.num_vertices(), 8);
    EXPECT_GE(g.num_vertices(), 3);
    for (int v = 0; v < g.num_vertices(); ++v) {
      for (const Edge& e : g.out_edges(v)) EXPECT_TRUE(grid.count(e.cost)) << e.cost;
    }
  }
}

TEST(GeneratorTest, RandomDominantPathDagHasOne) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(BruteDominantPath(RandomDominantPathDag(rng)));
  }
}

TEST(GeneratorTest, RandomLadderGraphIsALadder) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const TaskGraph g = RandomLadderGraph(rng, 6);
    const std::vector<PathRecord> paths = EnumeratePaths(g, g.source(), 64);
    EXPECT_EQ(paths.size(), g.out_edges(g.source()).size());
    EXPECT_LE(paths.size(), 6u);
    // With a huge reward nothing is dominated by a slower path.
    EXPECT_EQ(ComputeNondominatedLadder(g, 1000).paths.size(), paths.size());
  }
}

}  // namespace
}  // namespace biasgraph
