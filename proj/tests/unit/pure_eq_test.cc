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

#include "biasgraph/pure_eq.h"

#include <algorithm>
#include <random>

#include "biasgraph/error.h"
#include "biasgraph/generators.h"
#include "biasgraph/oracle.h"
#include "gtest/gtest.h"

namespace biasgraph {
namespace {

// Parallel chains from s to t; chain i has lengths[i] edges and its whole
// cost on the first edge.
TaskGraph Chains(const std::vector<int>& lengths, const std::vector<Rational>& costs) {
  RawGraph raw;
  raw.source = "s";
  raw.sink = "t";
  raw.vertices.push_back("s");
  for (size_t i = 0; i < lengths.size(); ++i) {
    std::string prev = "s";
    for (int k = 1; k < lengths[i]; ++k) {
      const std::string name = "c" + std::to_string(i) + "_" + std::to_string(k);
      raw.vertices.push_back(name);
      raw.edges.push_back({prev, name, k == 1 ? costs[i] : Rational(0)});
      prev = name;
    }
    raw.edges.push_back({prev, "t", lengths[i] == 1 ? costs[i] : Rational(0)});
  }
  raw.vertices.push_back("t");
  return Validate(raw).graph;
}

std::vector<Rational> LadderCosts(const NondominatedLadder& ladder) {
  std::vector<Rational> out;
  for (const PathRecord& p : ladder.paths) out.push_back(p.cost);
  return out;
}

TEST(LadderTest, DominanceFiltering) {
  const TaskGraph g = Chains({1, 2, 3}, {7, 6, 0});
  EXPECT_EQ(LadderCosts(ComputeNondominatedLadder(g, 8)),
            (std::vector<Rational>{7, 6, 0}));
  // 7 >= 0 + 5 and 6 >= 0 + 5: only the slow free path is left.
  EXPECT_EQ(LadderCosts(ComputeNondominatedLadder(g, 5)), (std::vector<Rational>{0}));
  EXPECT_EQ(LadderCosts(ComputeNondominatedLadder(g, 1)), (std::vector<Rational>{0}));
}

TEST(LadderTest, WeaklyShorterAndCheaperDominates) {
  const TaskGraph g = Chains({1, 2, 3}, {3, 3, 1});
  // The length-2 path is no cheaper than the length-1 path.
  EXPECT_EQ(LadderCosts(ComputeNondominatedLadder(g, 10)),
            (std::vector<Rational>{3, 1}));
}

TEST(LadderTest, ZeroRewardKeepsTheQuickestCheapestPath) {
  const TaskGraph g = Chains({1, 2}, {2, 2});
  const NondominatedLadder ladder = ComputeNondominatedLadder(g, 0);
  ASSERT_EQ(ladder.paths.size(), 1u);
  EXPECT_EQ(ladder.paths[0].length(), 1);
}

TEST(LadderTest, SinglePathGraph) {
  const TaskGraph g = Chains({2}, {4});
  const UnbiasedEqReport report = ClassifyUnbiased(g, 3);
  EXPECT_EQ(report.ladder.paths.size(), 1u);
  EXPECT_EQ(report.symmetric, (std::vector<int>{0}));
  EXPECT_FALSE(report.asymmetric);
}

TEST(ClassifyTest, SplitRule) {
  const TaskGraph g = Chains({1, 2, 3}, {7, 6, 0});
  // Gaps 1 and 6 against r/2 = 4: only the last rung holds.
  const UnbiasedEqReport report = ClassifyUnbiased(g, 8);
  EXPECT_EQ(report.symmetric, (std::vector<int>{2}));
  EXPECT_FALSE(report.asymmetric);
  EXPECT_EQ(ClassifyUnbiased(g, 1).symmetric, (std::vector<int>{0}));
}

TEST(ClassifyTest, SplitRuleEdgeCases) {
  // r = 8: P1 holds since 10 - 6 <= 4; P2 and P3 have a gap below 4 above.
  EXPECT_EQ(ClassifyUnbiased(Chains({1, 2, 3}, {10, 9, 6}), 8).symmetric,
            (std::vector<int>{0}));
  // r = 9: 10 - 5 > 9/2 and 9 - 5 < 9/2, so nothing holds.
  EXPECT_TRUE(ClassifyUnbiased(Chains({1, 2, 3}, {10, 9, 5}), 9).symmetric.empty());

  const TaskGraph k = Chains({1, 2}, {4, 1});
  const UnbiasedEqReport off_edge = ClassifyUnbiased(k, 7);
  EXPECT_EQ(off_edge.symmetric, (std::vector<int>{0}));
  EXPECT_FALSE(off_edge.asymmetric);
  // Knife edge 4 - 1 == 6/2: every profile is an equilibrium.
  const UnbiasedEqReport edge = ClassifyUnbiased(k, 6);
  EXPECT_EQ(edge.symmetric, (std::vector<int>{0, 1}));
  EXPECT_EQ(edge.asymmetric, std::make_pair(0, 1));
  EXPECT_EQ(BruteLadderTable(k, 6, TieRule::kSplit).equilibria.size(), 4u);
}

TEST(ClassifyTest, AlternativeTieRules) {
  const TaskGraph g = Chains({1, 2, 3}, {7, 6, 0});
  EXPECT_EQ(ClassifyUnbiased(g, 8, TieRule::kBothFull).symmetric,
            (std::vector<int>{0, 1, 2}));
  const UnbiasedEqReport none = ClassifyUnbiased(g, 8, TieRule::kNone);
  EXPECT_TRUE(none.symmetric.empty());
  EXPECT_FALSE(none.asymmetric);
  const UnbiasedEqReport two = ClassifyUnbiased(Chains({1, 2}, {4, 1}), 7, TieRule::kNone);
  EXPECT_TRUE(two.symmetric.empty());
  EXPECT_EQ(two.asymmetric, std::make_pair(0, 1));
}

TEST(ClassifyTest, AgreesWithBestResponseTable) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const TaskGraph g = RandomLadderGraph(rng, 6);
    const Rational r(static_cast<int>(rng() % 30), 2);
    for (TieRule rule : {TieRule::kSplit, TieRule::kBothFull, TieRule::kNone}) {
      const UnbiasedEqReport report = ClassifyUnbiased(g, r, rule);
      const LadderTable table = BruteLadderTable(g, r, rule);
      ASSERT_EQ(report.ladder.paths, table.paths);
      ASSERT_EQ(report.symmetric, table.Symmetric());
      if (report.ladder.paths.size() <= 2) {
        std::vector<std::pair<int, int>> expected;
        if (report.asymmetric) expected.push_back(*report.asymmetric);
        ASSERT_EQ(expected, table.Asymmetric());
      }
      if (rule == TieRule::kSplit) EXPECT_LE(report.symmetric.size(), 2u);
    }
  }
}

TEST(CheckSymmetricNeTest, FanExamples) {
  const TaskGraph fan = MakeFan({5, Rational(3, 2)});
  EXPECT_TRUE(CheckSymmetricNe(fan, FanPath(fan, 0), 1, 2).is_equilibrium);
  EXPECT_TRUE(CheckSymmetricNe(fan, FanPath(fan, 5), 1, 2).is_equilibrium);
  for (const Rational r : {Rational(0), Rational(1), Rational(10), Rational(1000)}) {
    const NeCheckResult result = CheckSymmetricNe(fan, FanPath(fan, 2), r, 2);
    EXPECT_FALSE(result.is_equilibrium);
    ASSERT_TRUE(result.deviation);
    EXPECT_NE(result.deviation->trace.path, FanPath(fan, 2));
  }
  EXPECT_FALSE(CheckSymmetricNe(fan, FanPath(fan, 0), Rational(99, 100), 2).is_equilibrium);
  EXPECT_FALSE(CheckSymmetricNe(fan, FanPath(fan, 0), 1, 2).deviation);
}

TEST(CheckSymmetricNeTest, DeviationVertexIsTheLastSharedVertex) {
  const TaskGraph fan = MakeFan({3, 2});
  // b = 3, opponent on P1, r = 0: the agent procrastinates past v1.
  const NeCheckResult result = CheckSymmetricNe(fan, FanPath(fan, 1), 0, 3);
  ASSERT_TRUE(result.deviation);
  EXPECT_EQ(fan.name(result.deviation->vertex), "v1");
}

TEST(FanThresholdsTest, Examples) {
  FanThresholds t = FanNeThresholds({5, Rational(3, 2)}, 2);
  EXPECT_EQ(t.optimal_min_reward, 1);
  EXPECT_EQ(t.longest_max_reward, Rational(81, 16));
  t = FanNeThresholds({5, 2}, 2);
  EXPECT_EQ(t.optimal_min_reward, 0);
  EXPECT_EQ(t.longest_max_reward, 0);
  t = FanNeThresholds({1, 2}, 3);
  EXPECT_EQ(t.optimal_min_reward, 2);
  EXPECT_EQ(t.longest_max_reward, 2);
  try {
    FanNeThresholds({3, 2}, Rational(3, 2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBiasNotAboveC);
  }
}

TEST(DominantPathTest, FanDirectEdge) {
  const TaskGraph fan = MakeFan({4, 2});
  const DominantPathReward result = ComputeDominantPathReward(fan, 3);
  EXPECT_EQ(result.path, FanPath(fan, 0));
  EXPECT_EQ(result.reward, 6);
  EXPECT_EQ(ComputeDominantPathReward(fan, 3, 5).reward, 15);
}

TEST(DominantPathTest, TiedQuickestPathsHaveNoDominantPath) {
  const TaskGraph g = Chains({2, 2}, {1, 1});
  EXPECT_FALSE(FindDominantPath(g));
  try {
    ComputeDominantPathReward(g, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoDominantPath);
  }
}

TEST(DominantPathTest, QuickestButNotCheapest) {
  EXPECT_FALSE(FindDominantPath(Chains({1, 2}, {3, 1})));
  // Cheapest ties are fine as long as the quickest one is unique.
  EXPECT_TRUE(FindDominantPath(Chains({1, 2}, {1, 1})));
}

// Spine s = u0 -> u1 -> ... -> un = t of unit edges. From every spine vertex
// but the last a free edge enters a private detour of n + 1 edges whose cost
// is one more than the rest of the spine. Without competition a biased agent
// takes the first detour; per-edge subsidies would need b - 2 on every spine
// edge.
TaskGraph SpineWithDetours(int n) {
  RawGraph raw;
  raw.source = "u0";
  raw.sink = "u" + std::to_string(n);
  for (int i = 0; i <= n; ++i) raw.vertices.push_back("u" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    const std::string ui = "u" + std::to_string(i);
    raw.edges.push_back({ui, "u" + std::to_string(i + 1), 1});
    if (i == n - 1) continue;
    std::string prev = ui;
    for (int k = 1; k <= n; ++k) {
      const std::string w = "d" + std::to_string(i) + "_" + std::to_string(k);
      raw.vertices.push_back(w);
      raw.edges.push_back({prev, w, 0});
      prev = w;
    }
    raw.edges.push_back({prev, raw.sink, n - i + 1});
  }
  return Validate(raw).graph;
}

TEST(DominantPathTest, SpineNeedsOnlyAConstantReward) {
  const TaskGraph g = SpineWithDetours(5);
  for (const Rational b : {Rational(3), Rational(5, 2), Rational(7)}) {
    EXPECT_NE(Traverse(g, {b, TieRule::kSplit}, nullptr, 0).path.length(), 5);
    const DominantPathReward dom = ComputeDominantPathReward(g, b);
    EXPECT_EQ(dom.path.length(), 5);
    EXPECT_EQ(dom.reward, 2 * b);
    EXPECT_TRUE(CheckSymmetricNe(g, dom.path, dom.reward, b).is_equilibrium);
    const MinRewardResult exact = MinRewardForNe(g, dom.path, b);
    EXPECT_EQ(exact.minimum, Rational(2 * (b - 2)));
    EXPECT_EQ(exact.feasible, IntervalSet::FromIntervals({{2 * (b - 2), std::nullopt}}));
  }
}

TEST(MinRewardTest, FanExamples) {
  const TaskGraph fan = MakeFan({5, Rational(3, 2)});
  const MinRewardResult p0 = MinRewardForNe(fan, FanPath(fan, 0), 2);
  EXPECT_EQ(p0.minimum, Rational(1));
  EXPECT_EQ(p0.feasible, IntervalSet::FromIntervals({{1, std::nullopt}}));
  const MinRewardResult p2 = MinRewardForNe(fan, FanPath(fan, 2), 2);
  EXPECT_TRUE(p2.feasible.empty());
  EXPECT_FALSE(p2.minimum);
}

TEST(MinRewardTest, NonMonotoneInstances) {
  const NamedInstance a = MakeNamedInstance("fig7a");
  const MinRewardResult ra = MinRewardForNe(a.graph, a.paths.at("Q"), 10);
  EXPECT_TRUE(ra.feasible.Contains(1));
  EXPECT_FALSE(ra.feasible.Contains(300));
  const TraversalTrace big =
      Traverse(a.graph, {10, TieRule::kSplit}, &a.paths.at("Q"), 300);
  EXPECT_NE(big.path, a.paths.at("Q"));

  const NamedInstance b = MakeNamedInstance("fig7b");
  const PathRecord& q = b.paths.at("Q");
  EXPECT_EQ(Traverse(b.graph, {10, TieRule::kSplit}, &q, 10).path, q);
  const PathRecord deviated = Traverse(b.graph, {10, TieRule::kSplit}, &q, 2).path;
  EXPECT_EQ(deviated, b.paths.at("X"));
  const MinRewardResult rb = MinRewardForNe(b.graph, q, 10);
  EXPECT_TRUE(rb.feasible.Contains(10));
  EXPECT_FALSE(rb.feasible.Contains(2));
}

TEST(MinRewardTest, SingleEdgePath) {
  const TaskGraph g = Chains({1, 3}, {2, 0});
  const PathRecord direct = ParsePath(g, "s,t");
  // Stay iff 2b - r/2 <= 0 with b = 1: r >= 4.
  EXPECT_EQ(MinRewardForNe(g, direct, 1).feasible,
            IntervalSet::FromIntervals({{4, std::nullopt}}));
}

TEST(MinRewardTest, RejectsBadArguments) {
  const TaskGraph fan = MakeFan({2, 2});
  EXPECT_THROW(MinRewardForNe(fan, MakePath(fan, {1, 3}), 2), Error);
  EXPECT_THROW(MinRewardForNe(fan, FanPath(fan, 0), Rational(1, 2)), Error);
}

TEST(MinRewardTest, AgreesWithRewardSweepOnRandomGraphs) {
  std::mt19937_64 rng(33);
  const Rational biases[] = {Rational(3, 2), Rational(2), Rational(5), Rational(10)};
  for (int trial = 0; trial < 40; ++trial) {
    const TaskGraph g = RandomLayeredDag(rng);
    for (const PathRecord& q : EnumeratePaths(g)) {
      for (const Rational& b : biases) {
        const MinRewardResult result = MinRewardForNe(g, q, b);
        std::vector<Rational> probes(result.breakpoints.begin(), result.breakpoints.end());
        for (int i = 0; i < 10; ++i) probes.push_back(Rational(static_cast<int>(rng() % 200), 8));
        const std::vector<Rational> accepted = RewardSweepNe(g, q, b, probes);
        for (const Rational& r : probes) {
          const bool oracle = std::find(accepted.begin(), accepted.end(), r) != accepted.end();
          ASSERT_EQ(result.feasible.Contains(r), oracle)
              << "r=" << r << " feasible=" << result.feasible.DebugString();
        }
      }
    }
  }
}

}  // namespace
}  // namespace biasgraph
