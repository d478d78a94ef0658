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

#ifndef BIASGRAPH_PURE_EQ_H_
#define BIASGRAPH_PURE_EQ_H_

#include <optional>
#include <utility>
#include <vector>

#include "biasgraph/agent.h"
#include "biasgraph/generators.h"
#include "biasgraph/interval_set.h"
#include "biasgraph/rational.h"
#include "biasgraph/task_graph.h"

namespace biasgraph {

// Paths that survive dominance for two unbiased competitors at reward r,
// ordered quickest first. Lengths strictly increase and costs strictly
// decrease along the ladder.
struct NondominatedLadder {
  std::vector<PathRecord> paths;
  Rational reward;
};

NondominatedLadder ComputeNondominatedLadder(const TaskGraph& graph,
                                             const Rational& reward);

struct UnbiasedEqReport {
  NondominatedLadder ladder;
  // Indices into ladder.paths of symmetric pure equilibria.
  std::vector<int> symmetric;
  // (quickest, cheapest) pair when a two-path ladder has an asymmetric
  // equilibrium.
  std::optional<std::pair<int, int>> asymmetric;
  TieRule tie_rule = TieRule::kSplit;
};

// Closed-form classification of pure equilibria over a ladder.
UnbiasedEqReport ClassifyLadder(NondominatedLadder ladder, TieRule rule);

UnbiasedEqReport ClassifyUnbiased(const TaskGraph& graph, const Rational& reward,
                                  TieRule rule = TieRule::kSplit);

struct Deviation {
  // Last vertex the agent shared with the reference path.
  int vertex;
  TraversalTrace trace;
};

struct NeCheckResult {
  bool is_equilibrium = false;
  std::optional<Deviation> deviation;
};

// Both agents committed to `path` is an equilibrium iff a biased agent facing
// an opponent on `path` walks exactly `path` (staying wins ties).
NeCheckResult CheckSymmetricNe(const NaiveAgent& agent, const PathRecord& path,
                               const Rational& reward);
NeCheckResult CheckSymmetricNe(const TaskGraph& graph, const PathRecord& path,
                               const Rational& reward, const Rational& bias);

struct FanThresholds {
  // Smallest reward with an equilibrium on the direct path P0.
  Rational optimal_min_reward;
  // Largest reward with an equilibrium on the full-procrastination path Pn.
  Rational longest_max_reward;
};

// 2(b - c) and 2(b - c) c^(n-1). Returns zeros when b == c and throws
// kBiasNotAboveC when b < c.
FanThresholds FanNeThresholds(const FanSpec& spec, const Rational& bias);

// Cheapest path that is also the unique quickest one, if the graph has it.
std::optional<PathRecord> FindDominantPath(const TaskGraph& graph);

struct DominantPathReward {
  PathRecord path;
  Rational reward;
};

// Reward num_agents * b * max edge cost on the dominant path; with two agents
// this is 2b * max. Throws kNoDominantPath.
DominantPathReward ComputeDominantPathReward(const TaskGraph& graph,
                                             const Rational& bias,
                                             int num_agents = 2);

struct MinRewardResult {
  // Every reward r >= 0 for which `path` is a symmetric equilibrium.
  IntervalSet feasible;
  // Smallest feasible reward; nullopt when the set is empty.
  std::optional<Rational> minimum;
  // Sorted endpoints of every linear piece examined, plus the feasible set's
  // own endpoints. Useful as probe points for independent checks.
  std::vector<Rational> breakpoints;
};

// Exact feasible-reward computation: walks `path` with the remaining hop
// budget, and for every alternative edge solves the piecewise-linear stay
// condition d*(r) - c*(r) >= b (c(u,v) - c(u,v')) on each linear piece.
MinRewardResult MinRewardForNe(const TaskGraph& graph, const PathRecord& path,
                               const Rational& bias);

}  // namespace biasgraph

#endif  // BIASGRAPH_PURE_EQ_H_
