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
#include <set>
#include <utility>

#include "biasgraph/error.h"
#include "biasgraph/hop_costs.h"

namespace biasgraph {
namespace {

// A path P dominates P' when losing on P is no worse than winning on P', or
// when P is no longer and no more expensive.
bool Dominates(const PathRecord& p, const PathRecord& q, const Rational& r) {
  return q.cost >= p.cost + r || (p.length() <= q.length() && p.cost <= q.cost);
}

// r * line.slope + line.intercept; slopes are 0, -1/2 or -1.
struct Line {
  Rational intercept;
  Rational slope;

  Rational At(const Rational& r) const { return intercept + slope * r; }
};

std::vector<Line> ContinuationLines(const HopCosts& costs) {
  std::vector<Line> lines = {{costs.any, Rational(0)}};
  if (costs.at_most) lines.push_back({*costs.at_most, Rational(-1, 2)});
  if (costs.fewer) lines.push_back({*costs.fewer, Rational(-1)});
  return lines;
}

const Line& Lowest(const std::vector<Line>& lines, const Rational& r) {
  const Line* best = &lines.front();
  for (const Line& line : lines) {
    if (line.At(r) < best->At(r)) best = &line;
  }
  return *best;
}

void AddCrossings(const std::vector<Line>& lines, std::set<Rational>& points) {
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      Rational r = (lines[j].intercept - lines[i].intercept) /
                   (lines[i].slope - lines[j].slope);
      if (r > 0) points.insert(r);
    }
  }
}

// Rewards r >= 0 with offset + d*(r) - c*(r) >= 0, where c* and d* are the
// lower envelopes of `stay` and `leave`. Both envelopes are linear between
// consecutive crossing points, so the condition is linear on every piece.
IntervalSet SolveStayCondition(const std::vector<Line>& stay,
                               const std::vector<Line>& leave,
                               const Rational& offset,
                               std::set<Rational>& breakpoints) {
  std::set<Rational> cuts = {Rational(0)};
  AddCrossings(stay, cuts);
  AddCrossings(leave, cuts);
  breakpoints.insert(cuts.begin(), cuts.end());

  const std::vector<Rational> points(cuts.begin(), cuts.end());
  std::vector<Interval> pieces;
  for (size_t i = 0; i < points.size(); ++i) {
    const Rational& lo = points[i];
    std::optional<Rational> hi;
    if (i + 1 < points.size()) hi = points[i + 1];
    const Rational probe = hi ? Rational((lo + *hi) / 2) : Rational(lo + 1);
    const Line& c = Lowest(stay, probe);
    const Line& d = Lowest(leave, probe);
    // f(r) = alpha + beta * r on this piece.
    const Rational alpha = offset + d.intercept - c.intercept;
    const Rational beta = d.slope - c.slope;
    Interval piece{lo, hi};
    if (beta == 0) {
      if (alpha >= 0) pieces.push_back(piece);
      continue;
    }
    const Rational root = -alpha / beta;
    if (beta > 0) {
      piece.lo = std::max(piece.lo, root);
    } else if (!piece.hi || root < *piece.hi) {
      piece.hi = root;
    }
    pieces.push_back(std::move(piece));
  }
  return IntervalSet::FromIntervals(std::move(pieces));
}

}  // namespace

NondominatedLadder ComputeNondominatedLadder(const TaskGraph& graph,
                                             const Rational& reward) {
  if (reward < 0) {
    throw Error(ErrorCode::kInvalidParameters, "reward must be nonnegative");
  }
  std::vector<PathRecord> candidates;
  for (auto& [length, path] : CheapestPerLength(graph)) {
    candidates.push_back(std::move(path));
  }
  NondominatedLadder ladder{{}, reward};
  for (size_t j = 0; j < candidates.size(); ++j) {
    bool dominated = false;
    for (size_t i = 0; i < candidates.size() && !dominated; ++i) {
      if (i == j || !Dominates(candidates[i], candidates[j], reward)) continue;
      // Mutual dominance (r = 0, equal costs): the shorter path is kept.
      const bool mutual = Dominates(candidates[j], candidates[i], reward);
      dominated = !(mutual && candidates[j].length() < candidates[i].length());
    }
    if (!dominated) ladder.paths.push_back(candidates[j]);
  }
  return ladder;
}

UnbiasedEqReport ClassifyLadder(NondominatedLadder ladder, TieRule rule) {
  UnbiasedEqReport report;
  report.tie_rule = rule;
  const auto& paths = ladder.paths;
  const int n = static_cast<int>(paths.size());
  const Rational half = ladder.reward / 2;
  switch (rule) {
    case TieRule::kSplit:
      for (int i = 0; i < n; ++i) {
        const bool equilibrium =
            i == 0 ? paths[0].cost - paths[n - 1].cost <= half
                   : paths[i - 1].cost - paths[i].cost >= half;
        if (equilibrium) report.symmetric.push_back(i);
      }
      if (n == 2 && paths[0].cost - paths[1].cost == half) {
        report.asymmetric = std::make_pair(0, 1);
      }
      break;
    case TieRule::kBothFull:
      for (int i = 0; i < n; ++i) report.symmetric.push_back(i);
      break;
    case TieRule::kNone:
      if (n == 1) report.symmetric.push_back(0);
      if (n == 2) report.asymmetric = std::make_pair(0, 1);
      break;
  }
  report.ladder = std::move(ladder);
  return report;
}

UnbiasedEqReport ClassifyUnbiased(const TaskGraph& graph, const Rational& reward,
                                  TieRule rule) {
  return ClassifyLadder(ComputeNondominatedLadder(graph, reward), rule);
}

NeCheckResult CheckSymmetricNe(const NaiveAgent& agent, const PathRecord& path,
                               const Rational& reward) {
  const TaskGraph& graph = agent.graph();
  if (path.front() != graph.source() || path.back() != graph.sink()) {
    throw Error(ErrorCode::kInvalidPath, "path must run from source to sink");
  }
  TraversalTrace trace =
      agent.Traverse(Competition{path.length(), reward}, &path);
  if (trace.path.vertices == path.vertices) return {true, std::nullopt};
  size_t shared = 0;
  while (shared < path.vertices.size() && shared < trace.path.vertices.size() &&
         trace.path.vertices[shared] == path.vertices[shared]) {
    ++shared;
  }
  return {false, Deviation{path.vertices[shared - 1], std::move(trace)}};
}

NeCheckResult CheckSymmetricNe(const TaskGraph& graph, const PathRecord& path,
                               const Rational& reward, const Rational& bias) {
  NaiveAgent agent(graph, AgentConfig{bias, TieRule::kSplit});
  return CheckSymmetricNe(agent, path, reward);
}

FanThresholds FanNeThresholds(const FanSpec& spec, const Rational& bias) {
  CheckFanSpec(spec);
  if (bias < spec.c) {
    throw Error(ErrorCode::kBiasNotAboveC,
                "bias below c: the agent takes P0 without any reward");
  }
  const Rational eps = bias - spec.c;
  Rational scale = 1;
  for (int i = 1; i < spec.n; ++i) scale *= spec.c;
  return {2 * eps, 2 * eps * scale};
}

std::optional<PathRecord> FindDominantPath(const TaskGraph& graph) {
  const std::vector<long long> counts = CountPathsByLength(graph, 2);
  int quickest = 1;
  while (counts[quickest] == 0) ++quickest;
  if (counts[quickest] != 1) return std::nullopt;
  PathRecord path = CheapestPerLength(graph).at(quickest);
  if (path.cost != HopCostTable(graph).Any(graph.source())) return std::nullopt;
  return path;
}

DominantPathReward ComputeDominantPathReward(const TaskGraph& graph,
                                             const Rational& bias,
                                             int num_agents) {
  if (bias < 1 || num_agents < 2) {
    throw Error(ErrorCode::kInvalidParameters,
                "need bias >= 1 and at least two agents");
  }
  std::optional<PathRecord> dominant = FindDominantPath(graph);
  if (!dominant) {
    throw Error(ErrorCode::kNoDominantPath,
                "no cheapest path is also the unique quickest path");
  }
  Rational max_edge = 0;
  for (size_t i = 1; i < dominant->vertices.size(); ++i) {
    max_edge = std::max(
        max_edge, *graph.EdgeCost(dominant->vertices[i - 1], dominant->vertices[i]));
  }
  return {std::move(*dominant), num_agents * bias * max_edge};
}

MinRewardResult MinRewardForNe(const TaskGraph& graph, const PathRecord& path,
                               const Rational& bias) {
  if (path.front() != graph.source() || path.back() != graph.sink()) {
    throw Error(ErrorCode::kInvalidPath, "path must run from source to sink");
  }
  if (bias < 1) {
    throw Error(ErrorCode::kInvalidParameters, "bias must be at least 1");
  }
  const HopCostTable hops(graph);
  std::set<Rational> breakpoints;
  IntervalSet feasible = IntervalSet::NonNegative();
  const int length = path.length();
  for (int i = 0; i < length; ++i) {
    const int u = path.vertices[i];
    const int v = path.vertices[i + 1];
    // Edges of `path` still ahead once (u, v) is taken.
    const int budget = length - i - 1;
    const std::vector<Line> stay = ContinuationLines(hops.At(v, budget));
    const Rational stay_edge = *graph.EdgeCost(u, v);
    IntervalSet keeps_edge = IntervalSet::NonNegative();
    for (const Edge& alt : graph.out_edges(u)) {
      if (alt.to == v) continue;
      const std::vector<Line> leave = ContinuationLines(hops.At(alt.to, budget));
      keeps_edge = keeps_edge.Intersect(SolveStayCondition(
          stay, leave, bias * (alt.cost - stay_edge), breakpoints));
    }
    feasible = feasible.Intersect(keeps_edge);
  }
  for (const Interval& piece : feasible.intervals()) {
    breakpoints.insert(piece.lo);
    if (piece.hi) breakpoints.insert(*piece.hi);
  }
  MinRewardResult result;
  result.minimum = feasible.Min();
  result.feasible = std::move(feasible);
  result.breakpoints.assign(breakpoints.begin(), breakpoints.end());
  return result;
}

}  // namespace biasgraph
