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

#ifndef BIASGRAPH_AGENT_H_
#define BIASGRAPH_AGENT_H_

#include <optional>
#include <vector>

#include "biasgraph/hop_costs.h"
#include "biasgraph/rational.h"
#include "biasgraph/task_graph.h"

namespace biasgraph {

// How the reward is shared when both agents reach the sink at the same time.
enum class TieRule {
  kSplit,     // r/2 each
  kBothFull,  // r each
  kNone,      // nothing
};

struct AgentConfig {
  Rational bias = 1;
  TieRule tie_rule = TieRule::kSplit;
};

// The opponent is committed to a path; only its length matters.
struct Competition {
  int opponent_length = 0;
  Rational reward = 0;
};

// Reward for finishing after `length` edges against `competition`.
Rational RewardFor(int length, const Competition& competition, TieRule rule);

struct TraversalState {
  PathRecord prefix;

  int vertex() const { return prefix.back(); }
  int steps_taken() const { return prefix.length(); }

  static TraversalState AtSource(const TaskGraph& graph);
};

struct Alternative {
  int vertex;
  Rational perceived;
};

struct StepRecord {
  int at;
  int chose;
  Rational perceived;
  // Every other successor with its perceived cost, in vertex order.
  std::vector<Alternative> alternatives;

  // Cheapest rejected successor, if any.
  std::optional<Alternative> RunnerUp() const;
};

struct TraversalTrace {
  PathRecord path;
  std::vector<StepRecord> steps;
};

// A naive present-biased agent: at every vertex it weighs the next edge by
// its bias, assumes it will continue optimally afterwards, and replans after
// each step. Holds a reference to `graph`, which must outlive the agent.
class NaiveAgent {
 public:
  NaiveAgent(const TaskGraph& graph, AgentConfig config);

  const TaskGraph& graph() const { return *graph_; }
  const AgentConfig& config() const { return config_; }
  const HopCostTable& hop_costs() const { return hops_; }

  // b * c(u, next) plus the cheapest reward-adjusted continuation from next.
  // With competition this is min(c_any, c_at_most(k') - tie reward,
  // c_fewer(k') - r) where k' is the opponent's length minus the edges walked
  // so far including (u, next); absent cases are dropped.
  Rational PerceivedCost(const TraversalState& state, int next,
                         const std::optional<Competition>& competition) const;

  // Successor minimizing the perceived cost. When `reference` is given and
  // the agent is still on it, the reference successor wins ties; otherwise
  // the smallest vertex index does.
  StepRecord Step(const TraversalState& state,
                  const std::optional<Competition>& competition,
                  const PathRecord* reference = nullptr) const;

  TraversalTrace Traverse(const std::optional<Competition>& competition,
                          const PathRecord* reference = nullptr) const;

 private:
  const TaskGraph* graph_;
  AgentConfig config_;
  HopCostTable hops_;
};

// Convenience wrapper: opponent == nullptr means no competition.
TraversalTrace Traverse(const TaskGraph& graph, const AgentConfig& config,
                        const PathRecord* opponent, const Rational& reward);

// Biased traversal cost divided by the cheapest-path cost. Throws
// kZeroOptimalCost when the cheapest path is free.
Rational CostRatio(const TaskGraph& graph, const AgentConfig& config);

}  // namespace biasgraph

#endif  // BIASGRAPH_AGENT_H_
