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

#include "biasgraph/agent.h"

#include <algorithm>
#include <utility>

#include "biasgraph/error.h"

namespace biasgraph {
namespace {

bool OnReference(const TraversalState& state, const PathRecord& reference) {
  const auto& walked = state.prefix.vertices;
  return walked.size() < reference.vertices.size() &&
         std::equal(walked.begin(), walked.end(), reference.vertices.begin());
}

Rational TieReward(const Rational& reward, TieRule rule) {
  switch (rule) {
    case TieRule::kSplit:
      return reward / 2;
    case TieRule::kBothFull:
      return reward;
    case TieRule::kNone:
      return 0;
  }
  return 0;
}

}  // namespace

Rational RewardFor(int length, const Competition& competition, TieRule rule) {
  if (length < competition.opponent_length) return competition.reward;
  if (length == competition.opponent_length) {
    return TieReward(competition.reward, rule);
  }
  return 0;
}

TraversalState TraversalState::AtSource(const TaskGraph& graph) {
  return TraversalState{PathRecord{{graph.source()}, Rational(0)}};
}

std::optional<Alternative> StepRecord::RunnerUp() const {
  std::optional<Alternative> best;
  for (const Alternative& alt : alternatives) {
    if (!best || alt.perceived < best->perceived) best = alt;
  }
  return best;
}

NaiveAgent::NaiveAgent(const TaskGraph& graph, AgentConfig config)
    : graph_(&graph), config_(std::move(config)), hops_(graph) {
  if (config_.bias < 1) {
    throw Error(ErrorCode::kInvalidParameters, "bias must be at least 1");
  }
}

Rational NaiveAgent::PerceivedCost(
    const TraversalState& state, int next,
    const std::optional<Competition>& competition) const {
  auto edge = graph_->EdgeCost(state.vertex(), next);
  if (!edge) {
    throw Error(ErrorCode::kInvalidPath,
                "no edge " + graph_->name(state.vertex()) + "->" +
                    graph_->name(next));
  }
  Rational continuation = hops_.Any(next);
  if (competition) {
    const int budget = competition->opponent_length - state.steps_taken() - 1;
    const HopCosts costs = hops_.At(next, budget);
    if (costs.at_most) {
      continuation = std::min(
          continuation,
          Rational(*costs.at_most - TieReward(competition->reward, config_.tie_rule)));
    }
    if (costs.fewer) {
      continuation =
          std::min(continuation, Rational(*costs.fewer - competition->reward));
    }
  }
  return config_.bias * *edge + continuation;
}

StepRecord NaiveAgent::Step(const TraversalState& state,
                            const std::optional<Competition>& competition,
                            const PathRecord* reference) const {
  const int u = state.vertex();
  if (u == graph_->sink()) {
    throw Error(ErrorCode::kInvalidParameters, "already at the sink");
  }
  std::optional<int> preferred;
  if (reference && OnReference(state, *reference)) {
    preferred = reference->vertices[state.prefix.vertices.size()];
  }

  std::vector<Alternative> scored;
  for (const Edge& e : graph_->out_edges(u)) {
    scored.push_back({e.to, PerceivedCost(state, e.to, competition)});
  }
  // Out-edges are sorted by head, so the first minimum is the smallest index.
  size_t best = 0;
  for (size_t i = 1; i < scored.size(); ++i) {
    if (scored[i].perceived < scored[best].perceived) best = i;
  }
  if (preferred) {
    for (size_t i = 0; i < scored.size(); ++i) {
      if (scored[i].vertex == *preferred &&
          scored[i].perceived == scored[best].perceived) {
        best = i;
      }
    }
  }

  StepRecord record{u, scored[best].vertex, scored[best].perceived, {}};
  for (size_t i = 0; i < scored.size(); ++i) {
    if (i != best) record.alternatives.push_back(scored[i]);
  }
  return record;
}

TraversalTrace NaiveAgent::Traverse(
    const std::optional<Competition>& competition,
    const PathRecord* reference) const {
  TraversalState state = TraversalState::AtSource(*graph_);
  TraversalTrace trace;
  while (state.vertex() != graph_->sink()) {
    StepRecord step = Step(state, competition, reference);
    state.prefix.cost += *graph_->EdgeCost(step.at, step.chose);
    state.prefix.vertices.push_back(step.chose);
    trace.steps.push_back(std::move(step));
  }
  trace.path = std::move(state.prefix);
  return trace;
}

TraversalTrace Traverse(const TaskGraph& graph, const AgentConfig& config,
                        const PathRecord* opponent, const Rational& reward) {
  NaiveAgent agent(graph, config);
  std::optional<Competition> competition;
  if (opponent) competition = Competition{opponent->length(), reward};
  return agent.Traverse(competition);
}

Rational CostRatio(const TaskGraph& graph, const AgentConfig& config) {
  NaiveAgent agent(graph, config);
  const Rational& optimal = agent.hop_costs().Any(graph.source());
  if (optimal == 0) {
    throw Error(ErrorCode::kZeroOptimalCost,
                "cheapest path has cost 0; ratio undefined");
  }
  return agent.Traverse(std::nullopt).path.cost / optimal;
}

}  // namespace biasgraph
