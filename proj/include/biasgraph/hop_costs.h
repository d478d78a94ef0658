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

#ifndef BIASGRAPH_HOP_COSTS_H_
#define BIASGRAPH_HOP_COSTS_H_

#include <map>
#include <optional>
#include <vector>

#include "biasgraph/rational.h"
#include "biasgraph/task_graph.h"

namespace biasgraph {

// Cheapest continuation costs from one vertex to the sink, split by hop
// budget k: any length, at most k edges, fewer than k edges. Absent entries
// mean no such path exists. Whenever present, any <= at_most <= fewer.
struct HopCosts {
  Rational any;
  std::optional<Rational> at_most;
  std::optional<Rational> fewer;
};

// Bellman-Ford style table of cheapest v->sink costs with at most k edges for
// every vertex and every k in [0, |V|-1]. Budgets beyond |V|-1 reuse the last
// row since a DAG path never has more than |V|-1 edges.
class HopCostTable {
 public:
  explicit HopCostTable(const TaskGraph& graph);

  std::optional<Rational> AtMost(int v, int max_edges) const;
  std::optional<Rational> Fewer(int v, int edges) const {
    return AtMost(v, edges - 1);
  }
  const Rational& Any(int v) const { return *table_.back()[v]; }

  HopCosts At(int v, int k) const { return {Any(v), AtMost(v, k), Fewer(v, k)}; }

  int horizon() const { return static_cast<int>(table_.size()) - 1; }

 private:
  // table_[k][v]
  std::vector<std::vector<std::optional<Rational>>> table_;
};

// Cost of the cheapest v->sink path using at most `max_edges` edges, or the
// plain cheapest-path distance when `max_edges` is nullopt.
std::optional<Rational> HopBoundedCheapest(const TaskGraph& graph, int v,
                                           std::optional<int> max_edges);

// One cheapest source->sink path for every feasible exact length, ties broken
// by the lexicographically smallest vertex sequence.
std::map<int, PathRecord> CheapestPerLength(const TaskGraph& graph);

// Number of source->sink paths of each exact length, saturating at `cap`.
std::vector<long long> CountPathsByLength(const TaskGraph& graph,
                                          long long cap = 1LL << 40);

}  // namespace biasgraph

#endif  // BIASGRAPH_HOP_COSTS_H_
