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

#include "biasgraph/hop_costs.h"

#include <algorithm>
#include <utility>

namespace biasgraph {
namespace {

using CostRow = std::vector<std::optional<Rational>>;

void Relax(std::optional<Rational>& slot, const Rational& candidate) {
  if (!slot || candidate < *slot) slot = candidate;
}

// exact[l][v]: cheapest v->sink path with exactly l edges.
std::vector<CostRow> ExactLengthCosts(const TaskGraph& graph) {
  const int n = graph.num_vertices();
  std::vector<CostRow> exact(n, CostRow(n));
  exact[0][graph.sink()] = Rational(0);
  for (int len = 1; len < n; ++len) {
    for (int v = 0; v < n; ++v) {
      for (const Edge& e : graph.out_edges(v)) {
        if (exact[len - 1][e.to]) Relax(exact[len][v], e.cost + *exact[len - 1][e.to]);
      }
    }
  }
  return exact;
}

}  // namespace

HopCostTable::HopCostTable(const TaskGraph& graph) {
  const int n = graph.num_vertices();
  table_.assign(n, CostRow(n));
  table_[0][graph.sink()] = Rational(0);
  for (int k = 1; k < n; ++k) {
    table_[k] = table_[k - 1];
    for (int v = 0; v < n; ++v) {
      for (const Edge& e : graph.out_edges(v)) {
        if (table_[k - 1][e.to]) Relax(table_[k][v], e.cost + *table_[k - 1][e.to]);
      }
    }
  }
}

std::optional<Rational> HopCostTable::AtMost(int v, int max_edges) const {
  if (max_edges < 0) return std::nullopt;
  return table_[std::min(max_edges, horizon())][v];
}

std::optional<Rational> HopBoundedCheapest(const TaskGraph& graph, int v,
                                           std::optional<int> max_edges) {
  HopCostTable table(graph);
  if (!max_edges) return table.Any(v);
  return table.AtMost(v, *max_edges);
}

std::map<int, PathRecord> CheapestPerLength(const TaskGraph& graph) {
  const std::vector<CostRow> exact = ExactLengthCosts(graph);
  std::map<int, PathRecord> result;
  const int s = graph.source();
  for (int len = 1; len < graph.num_vertices(); ++len) {
    if (!exact[len][s]) continue;
    // Greedy walk from the source picking the smallest-index successor that
    // still attains the optimum yields the lexicographically smallest path.
    std::vector<int> vertices = {s};
    int v = s;
    for (int remaining = len; remaining > 0; --remaining) {
      const Rational& target = *exact[remaining][v];
      for (const Edge& e : graph.out_edges(v)) {
        const auto& rest = exact[remaining - 1][e.to];
        if (rest && e.cost + *rest == target) {
          v = e.to;
          break;
        }
      }
      vertices.push_back(v);
    }
    result.emplace(len, PathRecord{std::move(vertices), *exact[len][s]});
  }
  return result;
}

std::vector<long long> CountPathsByLength(const TaskGraph& graph,
                                          long long cap) {
  const int n = graph.num_vertices();
  // count[l][v]: number of v->sink paths with exactly l edges.
  std::vector<std::vector<long long>> count(n, std::vector<long long>(n, 0));
  count[0][graph.sink()] = 1;
  for (int len = 1; len < n; ++len) {
    for (int v = 0; v < n; ++v) {
      long long total = 0;
      for (const Edge& e : graph.out_edges(v)) {
        total = std::min(cap, total + count[len - 1][e.to]);
      }
      count[len][v] = total;
    }
  }
  std::vector<long long> by_length(n, 0);
  for (int len = 0; len < n; ++len) by_length[len] = count[len][graph.source()];
  return by_length;
}

}  // namespace biasgraph
