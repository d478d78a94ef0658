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

#include "biasgraph/task_graph.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>
#include <utility>

#include "biasgraph/error.h"

namespace biasgraph {

struct GraphBuilder {
  static TaskGraph Build(std::vector<std::string> names,
                         std::vector<std::vector<Edge>> out,
                         std::vector<int> topo, int source, int sink) {
    TaskGraph g;
    g.names_ = std::move(names);
    g.out_ = std::move(out);
    g.topo_ = std::move(topo);
    g.source_ = source;
    g.sink_ = sink;
    return g;
  }
};

namespace {

// Kahn's algorithm with a min-heap so the order is reproducible. Returns fewer
// than n vertices when the graph has a cycle.
std::vector<int> TopologicalOrder(const std::vector<std::vector<Edge>>& out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> indegree(n, 0);
  for (const auto& edges : out) {
    for (const Edge& e : edges) ++indegree[e.to];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Edge& e : out[v]) {
      if (--indegree[e.to] == 0) ready.push(e.to);
    }
  }
  return order;
}

std::vector<bool> Reachable(int start,
                            const std::vector<std::vector<int>>& adjacency) {
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

int TaskGraph::num_edges() const {
  int total = 0;
  for (const auto& edges : out_) total += static_cast<int>(edges.size());
  return total;
}

std::optional<int> TaskGraph::FindVertex(std::string_view name) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

std::optional<Rational> TaskGraph::EdgeCost(int from, int to) const {
  for (const Edge& e : out_[from]) {
    if (e.to == to) return e.cost;
  }
  return std::nullopt;
}

bool operator==(const TaskGraph& a, const TaskGraph& b) {
  return a.names_ == b.names_ && a.out_ == b.out_ && a.source_ == b.source_ &&
         a.sink_ == b.sink_;
}

ValidationResult Validate(const RawGraph& raw) {
  std::unordered_map<std::string, int> index;
  const int n = static_cast<int>(raw.vertices.size());
  for (int v = 0; v < n; ++v) {
    if (raw.vertices[v].empty()) {
      throw Error(ErrorCode::kInvalidInput, "empty vertex id");
    }
    if (!index.emplace(raw.vertices[v], v).second) {
      throw Error(ErrorCode::kInvalidInput,
                  "duplicate vertex id '" + raw.vertices[v] + "'");
    }
  }
  auto lookup = [&](const std::string& name, const char* role) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string("unknown ") + role + " vertex '" + name + "'");
    }
    return it->second;
  };
  const int source = lookup(raw.source, "source");
  const int sink = lookup(raw.sink, "sink");
  if (source == sink) {
    throw Error(ErrorCode::kInvalidInput, "source and sink coincide");
  }

  ValidationResult result;
  // Parallel edges collapse to the cheapest one.
  std::vector<std::map<int, Rational>> cheapest(n);
  for (const RawEdge& e : raw.edges) {
    const int from = lookup(e.from, "edge");
    const int to = lookup(e.to, "edge");
    if (e.cost < 0) {
      throw Error(ErrorCode::kNegativeCost, "edge " + e.from + "->" + e.to +
                                                " has negative cost " +
                                                FormatRational(e.cost));
    }
    if (from == to) {
      throw Error(ErrorCode::kCycleDetected, "self loop at '" + e.from + "'");
    }
    auto [it, inserted] = cheapest[from].emplace(to, e.cost);
    if (!inserted) {
      result.warnings.push_back("parallel edges " + e.from + "->" + e.to +
                                " merged to the cheapest");
      if (e.cost < it->second) it->second = e.cost;
    }
  }

  std::vector<std::vector<Edge>> out(n);
  std::vector<std::vector<int>> forward(n), backward(n);
  for (int v = 0; v < n; ++v) {
    for (const auto& [to, cost] : cheapest[v]) {
      out[v].push_back(Edge{to, cost});
      forward[v].push_back(to);
      backward[to].push_back(v);
    }
  }
  if (static_cast<int>(TopologicalOrder(out).size()) != n) {
    throw Error(ErrorCode::kCycleDetected, "graph contains a directed cycle");
  }

  const std::vector<bool> from_source = Reachable(source, forward);
  const std::vector<bool> to_sink = Reachable(sink, backward);
  if (!from_source[sink]) {
    throw Error(ErrorCode::kNoSourceSinkPath,
                "no path from '" + raw.source + "' to '" + raw.sink + "'");
  }

  std::vector<int> remap(n, -1);
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) {
    if (from_source[v] && to_sink[v]) {
      remap[v] = static_cast<int>(names.size());
      names.push_back(raw.vertices[v]);
    } else {
      result.pruned.push_back(raw.vertices[v]);
      result.warnings.push_back("pruned vertex '" + raw.vertices[v] +
                                "' (not on any source-sink path)");
    }
  }
  std::vector<std::vector<Edge>> kept(names.size());
  for (int v = 0; v < n; ++v) {
    if (remap[v] < 0) continue;
    for (const Edge& e : out[v]) {
      if (remap[e.to] >= 0) kept[remap[v]].push_back(Edge{remap[e.to], e.cost});
    }
  }
  std::vector<int> topo = TopologicalOrder(kept);
  result.graph = GraphBuilder::Build(std::move(names), std::move(kept),
                                     std::move(topo), remap[source],
                                     remap[sink]);
  return result;
}

RawGraph ToRaw(const TaskGraph& graph) {
  RawGraph raw;
  raw.vertices = graph.names();
  raw.source = graph.name(graph.source());
  raw.sink = graph.name(graph.sink());
  for (int v = 0; v < graph.num_vertices(); ++v) {
    for (const Edge& e : graph.out_edges(v)) {
      raw.edges.push_back(RawEdge{graph.name(v), graph.name(e.to), e.cost});
    }
  }
  return raw;
}

PathRecord MakePath(const TaskGraph& graph, std::vector<int> vertices) {
  if (vertices.empty()) {
    throw Error(ErrorCode::kInvalidPath, "empty path");
  }
  Rational cost = 0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= graph.num_vertices()) {
      throw Error(ErrorCode::kInvalidPath, "vertex index out of range");
    }
    if (i == 0) continue;
    auto edge = graph.EdgeCost(vertices[i - 1], vertices[i]);
    if (!edge) {
      throw Error(ErrorCode::kInvalidPath,
                  "no edge " + graph.name(vertices[i - 1]) + "->" +
                      graph.name(vertices[i]));
    }
    cost += *edge;
  }
  return PathRecord{std::move(vertices), std::move(cost)};
}

PathRecord MakeSourceSinkPath(const TaskGraph& graph,
                              std::vector<int> vertices) {
  PathRecord path = MakePath(graph, std::move(vertices));
  if (path.front() != graph.source() || path.back() != graph.sink() ||
      path.length() < 1) {
    throw Error(ErrorCode::kInvalidPath, "path must run from source to sink");
  }
  return path;
}

PathRecord ParsePath(const TaskGraph& graph, std::string_view text) {
  if (text.size() >= 2 && text[0] == 'P' && text.find(',') == text.npos) {
    int exit = -1;
    auto [ptr, ec] =
        std::from_chars(text.data() + 1, text.data() + text.size(), exit);
    if (ec == std::errc() && ptr == text.data() + text.size()) {
      if (exit < 0 || !graph.FindVertex("s") || !graph.FindVertex("t")) {
        throw Error(ErrorCode::kInvalidPath,
                    "fan shorthand needs vertices named s and t");
      }
      std::vector<int> vertices = {*graph.FindVertex("s")};
      for (int i = 1; i <= exit; ++i) {
        auto v = graph.FindVertex("v" + std::to_string(i));
        if (!v) {
          throw Error(ErrorCode::kInvalidPath,
                      "fan shorthand: no vertex v" + std::to_string(i));
        }
        vertices.push_back(*v);
      }
      vertices.push_back(*graph.FindVertex("t"));
      return MakeSourceSinkPath(graph, std::move(vertices));
    }
  }
  std::vector<int> vertices;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == text.npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    auto v = graph.FindVertex(token);
    if (!v) {
      throw Error(ErrorCode::kInvalidPath,
                  "unknown vertex '" + std::string(token) + "' in path");
    }
    vertices.push_back(*v);
    start = comma + 1;
  }
  return MakeSourceSinkPath(graph, std::move(vertices));
}

std::vector<std::string> PathNames(const TaskGraph& graph,
                                   const PathRecord& path) {
  std::vector<std::string> names;
  names.reserve(path.vertices.size());
  for (int v : path.vertices) names.push_back(graph.name(v));
  return names;
}

}  // namespace biasgraph
