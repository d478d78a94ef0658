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

#ifndef BIASGRAPH_TASK_GRAPH_H_
#define BIASGRAPH_TASK_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biasgraph/rational.h"

namespace biasgraph {

// Unvalidated graph description, as read from a file or built by a generator.
struct RawEdge {
  std::string from;
  std::string to;
  Rational cost;
};

struct RawGraph {
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
  std::string source;
  std::string sink;
};

struct Edge {
  int to;
  Rational cost;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Validated task graph: acyclic, nonnegative costs, every vertex on some
// source->sink path. Vertex ids are dense indices in insertion order and that
// order is the tie-breaking order everywhere in the library. Immutable.
class TaskGraph {
 public:
  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const;
  int source() const { return source_; }
  int sink() const { return sink_; }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> FindVertex(std::string_view name) const;

  // Out-edges of `v`, sorted by head index. At most one edge per head.
  std::span<const Edge> out_edges(int v) const { return out_[v]; }
  std::optional<Rational> EdgeCost(int from, int to) const;

  // Deterministic topological order (Kahn, smallest index first).
  const std::vector<int>& topological_order() const { return topo_; }

  friend bool operator==(const TaskGraph&, const TaskGraph&);

 private:
  friend struct GraphBuilder;

  std::vector<std::string> names_;
  std::vector<std::vector<Edge>> out_;
  std::vector<int> topo_;
  int source_ = 0;
  int sink_ = 0;
};

struct ValidationResult {
  TaskGraph graph;
  // Names of vertices dropped because they lie on no source->sink path.
  std::vector<std::string> pruned;
  std::vector<std::string> warnings;
};

// Checks and canonicalizes a raw description. Self loops count as cycles;
// parallel edges collapse to the cheapest. Throws Error with kCycleDetected,
// kNegativeCost, kNoSourceSinkPath or kInvalidInput.
ValidationResult Validate(const RawGraph& raw);

RawGraph ToRaw(const TaskGraph& graph);

// A walk through the graph with its cached cost.
struct PathRecord {
  std::vector<int> vertices;
  Rational cost;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

// Builds a record for consecutive-edge vertex sequence; throws kInvalidPath.
PathRecord MakePath(const TaskGraph& graph, std::vector<int> vertices);

// As MakePath, additionally requiring the path to run from source to sink.
PathRecord MakeSourceSinkPath(const TaskGraph& graph, std::vector<int> vertices);

// Accepts "s,a,t" (vertex names) or, on fan-shaped graphs whose vertices are
// named s, v1..vn, t, the shorthand "P0".."Pn".
PathRecord ParsePath(const TaskGraph& graph, std::string_view text);

std::vector<std::string> PathNames(const TaskGraph& graph,
                                   const PathRecord& path);

}  // namespace biasgraph

#endif  // BIASGRAPH_TASK_GRAPH_H_
