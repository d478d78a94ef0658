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

#include "biasgraph/error.h"
#include "biasgraph/generators.h"
#include "gtest/gtest.h"

namespace biasgraph {
namespace {

RawGraph Diamond() {
  RawGraph raw;
  raw.vertices = {"s", "a", "b", "t"};
  raw.edges = {{"s", "a", 1}, {"s", "b", 2}, {"a", "t", 3}, {"b", "t", 0}};
  raw.source = "s";
  raw.sink = "t";
  return raw;
}

ErrorCode CodeOf(const RawGraph& raw) {
  try {
    Validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "validation unexpectedly succeeded";
  return ErrorCode::kInvalidInput;
}

TEST(ValidateTest, KeepsAWellFormedGraph) {
  const ValidationResult result = Validate(Diamond());
  EXPECT_TRUE(result.pruned.empty());
  EXPECT_TRUE(result.warnings.empty());
  const TaskGraph& g = result.graph;
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(g.name(g.source()), "s");
  EXPECT_EQ(g.name(g.sink()), "t");
  EXPECT_EQ(g.EdgeCost(*g.FindVertex("s"), *g.FindVertex("b")), Rational(2));
  EXPECT_FALSE(g.EdgeCost(*g.FindVertex("a"), *g.FindVertex("b")));
  EXPECT_FALSE(g.FindVertex("zzz"));
}

TEST(ValidateTest, BranchingExampleNeedsNoPruning) {
  const ValidationResult result = Validate(ToRaw(MakeNamedInstance("fig1").graph));
  EXPECT_EQ(result.graph.num_vertices(), 6);
  EXPECT_TRUE(result.pruned.empty());
}

TEST(ValidateTest, SingleFreeEdge) {
  RawGraph raw{{"s", "t"}, {{"s", "t", 0}}, "s", "t"};
  EXPECT_EQ(Validate(raw).graph.num_edges(), 1);
}

TEST(ValidateTest, RejectsCyclesAndSelfLoops) {
  RawGraph cyclic = Diamond();
  cyclic.edges.push_back({"t", "s", 1});
  EXPECT_EQ(CodeOf(cyclic), ErrorCode::kCycleDetected);
  RawGraph loop = Diamond();
  loop.edges.push_back({"a", "a", 0});
  EXPECT_EQ(CodeOf(loop), ErrorCode::kCycleDetected);
}

TEST(ValidateTest, RejectsNegativeCosts) {
  RawGraph raw = Diamond();
  raw.edges[0].cost = Rational(-1, 2);
  EXPECT_EQ(CodeOf(raw), ErrorCode::kNegativeCost);
}

TEST(ValidateTest, RejectsMissingPath) {
  RawGraph raw{{"s", "a", "t"}, {{"s", "a", 1}}, "s", "t"};
  EXPECT_EQ(CodeOf(raw), ErrorCode::kNoSourceSinkPath);
}

TEST(ValidateTest, RejectsMalformedDescriptions) {
  RawGraph duplicate = Diamond();
  duplicate.vertices.push_back("a");
  EXPECT_EQ(CodeOf(duplicate), ErrorCode::kInvalidInput);
  RawGraph unknown = Diamond();
  unknown.edges.push_back({"a", "q", 1});
  EXPECT_EQ(CodeOf(unknown), ErrorCode::kInvalidInput);
  RawGraph same = Diamond();
  same.sink = "s";
  EXPECT_EQ(CodeOf(same), ErrorCode::kInvalidInput);
}

TEST(ValidateTest, PrunesVerticesOffEverySourceSinkPath) {
  RawGraph raw = Diamond();
  raw.vertices.insert(raw.vertices.begin() + 1, "dead_end");
  raw.vertices.push_back("orphan");
  raw.edges.push_back({"s", "dead_end", 0});
  raw.edges.push_back({"orphan", "t", 0});
  const ValidationResult result = Validate(raw);
  EXPECT_EQ(result.pruned, (std::vector<std::string>{"dead_end", "orphan"}));
  EXPECT_EQ(result.warnings.size(), 2u);
  EXPECT_EQ(result.graph, Validate(Diamond()).graph);
}

TEST(ValidateTest, KeepsTheCheapestParallelEdge) {
  RawGraph raw = Diamond();
  raw.edges.push_back({"s", "a", Rational(1, 2)});
  raw.edges.push_back({"s", "a", 4});
  const ValidationResult result = Validate(raw);
  EXPECT_EQ(result.warnings.size(), 2u);
  const TaskGraph& g = result.graph;
  EXPECT_EQ(g.EdgeCost(g.source(), *g.FindVertex("a")), Rational(1, 2));
  EXPECT_EQ(g.num_edges(), 4);
}

TEST(ValidateTest, IsIdempotent) {
  for (const char* name : {"fig1", "fig7a", "fig7b"}) {
    const TaskGraph once = MakeNamedInstance(name).graph;
    const TaskGraph twice = Validate(ToRaw(once)).graph;
    EXPECT_EQ(once, twice) << name;
  }
}

TEST(TaskGraphTest, OutEdgesAreSortedAndTopologicalOrderIsValid) {
  const TaskGraph g = MakeNamedInstance("fig7b").graph;
  std::vector<int> position(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) position[g.topological_order()[i]] = i;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int previous = -1;
    for (const Edge& e : g.out_edges(v)) {
      EXPECT_LT(previous, e.to);
      EXPECT_LT(position[v], position[e.to]);
      previous = e.to;
    }
  }
}

TEST(PathTest, MakePathComputesCostAndLength) {
  const TaskGraph g = Validate(Diamond()).graph;
  const PathRecord p = ParsePath(g, "s,a,t");
  EXPECT_EQ(p.cost, 4);
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(PathNames(g, p), (std::vector<std::string>{"s", "a", "t"}));
  EXPECT_EQ(MakePath(g, {*g.FindVertex("a"), g.sink()}).cost, 3);
}

TEST(PathTest, RejectsBrokenPaths) {
  const TaskGraph g = Validate(Diamond()).graph;
  for (const char* bad : {"s,t", "s,a", "a,t", "s,a,q,t", ""}) {
    try {
      ParsePath(g, bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidPath) << bad;
    }
  }
  EXPECT_THROW(MakeSourceSinkPath(g, {g.source(), *g.FindVertex("a")}), Error);
}

TEST(PathTest, FanShorthand) {
  const TaskGraph fan = MakeFan({3, 2});
  EXPECT_EQ(PathNames(fan, ParsePath(fan, "P0")),
            (std::vector<std::string>{"s", "t"}));
  const PathRecord p2 = ParsePath(fan, "P2");
  EXPECT_EQ(PathNames(fan, p2), (std::vector<std::string>{"s", "v1", "v2", "t"}));
  EXPECT_EQ(p2.cost, 4);
  EXPECT_THROW(ParsePath(fan, "P4"), Error);
  EXPECT_THROW(ParsePath(Validate(Diamond()).graph, "P1"), Error);
}

}  // namespace
}  // namespace biasgraph
