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

#include "biasgraph/generators.h"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "biasgraph/error.h"

namespace biasgraph {
namespace {

RawGraph Raw(std::vector<std::string> vertices,
             std::vector<std::tuple<std::string, std::string, int>> edges) {
  RawGraph raw;
  raw.vertices = std::move(vertices);
  raw.source = "s";
  raw.sink = "t";
  for (auto& [from, to, cost] : edges) {
    raw.edges.push_back(RawEdge{from, to, Rational(cost)});
  }
  return raw;
}

PathRecord NamedPath(const TaskGraph& graph, std::string_view names) {
  return ParsePath(graph, names);
}

// Optimal path s,x,t costs 6. A bias-2 agent at s sees x at 2*6+0 = 12 and v
// at 2*0+11 = 11 (planning v,y,t), then at v prefers z (2*0+21 = 21 < 2*11+0)
// and ends on s,v,z,t with cost 21.
NamedInstance Fig1() {
  RawGraph raw = Raw({"s", "x", "v", "y", "z", "t"},
                     {{"s", "x", 6},
                      {"x", "t", 0},
                      {"s", "v", 0},
                      {"v", "y", 11},
                      {"y", "t", 0},
                      {"v", "z", 0},
                      {"z", "t", 21}});
  NamedInstance instance{Validate(raw).graph, {}};
  instance.paths.emplace("optimal", NamedPath(instance.graph, "s,x,t"));
  instance.paths.emplace("planned", NamedPath(instance.graph, "s,v,y,t"));
  instance.paths.emplace("biased", NamedPath(instance.graph, "s,v,z,t"));
  return instance;
}

// Bias 10, opponent on Q = s,q1,q2,t. With r = 300: C(s,q1) = 2 - 150 = -148,
// C(s,v1) = 0 + (100 - 300) = -200, and at v1 the exit edge weighs
// 10 * 100 = 1000 before the reward, so the agent walks V and loses.
NamedInstance Fig7a() {
  RawGraph raw = Raw({"s", "q1", "q2", "v1", "v2", "v3", "t"},
                     {{"s", "q1", 0},
                      {"q1", "q2", 0},
                      {"q2", "t", 2},
                      {"s", "v1", 0},
                      {"v1", "v2", 0},
                      {"v2", "v3", 0},
                      {"v3", "t", 50},
                      {"v1", "t", 100}});
  NamedInstance instance{Validate(raw).graph, {}};
  instance.paths.emplace("Q", NamedPath(instance.graph, "s,q1,q2,t"));
  instance.paths.emplace("V", NamedPath(instance.graph, "s,v1,v2,v3,t"));
  instance.paths.emplace("X", NamedPath(instance.graph, "s,v1,t"));
  return instance;
}

// Bias 10, opponent on Q = s,q1,q2,q3,t (four edges). C(s,v1) = 5 for both
// r = 10 and r = 2 (the losing path V is the planned continuation), while
// C(s,q1) = 8 - r/2. At r = 2 the agent goes to v1 and then takes the quicker
// X = s,v1,w,t because the spine edge v1->v2 weighs 10 * 5.
NamedInstance Fig7b() {
  RawGraph raw = Raw({"s", "q1", "q2", "q3", "v1", "v2", "v3", "v4", "w", "t"},
                     {{"s", "q1", 0},
                      {"q1", "q2", 0},
                      {"q2", "q3", 0},
                      {"q3", "t", 8},
                      {"s", "v1", 0},
                      {"v1", "v2", 5},
                      {"v2", "v3", 0},
                      {"v3", "v4", 0},
                      {"v4", "t", 0},
                      {"v1", "w", 0},
                      {"w", "t", 20}});
  NamedInstance instance{Validate(raw).graph, {}};
  instance.paths.emplace("Q", NamedPath(instance.graph, "s,q1,q2,q3,t"));
  instance.paths.emplace("V", NamedPath(instance.graph, "s,v1,v2,v3,v4,t"));
  instance.paths.emplace("X", NamedPath(instance.graph, "s,v1,w,t"));
  return instance;
}

}  // namespace

void CheckFanSpec(const FanSpec& spec) {
  if (spec.n < 1) {
    throw Error(ErrorCode::kInvalidParameters, "fan needs n >= 1");
  }
  if (spec.c <= 1) {
    throw Error(ErrorCode::kInvalidParameters, "fan needs growth factor c > 1");
  }
}

RawGraph MakeFanRaw(const FanSpec& spec) {
  CheckFanSpec(spec);
  RawGraph raw;
  raw.vertices.push_back("s");
  for (int i = 1; i <= spec.n; ++i) raw.vertices.push_back("v" + std::to_string(i));
  raw.vertices.push_back("t");
  raw.source = "s";
  raw.sink = "t";
  raw.edges.push_back({"s", "t", Rational(1)});
  raw.edges.push_back({"s", "v1", Rational(0)});
  Rational exit_cost = 1;
  for (int i = 1; i <= spec.n; ++i) {
    const std::string vi = "v" + std::to_string(i);
    exit_cost *= spec.c;
    if (i < spec.n) raw.edges.push_back({vi, "v" + std::to_string(i + 1), Rational(0)});
    raw.edges.push_back({vi, "t", exit_cost});
  }
  return raw;
}

TaskGraph MakeFan(const FanSpec& spec) { return Validate(MakeFanRaw(spec)).graph; }

PathRecord FanPath(const TaskGraph& fan, int exit) {
  return ParsePath(fan, "P" + std::to_string(exit));
}

TaskGraph MakeModifiedThreeFan(const Rational& c, const Rational& c2,
                               const Rational& c3) {
  if (!(1 < c && c * c < c2 && c2 * c2 < c3)) {
    throw Error(ErrorCode::kInvalidParameters,
                "modified 3-fan needs 1 < c < c^2 < c2 < c2^2 < c3");
  }
  RawGraph raw;
  raw.vertices = {"s", "v1", "v2", "v3", "t"};
  raw.source = "s";
  raw.sink = "t";
  raw.edges = {{"s", "t", Rational(1)},  {"s", "v1", Rational(0)},
               {"v1", "v2", Rational(0)}, {"v2", "v3", Rational(0)},
               {"v1", "t", c},           {"v2", "t", c2},
               {"v3", "t", c3}};
  return Validate(raw).graph;
}

NamedInstance MakeNamedInstance(std::string_view name,
                                std::span<const Rational> params) {
  if (name == "fig1") return Fig1();
  if (name == "fig7a") return Fig7a();
  if (name == "fig7b") return Fig7b();
  if (name == "modified_3fan" || name == "mod3fan") {
    if (params.size() != 3) {
      throw Error(ErrorCode::kInvalidParameters,
                  "modified_3fan takes parameters c, c2, c3");
    }
    NamedInstance instance{MakeModifiedThreeFan(params[0], params[1], params[2]), {}};
    for (int i = 0; i <= 3; ++i) {
      instance.paths.emplace("P" + std::to_string(i), FanPath(instance.graph, i));
    }
    return instance;
  }
  throw Error(ErrorCode::kUnknownInstance,
              "unknown instance '" + std::string(name) + "'");
}

}  // namespace biasgraph
