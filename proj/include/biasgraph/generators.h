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

#ifndef BIASGRAPH_GENERATORS_H_
#define BIASGRAPH_GENERATORS_H_

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "biasgraph/rational.h"
#include "biasgraph/task_graph.h"

namespace biasgraph {

// The n-fan: direct edge s->t of cost 1, a free spine s->v1->...->vn and exit
// edges (vi, t) of cost c^i.
struct FanSpec {
  int n = 1;
  Rational c = 2;
};

void CheckFanSpec(const FanSpec& spec);
TaskGraph MakeFan(const FanSpec& spec);
RawGraph MakeFanRaw(const FanSpec& spec);

// P_i on a fan built by MakeFan: the path leaving the spine at v_i (P_0 is
// the direct edge).
PathRecord FanPath(const TaskGraph& fan, int exit);

// Fan with three exits at costs c, c2, c3 where 1 < c < c^2 < c2 < c2^2 < c3.
TaskGraph MakeModifiedThreeFan(const Rational& c, const Rational& c2,
                               const Rational& c3);

struct NamedInstance {
  TaskGraph graph;
  // Paths the instance was built to illustrate, keyed by their usual label.
  std::map<std::string, PathRecord> paths;
};

// Known instances: "fig1" (branching procrastination example), "fig7a" and
// "fig7b" (rewards that break monotonicity), "modified_3fan" (params c, c2,
// c3). Throws kUnknownInstance or kInvalidParameters.
NamedInstance MakeNamedInstance(std::string_view name,
                                std::span<const Rational> params = {});

}  // namespace biasgraph

#endif  // BIASGRAPH_GENERATORS_H_
