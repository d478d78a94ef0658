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

#ifndef BIASGRAPH_JSON_IO_H_
#define BIASGRAPH_JSON_IO_H_

#include <string>

#include "json.hpp"

#include "biasgraph/agent.h"
#include "biasgraph/bne.h"
#include "biasgraph/interval_set.h"
#include "biasgraph/pure_eq.h"
#include "biasgraph/task_graph.h"

namespace biasgraph {

using Json = nlohmann::json;

// Graph file format:
//   {"vertices": ["s", "a", "t"],
//    "edges": [{"from": "s", "to": "a", "cost": "2"}, ...],
//    "source": "s", "sink": "t"}
// Costs are strings (or integers) parsed exactly.
Json RawGraphToJson(const RawGraph& raw);
RawGraph RawGraphFromJson(const Json& json);
RawGraph ReadRawGraphFile(const std::string& path);
Json GraphToJson(const TaskGraph& graph);

// Floats are rounded to 12 significant digits before serialization.
double RoundSignificant(double value, int digits = 12);

Json PathToJson(const TaskGraph& graph, const PathRecord& path);
Json TraceToJson(const TaskGraph& graph, const TraversalTrace& trace);
Json IntervalSetToJson(const IntervalSet& set);
Json LadderReportToJson(const TaskGraph& graph, const UnbiasedEqReport& report);
Json NeCheckToJson(const TaskGraph& graph, const NeCheckResult& result);
Json BneSolutionToJson(const FanBneSolution& solution);

}  // namespace biasgraph

#endif  // BIASGRAPH_JSON_IO_H_
