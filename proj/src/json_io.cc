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

#include "biasgraph/json_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "biasgraph/error.h"

namespace biasgraph {
namespace {

const Json& Field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::kInvalidInput,
                std::string("graph JSON is missing \"") + key + "\"");
  }
  return object.at(key);
}

std::string StringField(const Json& object, const char* key) {
  const Json& value = Field(object, key);
  if (!value.is_string()) {
    throw Error(ErrorCode::kInvalidInput,
                std::string("\"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

Rational CostFrom(const Json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw Error(ErrorCode::kInvalidInput,
              "edge cost must be a string such as \"3/2\" or an integer");
}

Json AlternativeToJson(const TaskGraph& graph, const Alternative& alt) {
  return {{"vertex", graph.name(alt.vertex)},
          {"perceived", FormatRational(alt.perceived)}};
}

}  // namespace

Json RawGraphToJson(const RawGraph& raw) {
  Json edges = Json::array();
  for (const RawEdge& e : raw.edges) {
    edges.push_back(
        {{"from", e.from}, {"to", e.to}, {"cost", FormatRational(e.cost)}});
  }
  return {{"vertices", raw.vertices},
          {"edges", std::move(edges)},
          {"source", raw.source},
          {"sink", raw.sink}};
}

RawGraph RawGraphFromJson(const Json& json) {
  RawGraph raw;
  const Json& vertices = Field(json, "vertices");
  const Json& edges = Field(json, "edges");
  if (!vertices.is_array() || !edges.is_array()) {
    throw Error(ErrorCode::kInvalidInput,
                "\"vertices\" and \"edges\" must be arrays");
  }
  for (const Json& v : vertices) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kInvalidInput, "vertex ids must be strings");
    }
    raw.vertices.push_back(v.get<std::string>());
  }
  for (const Json& e : edges) {
    raw.edges.push_back({StringField(e, "from"), StringField(e, "to"),
                         CostFrom(Field(e, "cost"))});
  }
  raw.source = StringField(json, "source");
  raw.sink = StringField(json, "sink");
  return raw;
}

RawGraph ReadRawGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  Json json;
  try {
    json = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, path + ": " + e.what());
  }
  return RawGraphFromJson(json);
}

Json GraphToJson(const TaskGraph& graph) { return RawGraphToJson(ToRaw(graph)); }

double RoundSignificant(double value, int digits) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

Json PathToJson(const TaskGraph& graph, const PathRecord& path) {
  return {{"vertices", PathNames(graph, path)},
          {"cost", FormatRational(path.cost)},
          {"length", path.length()}};
}

Json TraceToJson(const TaskGraph& graph, const TraversalTrace& trace) {
  Json steps = Json::array();
  for (const StepRecord& step : trace.steps) {
    Json alternatives = Json::array();
    for (const Alternative& alt : step.alternatives) {
      alternatives.push_back(AlternativeToJson(graph, alt));
    }
    Json entry = {{"at", graph.name(step.at)},
                  {"chose", graph.name(step.chose)},
                  {"perceived", FormatRational(step.perceived)},
                  {"alternatives", std::move(alternatives)}};
    if (auto runner_up = step.RunnerUp()) {
      entry["runner_up"] = AlternativeToJson(graph, *runner_up);
    } else {
      entry["runner_up"] = nullptr;
    }
    steps.push_back(std::move(entry));
  }
  Json out = PathToJson(graph, trace.path);
  out["steps"] = std::move(steps);
  return out;
}

Json IntervalSetToJson(const IntervalSet& set) {
  Json out = Json::array();
  for (const Interval& piece : set.intervals()) {
    out.push_back({{"lo", FormatRational(piece.lo)},
                   {"hi", piece.hi ? Json(FormatRational(*piece.hi)) : Json()}});
  }
  return out;
}

Json LadderReportToJson(const TaskGraph& graph, const UnbiasedEqReport& report) {
  Json ladder = Json::array();
  for (const PathRecord& path : report.ladder.paths) {
    ladder.push_back(PathToJson(graph, path));
  }
  Json out = {{"ladder", std::move(ladder)},
              {"reward", FormatRational(report.ladder.reward)},
              {"symmetric", report.symmetric},
              {"tie_rule", report.tie_rule == TieRule::kSplit      ? "split"
                           : report.tie_rule == TieRule::kBothFull ? "both-full"
                                                                   : "none"}};
  if (report.asymmetric) {
    out["asymmetric"] = {report.asymmetric->first, report.asymmetric->second};
  } else {
    out["asymmetric"] = nullptr;
  }
  return out;
}

Json NeCheckToJson(const TaskGraph& graph, const NeCheckResult& result) {
  Json out = {{"is_equilibrium", result.is_equilibrium}};
  if (result.deviation) {
    out["deviation"] = {{"vertex", graph.name(result.deviation->vertex)},
                        {"trace", TraceToJson(graph, result.deviation->trace)}};
  } else {
    out["deviation"] = nullptr;
  }
  return out;
}

Json BneSolutionToJson(const FanBneSolution& s) {
  return {{"p", RoundSignificant(s.p)},
          {"cutoff", RoundSignificant(s.cutoff)},
          {"validity_threshold", RoundSignificant(s.validity_threshold)},
          {"valid", s.valid},
          {"nontrivial", s.nontrivial},
          {"expected_cost_ratio", RoundSignificant(s.expected_cost_ratio)},
          {"residual", RoundSignificant(s.residual)},
          {"competitors", s.competitors}};
}

}  // namespace biasgraph
