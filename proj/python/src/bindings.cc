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

// Thin pybind11 layer. Graphs and results cross the boundary as JSON text
// and rationals as "p/q" strings; the Python package turns them into dicts
// and fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "biasgraph/agent.h"
#include "biasgraph/bne.h"
#include "biasgraph/error.h"
#include "biasgraph/generators.h"
#include "biasgraph/hop_costs.h"
#include "biasgraph/json_io.h"
#include "biasgraph/pure_eq.h"
#include "biasgraph/verify.h"

namespace py = pybind11;

namespace biasgraph {
namespace {

TaskGraph GraphFrom(const std::string& json) {
  Json parsed;
  try {
    parsed = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, e.what());
  }
  return Validate(RawGraphFromJson(parsed)).graph;
}

TieRule TieRuleFrom(const std::string& text) {
  if (text == "split") return TieRule::kSplit;
  if (text == "both-full") return TieRule::kBothFull;
  if (text == "none") return TieRule::kNone;
  throw Error(ErrorCode::kInvalidInput, "unknown tie rule '" + text + "'");
}

BiasDistribution DistributionFrom(const std::string& kind, double c, double param) {
  if (kind == "equal-revenue") return BiasDistribution::ShiftedEqualRevenue(c);
  if (kind == "exponential") return BiasDistribution::ShiftedExponential(c, param);
  if (kind == "uniform") return BiasDistribution::Uniform(c, param);
  throw Error(ErrorCode::kInvalidInput, "unknown distribution '" + kind + "'");
}

std::string Validated(const std::string& graph) {
  return GraphToJson(GraphFrom(graph)).dump();
}

std::string Simulate(const std::string& graph_json, const std::string& bias,
                     const std::optional<std::string>& opponent,
                     const std::string& reward, const std::string& tie_rule) {
  const TaskGraph graph = GraphFrom(graph_json);
  std::optional<PathRecord> path;
  if (opponent) path = ParsePath(graph, *opponent);
  const TraversalTrace trace =
      Traverse(graph, {ParseRational(bias), TieRuleFrom(tie_rule)},
               path ? &*path : nullptr, ParseRational(reward));
  return TraceToJson(graph, trace).dump();
}

std::string CostRatioOf(const std::string& graph_json, const std::string& bias) {
  return FormatRational(
      CostRatio(GraphFrom(graph_json), {ParseRational(bias), TieRule::kSplit}));
}

std::string NeCheck(const std::string& graph_json, const std::string& path,
                    const std::string& reward, const std::string& bias) {
  const TaskGraph graph = GraphFrom(graph_json);
  return NeCheckToJson(graph, CheckSymmetricNe(graph, ParsePath(graph, path),
                                               ParseRational(reward),
                                               ParseRational(bias)))
      .dump();
}

std::string MinReward(const std::string& graph_json, const std::string& path,
                      const std::string& bias) {
  const TaskGraph graph = GraphFrom(graph_json);
  const MinRewardResult result =
      MinRewardForNe(graph, ParsePath(graph, path), ParseRational(bias));
  const Json out = {
      {"feasible", IntervalSetToJson(result.feasible)},
      {"minimum", result.minimum ? Json(FormatRational(*result.minimum)) : Json()}};
  return out.dump();
}

std::string UnbiasedEq(const std::string& graph_json, const std::string& reward,
                       const std::string& tie_rule) {
  const TaskGraph graph = GraphFrom(graph_json);
  return LadderReportToJson(
             graph, ClassifyUnbiased(graph, ParseRational(reward), TieRuleFrom(tie_rule)))
      .dump();
}

std::string DominantReward(const std::string& graph_json, const std::string& bias,
                           int agents) {
  const TaskGraph graph = GraphFrom(graph_json);
  const DominantPathReward result =
      ComputeDominantPathReward(graph, ParseRational(bias), agents);
  const Json out = {{"path", PathToJson(graph, result.path)},
                    {"reward", FormatRational(result.reward)}};
  return out.dump();
}

std::string Fan(int n, const std::string& c) {
  return GraphToJson(MakeFan({n, ParseRational(c)})).dump();
}

std::string Instance(const std::string& name) {
  return GraphToJson(MakeNamedInstance(name).graph).dump();
}

std::string BneFan(int n, double c, const std::string& kind, double param,
                   double reward, int m) {
  const BiasDistribution dist = DistributionFrom(kind, c, param);
  const FanBneSolution solution = m == 1 ? SolveFanBne(n, c, dist, reward)
                                         : SolveFanBneMulti(n, c, dist, reward, m);
  return BneSolutionToJson(solution).dump();
}

std::string Verify(const std::string& suite, uint64_t seed, int count) {
  return RunVerifySuite(suite, seed, count).ToJson().dump();
}

}  // namespace
}  // namespace biasgraph

PYBIND11_MODULE(_biasgraph, m) {
  using namespace biasgraph;
  m.doc() = "Native core of the biasgraph package.";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(ErrorCodeName(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("validate", &Validated, py::arg("graph"));
  m.def("simulate", &Simulate, py::arg("graph"), py::arg("bias"), py::arg("opponent"),
        py::arg("reward"), py::arg("tie_rule"));
  m.def("cost_ratio", &CostRatioOf, py::arg("graph"), py::arg("bias"));
  m.def("ne_check", &NeCheck, py::arg("graph"), py::arg("path"), py::arg("reward"),
        py::arg("bias"));
  m.def("min_reward", &MinReward, py::arg("graph"), py::arg("path"), py::arg("bias"));
  m.def("unbiased_eq", &UnbiasedEq, py::arg("graph"), py::arg("reward"),
        py::arg("tie_rule"));
  m.def("dominant_reward", &DominantReward, py::arg("graph"), py::arg("bias"),
        py::arg("agents"));
  m.def("fan", &Fan, py::arg("n"), py::arg("c"));
  m.def("instance", &Instance, py::arg("name"));
  m.def("bne_fan", &BneFan, py::arg("n"), py::arg("c"), py::arg("dist"),
        py::arg("param"), py::arg("reward"), py::arg("m"));
  m.def("verify", &Verify, py::arg("suite"), py::arg("seed"), py::arg("count"));

  m.def("lambert_w0", &LambertW0, py::arg("z"));
  m.def("reward_share_factor", &RewardShareFactor, py::arg("p"), py::arg("m"));
  m.def("expected_inverse_share", &ExpectedInverseShare, py::arg("p"), py::arg("m"));
  m.def("optimality_bound", &EqualRevenueOptimalityBound, py::arg("s"));
}
