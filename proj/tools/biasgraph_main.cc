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

// Command-line front end. Structured output is JSON on stdout (CSV for
// sweeps on request). Exit codes: 0 success, 2 invalid input, 3 empty or
// undefined result, 4 verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biasgraph/agent.h"
#include "biasgraph/bne.h"
#include "biasgraph/error.h"
#include "biasgraph/generators.h"
#include "biasgraph/json_io.h"
#include "biasgraph/oracle.h"
#include "biasgraph/pure_eq.h"
#include "biasgraph/verify.h"

namespace biasgraph {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitVerifyFailed = 4;

void Emit(const Json& json) { std::cout << json.dump(2) << "\n"; }

TieRule ParseTieRule(const std::string& text) {
  if (text == "split") return TieRule::kSplit;
  if (text == "both-full") return TieRule::kBothFull;
  if (text == "none") return TieRule::kNone;
  throw Error(ErrorCode::kInvalidInput,
              "tie rule must be split, both-full or none, not " + text);
}

TaskGraph LoadGraph(const std::string& path) {
  ValidationResult result = Validate(ReadRawGraphFile(path));
  for (const std::string& w : result.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return std::move(result.graph);
}

struct DistOptions {
  std::string kind = "equal-revenue";
  double d = 0;
  double lambda = 1;

  BiasDistribution Make(double c) const {
    if (kind == "equal-revenue") return BiasDistribution::ShiftedEqualRevenue(c);
    if (kind == "exponential") return BiasDistribution::ShiftedExponential(c, lambda);
    if (kind == "uniform") return BiasDistribution::Uniform(c, d);
    throw Error(ErrorCode::kInvalidInput,
                "distribution must be equal-revenue, exponential or uniform");
  }
};

void AddDistOptions(CLI::App* cmd, DistOptions& dist) {
  cmd->add_option("--dist", dist.kind,
                  "equal-revenue, exponential or uniform (support starts at c)");
  cmd->add_option("--d", dist.d, "upper end of the uniform support");
  cmd->add_option("--lambda", dist.lambda, "exponential rate");
}

Json WithClosedForm(const FanBneSolution& solution, const BiasDistribution& dist,
                    double reward) {
  Json out = BneSolutionToJson(solution);
  if (auto closed = ClosedFormP(dist, reward); closed && solution.competitors == 1) {
    out["closed_form_p"] = RoundSignificant(*closed);
  }
  out["distribution"] = dist.Describe();
  return out;
}

int Run(int argc, char** argv) {
  CLI::App app{"Equilibria of reward races between present-biased agents"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // validate
  std::string graph_path;
  bool full_report = false;
  auto* validate = app.add_subcommand("validate", "check and canonicalize a graph");
  validate->add_option("--graph", graph_path, "graph JSON file")->required();
  validate->add_flag("--report", full_report,
                     "wrap the graph with pruned vertices and warnings");
  validate->callback([&] {
    ValidationResult result = Validate(ReadRawGraphFile(graph_path));
    if (!full_report) {
      Emit(GraphToJson(result.graph));
      return;
    }
    Emit({{"graph", GraphToJson(result.graph)},
          {"pruned", result.pruned},
          {"warnings", result.warnings}});
  });

  // gen
  auto* gen = app.add_subcommand("gen", "emit a known graph family as JSON");
  gen->require_subcommand(1);
  int fan_n = 5;
  std::string fan_c = "2";
  auto* gen_fan = gen->add_subcommand("fan", "the n-fan");
  gen_fan->add_option("--n", fan_n, "number of spine vertices");
  gen_fan->add_option("--c", fan_c, "growth factor (exact, > 1)");
  gen_fan->callback([&] {
    Emit(GraphToJson(MakeFan({fan_n, ParseRational(fan_c)})));
  });
  for (const char* name : {"fig1", "fig7a", "fig7b"}) {
    gen->add_subcommand(name, std::string("the ") + name + " instance")
        ->callback([name] { Emit(GraphToJson(MakeNamedInstance(name).graph)); });
  }
  std::string mod_c = "2", mod_c2 = "5", mod_c3 = "26";
  auto* gen_mod = gen->add_subcommand("mod3fan", "three-exit fan with costs c, c2, c3");
  gen_mod->add_option("--c", mod_c);
  gen_mod->add_option("--c2", mod_c2);
  gen_mod->add_option("--c3", mod_c3);
  gen_mod->callback([&] {
    const Rational params[] = {ParseRational(mod_c), ParseRational(mod_c2),
                               ParseRational(mod_c3)};
    Emit(GraphToJson(MakeNamedInstance("modified_3fan", params).graph));
  });

  // Options shared by the pure-equilibrium commands.
  std::string bias = "1", reward = "0", path_text, opponent_text,
              tie_rule = "split";

  auto* simulate = app.add_subcommand("simulate", "naive biased traversal trace");
  simulate->add_option("--graph", graph_path)->required();
  simulate->add_option("--bias", bias);
  simulate->add_option("--opponent", opponent_text,
                       "opponent path (comma-separated ids or P0..Pn)");
  simulate->add_option("--reward", reward);
  simulate->add_option("--tie-rule", tie_rule, "split, both-full or none");
  simulate->callback([&] {
    const TaskGraph graph = LoadGraph(graph_path);
    const AgentConfig config{ParseRational(bias), ParseTieRule(tie_rule)};
    std::optional<PathRecord> opponent;
    if (!opponent_text.empty()) opponent = ParsePath(graph, opponent_text);
    const TraversalTrace trace = Traverse(
        graph, config, opponent ? &*opponent : nullptr, ParseRational(reward));
    Emit(TraceToJson(graph, trace));
  });

  auto* cost_ratio = app.add_subcommand("cost-ratio", "biased cost / optimal cost");
  cost_ratio->add_option("--graph", graph_path)->required();
  cost_ratio->add_option("--bias", bias);
  cost_ratio->callback([&] {
    const TaskGraph graph = LoadGraph(graph_path);
    const AgentConfig config{ParseRational(bias), TieRule::kSplit};
    const TraversalTrace trace = Traverse(graph, config, nullptr, 0);
    const Rational optimal = HopBoundedCheapest(graph, graph.source(), {}).value();
    Emit({{"ratio", FormatRational(CostRatio(graph, config))},
          {"biased_cost", FormatRational(trace.path.cost)},
          {"optimal_cost", FormatRational(optimal)},
          {"path", PathToJson(graph, trace.path)}});
  });

  auto* ne_check = app.add_subcommand("ne-check",
                                      "is both agents on PATH an equilibrium");
  ne_check->add_option("--graph", graph_path)->required();
  ne_check->add_option("--path", path_text)->required();
  ne_check->add_option("--reward", reward);
  ne_check->add_option("--bias", bias);
  ne_check->callback([&] {
    const TaskGraph graph = LoadGraph(graph_path);
    const NeCheckResult result = CheckSymmetricNe(
        graph, ParsePath(graph, path_text), ParseRational(reward),
        ParseRational(bias));
    Emit(NeCheckToJson(graph, result));
  });

  auto* min_reward = app.add_subcommand(
      "min-reward", "all rewards making PATH an equilibrium, and the smallest");
  min_reward->add_option("--graph", graph_path)->required();
  min_reward->add_option("--path", path_text)->required();
  min_reward->add_option("--bias", bias);
  min_reward->callback([&] {
    const TaskGraph graph = LoadGraph(graph_path);
    const MinRewardResult result =
        MinRewardForNe(graph, ParsePath(graph, path_text), ParseRational(bias));
    Emit({{"feasible", IntervalSetToJson(result.feasible)},
          {"minimum", result.minimum ? Json(FormatRational(*result.minimum))
                                     : Json()}});
    if (result.feasible.empty()) exit_code = kExitEmpty;
  });

  auto* unbiased = app.add_subcommand("unbiased-eq",
                                      "pure equilibria for unbiased agents");
  unbiased->add_option("--graph", graph_path)->required();
  unbiased->add_option("--reward", reward);
  unbiased->add_option("--tie-rule", tie_rule, "split, both-full or none");
  unbiased->callback([&] {
    const TaskGraph graph = LoadGraph(graph_path);
    Emit(LadderReportToJson(graph, ClassifyUnbiased(graph, ParseRational(reward),
                                                    ParseTieRule(tie_rule))));
  });

  int agents = 2;
  auto* dominant = app.add_subcommand(
      "dominant-reward", "reward securing an equilibrium on the dominant path");
  dominant->add_option("--graph", graph_path)->required();
  dominant->add_option("--bias", bias);
  dominant->add_option("--agents", agents, "total number of agents");
  dominant->callback([&] {
    const TaskGraph graph = LoadGraph(graph_path);
    try {
      const DominantPathReward result =
          ComputeDominantPathReward(graph, ParseRational(bias), agents);
      Emit({{"path", PathToJson(graph, result.path)},
            {"reward", FormatRational(result.reward)}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoDominantPath) throw;
      Emit({{"path", nullptr}, {"reward", nullptr}});
      exit_code = kExitEmpty;
    }
  });

  // Bayes-Nash commands (floating point).
  int n = 5, m = 1;
  double c = 2, r = 0;
  std::optional<double> per_agent_s;
  int64_t simulate_samples = 0;
  uint64_t seed = 1;
  DistOptions dist;

  auto* bne_fan = app.add_subcommand("bne-fan", "cutoff equilibrium on the n-fan");
  bne_fan->add_option("--n", n);
  bne_fan->add_option("--c", c);
  bne_fan->add_option("--r", r);
  AddDistOptions(bne_fan, dist);
  bne_fan->add_option("--simulate", simulate_samples,
                      "also play this many sampled agents against the solution");
  bne_fan->add_option("--seed", seed);
  bne_fan->callback([&] {
    const BiasDistribution d = dist.Make(c);
    const FanBneSolution solution = SolveFanBne(n, c, d, r);
    Json out = WithClosedForm(solution, d, r);
    if (simulate_samples > 0) {
      const PathFrequencies freq =
          MonteCarloFanBne(n, c, d, r, solution.cutoff, simulate_samples, seed);
      Json f = Json::array(), se = Json::array();
      for (double x : freq.frequency) f.push_back(RoundSignificant(x));
      for (double x : freq.std_error) se.push_back(RoundSignificant(x));
      out["simulation"] = {{"frequency", f}, {"std_error", se},
                           {"samples", freq.samples}, {"seed", seed}};
    }
    Emit(out);
  });

  auto* bne_multi = app.add_subcommand(
      "bne-fan-multi", "cutoff equilibrium with m competitors per agent");
  bne_multi->add_option("--n", n);
  bne_multi->add_option("--c", c);
  bne_multi->add_option("--m", m, "competitors faced by each agent");
  auto* r_opt = bne_multi->add_option("--r", r, "total reward");
  bne_multi->add_option("--per-agent-s", per_agent_s,
                        "reward per agent; total is s (m + 1)")
      ->excludes(r_opt);
  AddDistOptions(bne_multi, dist);
  bne_multi->callback([&] {
    const double total = per_agent_s ? *per_agent_s * (m + 1) : r;
    const BiasDistribution d = dist.Make(c);
    Json out = WithClosedForm(SolveFanBneMulti(n, c, d, total, m), d, total);
    out["reward"] = RoundSignificant(total);
    if (d.kind() == BiasDistribution::Kind::kShiftedEqualRevenue) {
      out["optimality_bound"] =
          RoundSignificant(EqualRevenueOptimalityBound(total / (m + 1)));
    }
    Emit(out);
  });

  double r_min = 0, r_max = 20;
  int steps = 41;
  std::string format = "json";
  auto* sweep = app.add_subcommand("bne-sweep", "fan equilibrium over a reward grid");
  sweep->add_option("--n", n);
  sweep->add_option("--c", c);
  sweep->add_option("--m", m, "competitors faced by each agent");
  sweep->add_option("--r-min", r_min);
  sweep->add_option("--r-max", r_max);
  sweep->add_option("--steps", steps)->check(CLI::Range(2, 100000));
  sweep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  AddDistOptions(sweep, dist);
  sweep->callback([&] {
    const BiasDistribution d = dist.Make(c);
    Json rows = Json::array();
    if (format == "csv") {
      std::cout.precision(12);
      std::cout << "r,p,valid,cost_ratio\n";
    }
    for (int i = 0; i < steps; ++i) {
      const double reward_i = r_min + (r_max - r_min) * i / (steps - 1);
      // One competitor: the two-agent solver and its validity threshold.
      const FanBneSolution s = m == 1 ? SolveFanBne(n, c, d, reward_i)
                                      : SolveFanBneMulti(n, c, d, reward_i, m);
      if (format == "csv") {
        std::cout << RoundSignificant(reward_i) << "," << RoundSignificant(s.p)
                  << "," << (s.valid ? "true" : "false") << ","
                  << RoundSignificant(s.expected_cost_ratio) << "\n";
      } else {
        rows.push_back({{"r", RoundSignificant(reward_i)},
                        {"p", RoundSignificant(s.p)},
                        {"valid", s.valid},
                        {"cost_ratio", RoundSignificant(s.expected_cost_ratio)}});
      }
    }
    if (format == "json") Emit(rows);
  });

  std::string suite;
  int count = 0;
  auto* verify = app.add_subcommand("verify", "randomized oracle agreement suite");
  verify->add_option("--suite", suite, "alg1, prop1, thm1, thm2 or bne")->required();
  verify->add_option("--seed", seed);
  verify->add_option("--count", count, "number of random instances");
  verify->callback([&] {
    const VerifyReport report = RunVerifySuite(suite, seed, count);
    Emit(report.ToJson());
    if (!report.passed()) exit_code = kExitVerifyFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kZeroOptimalCost ? kExitEmpty : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return exit_code;
}

}  // namespace
}  // namespace biasgraph

int main(int argc, char** argv) { return biasgraph::Run(argc, argv); }
