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

#include "biasgraph/verify.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "biasgraph/bne.h"
#include "biasgraph/error.h"
#include "biasgraph/generators.h"
#include "biasgraph/oracle.h"

namespace biasgraph {
namespace {

constexpr double kFixedPointTolerance = 1e-9;
constexpr double kLambertTolerance = 1e-8;

Rational RandomMultiple(std::mt19937_64& rng, const Rational& upper,
                        int denominator) {
  const long long steps = static_cast<long long>(
      std::ceil(ToDouble(upper) * denominator));
  const long long k =
      std::uniform_int_distribution<long long>(0, std::max(1LL, steps))(rng);
  return Rational(k, denominator);
}

// Cheapest cost per exact length, straight from enumeration.
std::vector<Rational> LengthMinima(const TaskGraph& graph) {
  std::map<int, Rational> best;
  for (const PathRecord& p : EnumeratePaths(graph, graph.source(), 64)) {
    auto [it, inserted] = best.emplace(p.length(), p.cost);
    if (!inserted) it->second = std::min(it->second, p.cost);
  }
  std::vector<Rational> out;
  for (const auto& [length, cost] : best) out.push_back(cost);
  return out;
}

const char* TieRuleName(TieRule rule) {
  switch (rule) {
    case TieRule::kSplit:
      return "split";
    case TieRule::kBothFull:
      return "both-full";
    case TieRule::kNone:
      return "none";
  }
  return "?";
}

}  // namespace

void VerifyReport::Fail(Json dump) {
  ++mismatches;
  if (static_cast<int>(failures.size()) < kMaxDumps) {
    failures.push_back(std::move(dump));
  }
}

Json VerifyReport::ToJson() const {
  return {{"suite", suite},
          {"cases", cases},
          {"mismatches", mismatches},
          {"passed", passed()},
          {"failures", failures}};
}

std::vector<Rational> ProbeRewards(const MinRewardResult& result,
                                   int random_count, std::mt19937_64& rng) {
  std::set<Rational> points(result.breakpoints.begin(),
                            result.breakpoints.end());
  points.insert(Rational(0));
  const std::vector<Rational> sorted(points.begin(), points.end());
  const Rational nudge(1, 1000000);
  std::set<Rational> probes;
  for (size_t i = 0; i < sorted.size(); ++i) {
    probes.insert(sorted[i]);
    probes.insert(sorted[i] + nudge);
    if (sorted[i] >= nudge) probes.insert(sorted[i] - nudge);
    if (i + 1 < sorted.size()) probes.insert((sorted[i] + sorted[i + 1]) / 2);
  }
  const Rational last = sorted.back();
  probes.insert(last + 1);
  const Rational upper = std::max(Rational(4), Rational(2 * last));
  for (int i = 0; i < random_count; ++i) {
    probes.insert(RandomMultiple(rng, upper, 64));
  }
  return {probes.begin(), probes.end()};
}

VerifyReport VerifyAlg1(uint64_t seed, int graphs,
                        std::span<const Rational> biases, int max_vertices) {
  VerifyReport report;
  report.suite = "alg1";
  std::mt19937_64 rng(seed);
  RandomDagOptions options;
  options.max_vertices = max_vertices;
  for (int g = 0; g < graphs; ++g) {
    const TaskGraph graph = RandomLayeredDag(rng, options);
    for (const PathRecord& path : EnumeratePaths(graph)) {
      for (const Rational& bias : biases) {
        const MinRewardResult result = MinRewardForNe(graph, path, bias);
        const std::vector<Rational> probes = ProbeRewards(result, 20, rng);
        const std::vector<Rational> accepted =
            RewardSweepNe(graph, path, bias, probes);
        const std::set<Rational> oracle(accepted.begin(), accepted.end());
        if (result.minimum != result.feasible.Min()) {
          report.Fail({{"graph", GraphToJson(graph)},
                       {"path", PathNames(graph, path)},
                       {"bias", FormatRational(bias)},
                       {"problem", "minimum disagrees with the feasible set"}});
        }
        for (const Rational& r : probes) {
          ++report.cases;
          const bool analytic = result.feasible.Contains(r);
          if (analytic == (oracle.count(r) > 0)) continue;
          report.Fail({{"graph", GraphToJson(graph)},
                       {"path", PathNames(graph, path)},
                       {"bias", FormatRational(bias)},
                       {"reward", FormatRational(r)},
                       {"feasible", IntervalSetToJson(result.feasible)},
                       {"analytic", analytic},
                       {"oracle", !analytic}});
        }
      }
    }
  }
  return report;
}

VerifyReport VerifyProp1(uint64_t seed, int ladders, int max_size) {
  VerifyReport report;
  report.suite = "prop1";
  std::mt19937_64 rng(seed);
  for (int l = 0; l < ladders; ++l) {
    const TaskGraph graph = RandomLadderGraph(rng, max_size);
    const std::vector<Rational> minima = LengthMinima(graph);
    // Random rewards plus the knife edges where some cost gap equals r/2 or r.
    std::set<Rational> rewards = {Rational(0), RandomMultiple(rng, 16, 2)};
    std::uniform_int_distribution<size_t> index(0, minima.size() - 1);
    const size_t i = index(rng), j = index(rng);
    const Rational gap = abs(minima[i] - minima[j]);
    rewards.insert(2 * gap);
    rewards.insert(gap);
    rewards.insert(minima.front() - minima.back() + 1);
    for (const Rational& reward : rewards) {
      for (TieRule rule : {TieRule::kSplit, TieRule::kBothFull, TieRule::kNone}) {
        ++report.cases;
        const UnbiasedEqReport analytic = ClassifyUnbiased(graph, reward, rule);
        const LadderTable brute = BruteLadderTable(graph, reward, rule);
        std::vector<std::pair<int, int>> analytic_asym;
        if (analytic.asymmetric) analytic_asym.push_back(*analytic.asymmetric);
        std::string problem;
        if (analytic.ladder.paths != brute.paths) {
          problem = "ladders differ";
        } else if (analytic.symmetric != brute.Symmetric()) {
          problem = "symmetric equilibria differ";
        } else if (analytic_asym != brute.Asymmetric()) {
          problem = "asymmetric equilibria differ";
        } else if (rule == TieRule::kSplit) {
          const auto& paths = brute.paths;
          const bool knife_edge = paths.size() == 2 &&
                                  paths[0].cost - paths[1].cost == reward / 2;
          if (analytic.symmetric.size() > 2 ||
              (!knife_edge && brute.equilibria.size() > 2)) {
            problem = "more than two pure equilibria";
          }
        }
        if (problem.empty()) continue;
        Json table = Json::array();
        for (const auto& [a, b] : brute.equilibria) table.push_back({a, b});
        report.Fail({{"graph", GraphToJson(graph)},
                     {"reward", FormatRational(reward)},
                     {"tie_rule", TieRuleName(rule)},
                     {"problem", problem},
                     {"analytic", LadderReportToJson(graph, analytic)},
                     {"brute_equilibria", std::move(table)}});
      }
    }
  }
  return report;
}

VerifyReport VerifyThm1(uint64_t seed, int fans) {
  VerifyReport report;
  report.suite = "thm1";
  std::mt19937_64 rng(seed);
  const Rational growths[] = {Rational(5, 4), Rational(3, 2), Rational(2),
                              Rational(5, 2), Rational(3)};
  const Rational excesses[] = {Rational(1, 8), Rational(1, 2), Rational(1),
                               Rational(3)};
  for (int f = 0; f < fans; ++f) {
    FanSpec spec;
    spec.n = std::uniform_int_distribution<int>(1, 6)(rng);
    spec.c = growths[std::uniform_int_distribution<int>(0, 4)(rng)];
    const Rational bias =
        spec.c + excesses[std::uniform_int_distribution<int>(0, 3)(rng)];
    const TaskGraph fan = MakeFan(spec);
    Rational scale = 1;
    for (int i = 1; i < spec.n; ++i) scale *= spec.c;
    const Rational low = 2 * (bias - spec.c);
    const Rational high = low * scale;
    auto dump = [&](const std::string& problem) {
      return Json{{"n", spec.n},
                  {"c", FormatRational(spec.c)},
                  {"bias", FormatRational(bias)},
                  {"problem", problem}};
    };

    ++report.cases;
    const FanThresholds thresholds = FanNeThresholds(spec, bias);
    if (thresholds.optimal_min_reward != low ||
        thresholds.longest_max_reward != high) {
      report.Fail(dump("closed-form thresholds"));
    }
    for (int i = 0; i <= spec.n; ++i) {
      ++report.cases;
      IntervalSet expected;
      if (i == 0) expected = IntervalSet::FromIntervals({{low, std::nullopt}});
      if (i == spec.n) {
        expected = expected.Union(IntervalSet::FromIntervals({{0, high}}));
      }
      const IntervalSet feasible =
          MinRewardForNe(fan, FanPath(fan, i), bias).feasible;
      if (feasible != expected) {
        Json d = dump("feasible set of P" + std::to_string(i));
        d["feasible"] = IntervalSetToJson(feasible);
        report.Fail(std::move(d));
      }
    }

    std::set<Rational> rewards = {Rational(0), low, high, low + Rational(1, 100),
                                  high + Rational(1, 100)};
    if (low >= Rational(1, 100)) rewards.insert(low - Rational(1, 100));
    if (high >= Rational(1, 100)) rewards.insert(high - Rational(1, 100));
    for (int k = 0; k < 4; ++k) rewards.insert(RandomMultiple(rng, 2 * high + 4, 8));
    const NaiveAgent agent(fan, AgentConfig{bias, TieRule::kSplit});
    for (const Rational& r : rewards) {
      for (int i = 0; i <= spec.n; ++i) {
        ++report.cases;
        const PathRecord path = FanPath(fan, i);
        const bool expected = (i == 0 && r >= low) || (i == spec.n && r <= high);
        const bool analytic = CheckSymmetricNe(agent, path, r).is_equilibrium;
        const bool brute = BruteCheckNe(fan, path, r, bias);
        if (analytic != expected || brute != expected) {
          Json d = dump("NE check on P" + std::to_string(i));
          d["reward"] = FormatRational(r);
          d["expected"] = expected;
          d["analytic"] = analytic;
          d["oracle"] = brute;
          report.Fail(std::move(d));
        }
      }
    }
  }
  return report;
}

VerifyReport VerifyThm2(uint64_t seed, int graphs,
                        std::span<const Rational> biases, int max_vertices) {
  VerifyReport report;
  report.suite = "thm2";
  std::mt19937_64 rng(seed);
  RandomDagOptions options;
  options.max_vertices = max_vertices;
  for (int g = 0; g < graphs; ++g) {
    const TaskGraph graph = RandomDominantPathDag(rng, options);
    const std::optional<PathRecord> brute_path = BruteDominantPath(graph);
    Rational max_edge = 0;
    for (size_t i = 1; i < brute_path->vertices.size(); ++i) {
      max_edge = std::max(max_edge, *graph.EdgeCost(brute_path->vertices[i - 1],
                                                    brute_path->vertices[i]));
    }
    for (const Rational& bias : biases) {
      ++report.cases;
      const DominantPathReward analytic = ComputeDominantPathReward(graph, bias);
      const Rational expected_reward = 2 * bias * max_edge;
      const bool ne =
          CheckSymmetricNe(graph, analytic.path, analytic.reward, bias)
              .is_equilibrium;
      const bool brute_ne =
          BruteCheckNe(graph, *brute_path, expected_reward, bias);
      if (analytic.path == *brute_path && analytic.reward == expected_reward &&
          ne && brute_ne) {
        continue;
      }
      report.Fail({{"graph", GraphToJson(graph)},
                   {"bias", FormatRational(bias)},
                   {"dominant_path", PathNames(graph, analytic.path)},
                   {"oracle_dominant_path", PathNames(graph, *brute_path)},
                   {"reward", FormatRational(analytic.reward)},
                   {"equilibrium", ne},
                   {"oracle_equilibrium", brute_ne}});
    }
  }
  return report;
}

VerifyReport VerifyBne(uint64_t seed, int two_path_samples) {
  VerifyReport report;
  report.suite = "bne";
  std::mt19937_64 rng(seed);
  auto check = [&](bool ok, Json dump) {
    ++report.cases;
    if (!ok) report.Fail(std::move(dump));
  };

  // Solver vs closed forms.
  std::vector<std::pair<BiasDistribution, double>> cases;
  for (double c : {1.0, 1.5, 2.0}) {
    for (double r : {0.0, 1.0, 2.0, 2.5, 4.0, 10.0, 100.0}) {
      cases.emplace_back(BiasDistribution::ShiftedEqualRevenue(c), r);
    }
  }
  for (auto [c, d] : {std::pair{1.0, 3.0}, {2.0, 3.0}, {1.0, 1.5}, {1.5, 4.0}}) {
    for (double r : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 8.0}) {
      cases.emplace_back(BiasDistribution::Uniform(c, d), r);
    }
  }
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double r : {1.0, 3.0, 5.0, 10.0, 20.0}) {
      cases.emplace_back(BiasDistribution::ShiftedExponential(2.0, lambda), r);
    }
  }
  for (const auto& [dist, r] : cases) {
    const FanBneSolution s = SolveFanBne(5, dist.lower(), dist, r);
    const double closed = *ClosedFormP(dist, r);
    const double tolerance =
        dist.kind() == BiasDistribution::Kind::kShiftedExponential
            ? kLambertTolerance
            : kFixedPointTolerance;
    check(std::abs(s.p - closed) <= tolerance && s.residual <= kFixedPointTolerance,
          {{"distribution", dist.Describe()},
           {"reward", r},
           {"solver_p", s.p},
           {"closed_form_p", closed},
           {"residual", s.residual}});
    if (dist.kind() == BiasDistribution::Kind::kShiftedExponential) {
      const double a = dist.lambda() * r / 2;
      const bool bound_ok = (2 * a < 2 || closed >= 1 - std::exp(1.0 - a)) &&
                            (2 * a < 3 || closed >= 1 - 2 * std::exp(-a));
      check(bound_ok, {{"distribution", dist.Describe()},
                       {"reward", r},
                       {"problem", "exponential tail bound"},
                       {"closed_form_p", closed}});
    }
  }

  // Self-consistency by simulation.
  const std::pair<BiasDistribution, double> simulated[] = {
      {BiasDistribution::ShiftedEqualRevenue(2), 4.0},
      {BiasDistribution::Uniform(1, 3), 4.0},
      {BiasDistribution::ShiftedExponential(2, 1), 10.0}};
  for (const auto& [dist, r] : simulated) {
    const int n = 5;
    const FanBneSolution s = SolveFanBne(n, dist.lower(), dist, r);
    const PathFrequencies freq =
        MonteCarloFanBne(n, dist.lower(), dist, r, s.cutoff, 100000, rng());
    const double se = std::sqrt(s.p * (1 - s.p) / freq.samples);
    bool interior_empty = true;
    for (int i = 1; i < n; ++i) interior_empty &= freq.frequency[i] == 0;
    check(s.valid && std::abs(freq.frequency[0] - s.p) <= 3 * se + 1e-12 &&
              interior_empty,
          {{"distribution", dist.Describe()},
           {"reward", r},
           {"p", s.p},
           {"empirical", freq.frequency}});
  }

  // d(p, m) identities.
  for (int i = 1; i <= 100; ++i) {
    const double p = i / 100.0;
    check(std::abs(RewardShareFactor(p, 1) - p / 2) <= 1e-15,
          {{"problem", "d(p, 1) != p/2"}, {"p", p}});
  }
  for (int m : {1, 2, 3, 5, 10, 50, 100, 1000}) {
    for (double p = 1e-12; p <= 1; p *= 1.5) {
      check(RewardShareFactor(p, m) > 0,
            {{"problem", "d(p, m) <= 0"}, {"p", p}, {"m", m}});
    }
  }
  for (auto [p, m] : {std::pair{0.5, 1}, {0.1, 5}, {0.9, 3}, {0.3, 20}}) {
    const double mc = MonteCarloInverseShare(p, m, 1000000, rng());
    const double exact = ExpectedInverseShare(p, m);
    check(std::abs(mc - exact) <= 1e-3,
          {{"problem", "E[1/(N+1)]"}, {"p", p}, {"m", m}, {"monte_carlo", mc},
           {"closed_form", exact}});
  }

  // Many agents under equal revenue: bounded and nondecreasing in m.
  const auto equal_revenue = BiasDistribution::ShiftedEqualRevenue(2);
  for (double s : {1.0, 4.0, 16.0}) {
    double previous = 0;
    for (int m : {1, 2, 5, 20, 100}) {
      const FanBneSolution sol =
          SolveFanBneMulti(5, 2, equal_revenue, s * (m + 1), m);
      const double bound = EqualRevenueOptimalityBound(s);
      check(sol.p <= bound + 1e-9 && sol.p >= previous - 1e-12 &&
                sol.residual <= kFixedPointTolerance,
            {{"problem", "many-agent equal revenue"}, {"s", s}, {"m", m},
             {"p", sol.p}, {"bound", bound}});
      previous = sol.p;
    }
  }
  for (double r : {0.0, 3.0, 4.0, 10.0}) {
    const double two = SolveFanBne(5, 2, equal_revenue, r).p;
    const double multi = SolveFanBneMulti(5, 2, equal_revenue, r, 1).p;
    check(std::abs(two - multi) <= 1e-10,
          {{"problem", "m = 1 differs from the two-agent solver"}, {"reward", r}});
  }

  // Two-path deviations: one of the intervals is always nonempty.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < two_path_samples; ++i) {
    const double c = 1 + 3 * unit(rng) + 1e-9;
    const double c2 = c * c * (1 + 2 * unit(rng)) + 1e-9;
    const double c3 = c2 * c2 * (1 + 2 * unit(rng)) + 1e-9;
    const double r = 50 * unit(rng);
    const double p = std::clamp(unit(rng), 1e-9, 1 - 1e-9);
    if (!(1 < c && c * c < c2 && c2 * c2 < c3)) continue;
    const TwoPathIntervals iv = TwoPathBneIntervals(c, c2, c3, r, p);
    check(iv.takes_p1.nonempty() || iv.takes_p2.nonempty(),
          {{"c", c}, {"c2", c2}, {"c3", c3}, {"reward", r}, {"p", p}});
  }
  return report;
}

VerifyReport RunVerifySuite(std::string_view suite, uint64_t seed, int count) {
  const Rational all_biases[] = {Rational(3, 2), Rational(2), Rational(5),
                                 Rational(10)};
  const Rational thm2_biases[] = {Rational(3, 2), Rational(2), Rational(5)};
  auto or_default = [count](int fallback) { return count > 0 ? count : fallback; };
  if (suite == "alg1") return VerifyAlg1(seed, or_default(300), all_biases);
  if (suite == "prop1") return VerifyProp1(seed, or_default(200));
  if (suite == "thm1") return VerifyThm1(seed, or_default(100));
  if (suite == "thm2") return VerifyThm2(seed, or_default(100), thm2_biases);
  if (suite == "bne") return VerifyBne(seed, or_default(10000));
  throw Error(ErrorCode::kInvalidInput,
              "unknown suite \"" + std::string(suite) +
                  "\"; expected alg1, prop1, thm1, thm2 or bne");
}

}  // namespace biasgraph
