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

#ifndef BIASGRAPH_BNE_H_
#define BIASGRAPH_BNE_H_

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "biasgraph/generators.h"
#include "biasgraph/task_graph.h"

namespace biasgraph {

// Distribution of present-bias values. The three shipped kinds are shifted so
// their support starts at c; kCustom wraps a caller-supplied CDF/quantile.
class BiasDistribution {
 public:
  enum class Kind { kUniform, kShiftedExponential, kShiftedEqualRevenue, kCustom };

  // F(z) = (z - c) / (d - c) on [c, d].
  static BiasDistribution Uniform(double c, double d);
  // F(z) = 1 - exp(-lambda (z - c)).
  static BiasDistribution ShiftedExponential(double c, double lambda);
  // F(z) = 1 - 1 / (z - c + 1) on [c, inf).
  static BiasDistribution ShiftedEqualRevenue(double c);
  static BiasDistribution Custom(double lower,
                                 std::function<double(double)> cdf,
                                 std::function<double(double)> quantile);

  Kind kind() const { return kind_; }
  double lower() const { return lower_; }
  // Upper end of the uniform support; infinity for the other kinds.
  double upper() const { return upper_; }
  double lambda() const { return lambda_; }

  double Cdf(double z) const;
  // F(lower + x) for x >= 0, written to avoid cancellation when x is tiny.
  double CdfExcess(double x) const;
  double Quantile(double u) const;
  double Sample(std::mt19937_64& rng) const;

  std::string Describe() const;

 private:
  BiasDistribution() = default;

  Kind kind_ = Kind::kUniform;
  double lower_ = 1;
  double upper_ = 2;
  double lambda_ = 1;
  std::function<double(double)> cdf_;
  std::function<double(double)> quantile_;
};

// Probability vector over fan paths P0..Pn.
struct FanOpponentProfile {
  std::vector<double> probabilities;

  // P0 with probability p, Pn otherwise.
  static FanOpponentProfile TwoPoint(int n, double p);
  void Check() const;
};

// Exit index chosen by a naive agent with `bias` on the n-fan with growth c,
// facing an opponent drawn from `opponent` (expected rewards). At v_i the
// agent exits iff (r/2) Pr[opponent on P_i or P_i+1] >= c^i (b - c); it always
// exits at v_n.
int FanAgentExit(int n, double c, double bias, std::span<const double> opponent,
                 double reward);
PathRecord FanAgentPath(const FanSpec& spec, double bias,
                        const FanOpponentProfile& opponent, double reward);

// Cutoff-strategy Bayes-Nash equilibrium on the fan: agents with bias at most
// `cutoff` take P0, everyone else Pn.
struct FanBneSolution {
  double p = 0;
  double cutoff = 0;
  double validity_threshold = 0;
  bool valid = false;
  // False when only the trivial fixed point p = 0 exists.
  bool nontrivial = false;
  double expected_cost_ratio = 0;
  double residual = 0;
  // Number of opponents each agent faces.
  int competitors = 1;
};

// Largest p in (0, 1] with F(r p / 2 + c) = p, found by scanning down from 1
// for a sign change and bisecting. The solution is valid when
// p > 1 / (c^(n-1) + 1). `dist` must be supported from c.
FanBneSolution SolveFanBne(int n, double c, const BiasDistribution& dist,
                           double reward);
FanBneSolution SolveFanBne(const FanSpec& spec, const BiasDistribution& dist,
                           double reward);

// m + 1 competitors: fixed point of F(r d(p, m) + c) = p, valid when
// p > log(1 + m + (m + 1) / (2 c^(n-1))) / m.
FanBneSolution SolveFanBneMulti(int n, double c, const BiasDistribution& dist,
                                double reward, int m);

// Closed forms for the shipped kinds; nullopt for custom distributions.
std::optional<double> ClosedFormP(const BiasDistribution& dist, double reward);

// Principal branch of the Lambert W function on [-1/e, inf), via Halley
// iteration.
double LambertW0(double z);

// d(p, m) = (1 - (1-p)^m (1 + p m)) / (p (m + 1)); d(p, 1) = p / 2.
double RewardShareFactor(double p, int m);

// E[1 / (N + 1)] for N ~ Bin(m, p): (1 - (1-p)^(m+1)) / (p (m + 1)).
double ExpectedInverseShare(double p, int m);

// Upper bound on the probability of optimal behaviour under the shifted
// equal-revenue distribution at per-agent reward s, for any number of agents.
double EqualRevenueOptimalityBound(double per_agent_reward);

struct BiasInterval {
  double lo = 0;
  double hi = 0;

  bool nonempty() const { return lo <= hi; }
};

// Bias ranges on the modified 3-fan (exits c, c2, c3) in which an agent facing
// a P0/P3 opponent mix (p on P0) would take P1 or P2 instead.
struct TwoPathIntervals {
  BiasInterval takes_p1;
  BiasInterval takes_p2;
};

TwoPathIntervals TwoPathBneIntervals(double c, double c2, double c3,
                                     double reward, double p);

}  // namespace biasgraph

#endif  // BIASGRAPH_BNE_H_
