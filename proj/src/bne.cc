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

#include "biasgraph/bne.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "biasgraph/error.h"

namespace biasgraph {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kScanSteps = 1000;
constexpr int kMaxBisections = 200;
constexpr double kBisectionWidth = 1e-15;

void Require(bool condition, const char* message) {
  if (!condition) throw Error(ErrorCode::kInvalidParameters, message);
}

double Bisect(const std::function<double(double)>& g, double lo, double hi) {
  // Invariant: g(lo) >= 0 > g(hi).
  for (int i = 0; i < kMaxBisections && hi - lo > kBisectionWidth; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Largest root of g on (0, 1], where g(p) = F(cutoff(p)) - p. g(0) = 0 always
// and g(1) <= 0, so we walk down from 1 until g turns nonnegative.
std::optional<double> LargestFixedPoint(const std::function<double(double)>& g) {
  double hi = 1.0;
  if (g(hi) >= 0) return 1.0;
  for (int j = 1; j < kScanSteps; ++j) {
    const double p = 1.0 - static_cast<double>(j) / kScanSteps;
    if (g(p) >= 0) return Bisect(g, p, hi);
    hi = p;
  }
  // Roots crowding the trivial one at 0.
  for (double p = hi / 10; p > 1e-15; p /= 10) {
    if (g(p) > 0) return Bisect(g, p, hi);
    hi = p;
  }
  return std::nullopt;
}

double Power(double base, int exponent) {
  double result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

void CheckShift(int n, double c, const BiasDistribution& dist, double reward) {
  Require(n >= 1, "fan needs n >= 1");
  Require(c >= 1, "fan growth factor must be at least 1");
  Require(reward >= 0, "reward must be nonnegative");
  Require(std::abs(dist.lower() - c) <= 1e-12 * std::max(1.0, c),
          "bias distribution must be supported from the fan's c");
}

FanBneSolution Finish(int n, double c, const BiasDistribution& dist,
                      std::optional<double> root,
                      const std::function<double(double)>& excess,
                      double threshold, int competitors) {
  FanBneSolution solution;
  solution.competitors = competitors;
  solution.nontrivial = root.has_value();
  solution.p = root.value_or(0.0);
  solution.cutoff = c + excess(solution.p);
  solution.validity_threshold = threshold;
  solution.valid = solution.nontrivial && solution.p > threshold;
  solution.expected_cost_ratio =
      solution.p + (1 - solution.p) * Power(c, n);
  solution.residual =
      std::abs(dist.CdfExcess(excess(solution.p)) - solution.p);
  return solution;
}

// Taylor expansion of 1 - (1-p)^m (1 + p m) around p = 0; the coefficient of
// p^j is (-1)^(j+1) (C(m, j) - m C(m, j-1)).
double ShareNumeratorSeries(double p, int m) {
  double sum = 0;
  double binom_prev = m;  // C(m, 1)
  double p_power = p;
  for (int j = 2; j <= m + 1; ++j) {
    const double binom = binom_prev * (m - j + 1) / j;
    p_power *= p;
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;
    const double term = sign * (binom - m * binom_prev) * p_power;
    sum += term;
    binom_prev = binom;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

BiasDistribution BiasDistribution::Uniform(double c, double d) {
  Require(c < d, "uniform distribution needs c < d");
  BiasDistribution dist;
  dist.kind_ = Kind::kUniform;
  dist.lower_ = c;
  dist.upper_ = d;
  return dist;
}

BiasDistribution BiasDistribution::ShiftedExponential(double c, double lambda) {
  Require(lambda > 0, "exponential rate must be positive");
  BiasDistribution dist;
  dist.kind_ = Kind::kShiftedExponential;
  dist.lower_ = c;
  dist.upper_ = kInf;
  dist.lambda_ = lambda;
  return dist;
}

BiasDistribution BiasDistribution::ShiftedEqualRevenue(double c) {
  BiasDistribution dist;
  dist.kind_ = Kind::kShiftedEqualRevenue;
  dist.lower_ = c;
  dist.upper_ = kInf;
  return dist;
}

BiasDistribution BiasDistribution::Custom(double lower,
                                          std::function<double(double)> cdf,
                                          std::function<double(double)> quantile) {
  Require(static_cast<bool>(cdf) && static_cast<bool>(quantile),
          "custom distribution needs a CDF and a quantile function");
  BiasDistribution dist;
  dist.kind_ = Kind::kCustom;
  dist.lower_ = lower;
  dist.upper_ = kInf;
  dist.cdf_ = std::move(cdf);
  dist.quantile_ = std::move(quantile);
  return dist;
}

double BiasDistribution::Cdf(double z) const {
  switch (kind_) {
    case Kind::kUniform:
      if (z <= lower_) return 0;
      if (z >= upper_) return 1;
      return (z - lower_) / (upper_ - lower_);
    case Kind::kShiftedExponential:
      if (z <= lower_) return 0;
      return -std::expm1(-lambda_ * (z - lower_));
    case Kind::kShiftedEqualRevenue:
      if (z <= lower_) return 0;
      return (z - lower_) / (z - lower_ + 1);
    case Kind::kCustom:
      return cdf_(z);
  }
  return 0;
}

double BiasDistribution::CdfExcess(double x) const {
  if (x <= 0) return 0;
  switch (kind_) {
    case Kind::kUniform:
      return std::min(1.0, x / (upper_ - lower_));
    case Kind::kShiftedExponential:
      return -std::expm1(-lambda_ * x);
    case Kind::kShiftedEqualRevenue:
      return x / (x + 1);
    case Kind::kCustom:
      return cdf_(lower_ + x);
  }
  return 0;
}

double BiasDistribution::Quantile(double u) const {
  switch (kind_) {
    case Kind::kUniform:
      return lower_ + u * (upper_ - lower_);
    case Kind::kShiftedExponential:
      return lower_ - std::log1p(-u) / lambda_;
    case Kind::kShiftedEqualRevenue:
      return lower_ - 1 + 1 / (1 - u);
    case Kind::kCustom:
      return quantile_(u);
  }
  return lower_;
}

double BiasDistribution::Sample(std::mt19937_64& rng) const {
  return Quantile(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

std::string BiasDistribution::Describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kUniform:
      out << "uniform(" << lower_ << ", " << upper_ << ")";
      break;
    case Kind::kShiftedExponential:
      out << "shifted-exponential(c=" << lower_ << ", lambda=" << lambda_ << ")";
      break;
    case Kind::kShiftedEqualRevenue:
      out << "shifted-equal-revenue(c=" << lower_ << ")";
      break;
    case Kind::kCustom:
      out << "custom(lower=" << lower_ << ")";
      break;
  }
  return out.str();
}

FanOpponentProfile FanOpponentProfile::TwoPoint(int n, double p) {
  FanOpponentProfile profile;
  profile.probabilities.assign(n + 1, 0.0);
  profile.probabilities.front() = p;
  profile.probabilities.back() += 1 - p;
  return profile;
}

void FanOpponentProfile::Check() const {
  double total = 0;
  for (double q : probabilities) {
    Require(q >= 0, "opponent probabilities must be nonnegative");
    total += q;
  }
  Require(probabilities.size() >= 2 && std::abs(total - 1) <= 1e-12,
          "opponent profile must sum to 1 over P0..Pn");
}

int FanAgentExit(int n, double c, double bias, std::span<const double> opponent,
                 double reward) {
  Require(static_cast<int>(opponent.size()) == n + 1,
          "opponent profile must cover P0..Pn");
  double scale = 1;  // c^i
  for (int i = 0; i < n; ++i) {
    const double tie_mass = opponent[i] + opponent[i + 1];
    if (reward / 2 * tie_mass >= scale * (bias - c)) return i;
    scale *= c;
  }
  return n;
}

PathRecord FanAgentPath(const FanSpec& spec, double bias,
                        const FanOpponentProfile& opponent, double reward) {
  opponent.Check();
  const int exit = FanAgentExit(spec.n, ToDouble(spec.c), bias,
                                opponent.probabilities, reward);
  return FanPath(MakeFan(spec), exit);
}

FanBneSolution SolveFanBne(int n, double c, const BiasDistribution& dist,
                           double reward) {
  CheckShift(n, c, dist, reward);
  // Cutoff bias is c + excess(p).
  auto excess = [&](double p) { return reward * p / 2; };
  auto g = [&](double p) { return dist.CdfExcess(excess(p)) - p; };
  const double threshold = 1 / (Power(c, n - 1) + 1);
  return Finish(n, c, dist, LargestFixedPoint(g), excess, threshold, 1);
}

FanBneSolution SolveFanBne(const FanSpec& spec, const BiasDistribution& dist,
                           double reward) {
  return SolveFanBne(spec.n, ToDouble(spec.c), dist, reward);
}

FanBneSolution SolveFanBneMulti(int n, double c, const BiasDistribution& dist,
                                double reward, int m) {
  CheckShift(n, c, dist, reward);
  Require(m >= 1, "need at least one competitor");
  auto excess = [&](double p) { return reward * RewardShareFactor(p, m); };
  auto g = [&](double p) { return dist.CdfExcess(excess(p)) - p; };
  const double threshold =
      std::log(1 + m + (m + 1) / (2 * Power(c, n - 1))) / m;
  return Finish(n, c, dist, LargestFixedPoint(g), excess, threshold, m);
}

std::optional<double> ClosedFormP(const BiasDistribution& dist, double reward) {
  switch (dist.kind()) {
    case BiasDistribution::Kind::kShiftedEqualRevenue:
      return reward >= 2 ? (reward - 2) / reward : 0.0;
    case BiasDistribution::Kind::kUniform:
      return reward >= 2 * (dist.upper() - dist.lower()) ? 1.0 : 0.0;
    case BiasDistribution::Kind::kShiftedExponential: {
      // 1 - e^{-a p} = p with a = lambda r / 2 has a root in (0, 1) only for
      // a > 1; it is 1 + W0(-a e^{-a}) / a.
      const double a = dist.lambda() * reward / 2;
      if (a <= 1) return 0.0;
      return 1 + LambertW0(-a * std::exp(-a)) / a;
    }
    case BiasDistribution::Kind::kCustom:
      return std::nullopt;
  }
  return std::nullopt;
}

double LambertW0(double z) {
  const double branch_point = -std::exp(-1.0);
  Require(z >= branch_point - 1e-15, "LambertW0 is defined for z >= -1/e");
  if (z == 0) return 0;
  if (z - branch_point < 1e-16) return -1;
  double w;
  if (z < -0.25) {
    // Series around the branch point.
    const double q = std::sqrt(2 * (std::exp(1.0) * z + 1));
    w = -1 + q - q * q / 3 + 11.0 / 72 * q * q * q;
  } else if (z < 1) {
    w = z * (1 - z);
  } else {
    w = std::log1p(z);
    if (z > 3) w = std::log(z) - std::log(std::log(z));
  }
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double step = f / (ew * (w + 1) - (w + 2) * f / (2 * w + 2));
    w -= step;
    if (std::abs(step) <= 1e-14 * (1 + std::abs(w))) break;
  }
  return w;
}

double RewardShareFactor(double p, int m) {
  Require(m >= 1, "d(p, m) needs m >= 1");
  Require(p <= 1, "d(p, m) needs p <= 1");
  if (p <= 0) return 0;
  if (p == 1) return 1.0 / (m + 1);
  double numerator;
  if (p * m < 0.05) {
    numerator = ShareNumeratorSeries(p, m);
  } else {
    numerator = -std::expm1(m * std::log1p(-p) + std::log1p(p * m));
  }
  return numerator / (p * (m + 1));
}

double ExpectedInverseShare(double p, int m) {
  Require(m >= 0, "E[1/(N+1)] needs m >= 0");
  Require(p > 0 && p <= 1, "E[1/(N+1)] needs p in (0, 1]");
  if (p == 1) return 1.0 / (m + 1);
  return -std::expm1((m + 1) * std::log1p(-p)) / (p * (m + 1));
}

double EqualRevenueOptimalityBound(double per_agent_reward) {
  const double s = per_agent_reward;
  return (std::sqrt(4 * s + s * s) - s) / 2;
}

TwoPathIntervals TwoPathBneIntervals(double c, double c2, double c3,
                                     double reward, double p) {
  Require(1 < c && c * c < c2 && c2 * c2 < c3,
          "need 1 < c < c^2 < c2 < c2^2 < c3");
  Require(reward >= 0, "reward must be nonnegative");
  Require(p > 0 && p < 1, "p must lie in (0, 1)");
  TwoPathIntervals out;
  out.takes_p1 = {c + reward * p / 2, c2 / c};
  out.takes_p2 = {c2 / c, (2 * c3 + reward * (1 - p)) / (2 * c2)};
  return out;
}

}  // namespace biasgraph
