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

#ifndef BIASGRAPH_VERIFY_H_
#define BIASGRAPH_VERIFY_H_

// Randomized agreement checks between the analytic code and the oracles.
// Each suite returns a report with counterexample dumps for failures.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biasgraph/json_io.h"
#include "biasgraph/pure_eq.h"
#include "biasgraph/rational.h"

namespace biasgraph {

struct VerifyReport {
  std::string suite;
  int64_t cases = 0;
  int64_t mismatches = 0;
  // At most kMaxDumps counterexamples.
  Json failures = Json::array();

  static constexpr int kMaxDumps = 10;

  bool passed() const { return mismatches == 0; }
  void Fail(Json dump);
  Json ToJson() const;
};

// Probe rewards for a feasible set: every breakpoint, midpoints between
// neighbours, breakpoints +- 1/10^6, one point past the last breakpoint, and
// `random_count` random multiples of 1/64 up to twice the last breakpoint.
std::vector<Rational> ProbeRewards(const MinRewardResult& result,
                                   int random_count, std::mt19937_64& rng);

// Feasible-set membership vs the reward-sweep oracle, for every source-sink
// path of `graphs` random DAGs and every bias.
VerifyReport VerifyAlg1(uint64_t seed, int graphs,
                        std::span<const Rational> biases, int max_vertices = 8);

// Ladder classification vs the brute-force best-response table, all three
// tie rules.
VerifyReport VerifyProp1(uint64_t seed, int ladders, int max_size = 6);

// Fan thresholds: NE checks and feasible sets on sampled (n, c, b).
VerifyReport VerifyThm1(uint64_t seed, int fans);

// Dominant-path reward on random DAGs that have a dominant path.
VerifyReport VerifyThm2(uint64_t seed, int graphs,
                        std::span<const Rational> biases, int max_vertices = 10);

// Fixed-point solver vs closed forms, Monte-Carlo self-consistency, d(p, m)
// and E[1/(N+1)] identities, and the two-path interval property.
VerifyReport VerifyBne(uint64_t seed, int two_path_samples = 10000);

// Dispatches "alg1", "prop1", "thm1", "thm2" or "bne" with default sizes;
// count <= 0 keeps the default. Throws kInvalidInput for other names.
VerifyReport RunVerifySuite(std::string_view suite, uint64_t seed, int count);

}  // namespace biasgraph

#endif  // BIASGRAPH_VERIFY_H_
