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

#ifndef BIASGRAPH_ORACLE_H_
#define BIASGRAPH_ORACLE_H_

// Brute-force reference implementations. Nothing here uses the hop-cost
// tables, the interval machinery or the closed-form fixed-point solvers; the
// point is to have a second, literal computation to compare against.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "biasgraph/agent.h"
#include "biasgraph/bne.h"
#include "biasgraph/rational.h"
#include "biasgraph/task_graph.h"

namespace biasgraph {

// Vertex limit for exhaustive enumeration: 14, or BIASGRAPH_MAX_BRUTE.
int MaxBruteVertices();

// Every path from `from` to the sink in lexicographic vertex order. Throws
// kTooLarge when the graph has more than `max_vertices` vertices (default
// MaxBruteVertices()).
std::vector<PathRecord> EnumeratePaths(const TaskGraph& graph, int from,
                                       std::optional<int> max_vertices = {});
std::vector<PathRecord> EnumeratePaths(const TaskGraph& graph);

// b c(u, next) + min over every continuation P from next of c(P) - R, with R
// computed from the total length prefix + 1 + |P|.
Rational BrutePerceivedMin(const TaskGraph& graph, const TraversalState& state,
                           int next, const Rational& bias,
                           const std::optional<Competition>& competition,
                           TieRule rule = TieRule::kSplit);

// Naive traversal driven by BrutePerceivedMin. Ties prefer the reference
// successor while still on `reference`, then the smallest vertex index.
PathRecord BruteTraverse(const TaskGraph& graph, const Rational& bias,
                         const PathRecord* opponent, const Rational& reward,
                         const PathRecord* reference = nullptr);

bool BruteCheckNe(const TaskGraph& graph, const PathRecord& path,
                  const Rational& reward, const Rational& bias);

// The candidates at which `path` is a symmetric equilibrium.
std::vector<Rational> RewardSweepNe(const TaskGraph& graph,
                                    const PathRecord& path, const Rational& bias,
                                    std::span<const Rational> candidates);

// Cheapest path that is the unique quickest, by enumeration.
std::optional<PathRecord> BruteDominantPath(const TaskGraph& graph);

struct LadderTable {
  // Ladder built by enumeration: per-length cheapest, then dominance filter.
  std::vector<PathRecord> paths;
  // Pure profiles (i, j) where each side best-responds to the other.
  std::vector<std::pair<int, int>> equilibria;

  std::vector<int> Symmetric() const;
  std::vector<std::pair<int, int>> Asymmetric() const;  // i < j only
};
// Ladder graphs are sparse, so the vertex guard here is 64.
LadderTable BruteLadderTable(const TaskGraph& graph, const Rational& reward,
                             TieRule rule);

struct PathFrequencies {
  std::vector<double> frequency;
  std::vector<double> std_error;
  int64_t samples = 0;
};

// Samples biases from `dist` and walks the fan against an opponent that takes
// P0 when its own bias is at most `cutoff` and Pn otherwise. Each step
// compares expected perceived costs of every remaining exit directly.
PathFrequencies MonteCarloFanBne(int n, double c, const BiasDistribution& dist,
                                 double reward, double cutoff, int64_t samples,
                                 uint64_t seed);

// Sample mean of 1 / (N + 1) for N ~ Bin(m, p).
double MonteCarloInverseShare(double p, int m, int64_t samples, uint64_t seed);

// Random instance families.
struct RandomDagOptions {
  int min_layers = 3;  // counting the source and sink layers
  int max_layers = 5;
  int max_width = 3;
  int max_vertices = 8;
  double extra_edge_probability = 0.35;
};
TaskGraph RandomLayeredDag(std::mt19937_64& rng,
                           const RandomDagOptions& options = {});

// Rejection-samples RandomLayeredDag until BruteDominantPath succeeds.
TaskGraph RandomDominantPathDag(std::mt19937_64& rng,
                                const RandomDagOptions& options = {});

// Parallel source->sink chains with strictly increasing lengths and strictly
// decreasing costs; the whole cost of a chain sits on its first edge.
TaskGraph RandomLadderGraph(std::mt19937_64& rng, int max_size);

Rational RandomGridCost(std::mt19937_64& rng);

}  // namespace biasgraph

#endif  // BIASGRAPH_ORACLE_H_
