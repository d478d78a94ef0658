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

#include "biasgraph/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "biasgraph/error.h"

namespace biasgraph {
namespace {

constexpr int kDefaultMaxBrute = 14;
constexpr int kLadderMaxVertices = 64;
constexpr int kDominantPathAttempts = 100000;

void Dfs(const TaskGraph& graph, std::vector<int>& stack, Rational& cost,
         std::vector<PathRecord>& out) {
  const int u = stack.back();
  if (u == graph.sink()) {
    out.push_back(PathRecord{stack, cost});
    return;
  }
  for (const Edge& e : graph.out_edges(u)) {
    stack.push_back(e.to);
    cost += e.cost;
    Dfs(graph, stack, cost, out);
    cost -= e.cost;
    stack.pop_back();
  }
}

Rational Payoff(int length, int opponent_length, const Rational& reward,
                TieRule rule) {
  if (length < opponent_length) return reward;
  if (length > opponent_length) return 0;
  switch (rule) {
    case TieRule::kSplit:
      return reward / 2;
    case TieRule::kBothFull:
      return reward;
    case TieRule::kNone:
      return 0;
  }
  return 0;
}

// Enumerated continuations from every vertex, compressed to the cheapest cost
// per exact length (the minimum of c(P) - R only depends on those).
class BruteModel {
 public:
  explicit BruteModel(const TaskGraph& graph) : graph_(&graph) {
    by_length_.resize(graph.num_vertices());
    for (int v = 0; v < graph.num_vertices(); ++v) {
      for (const PathRecord& p : EnumeratePaths(graph, v)) {
        auto [it, inserted] = by_length_[v].emplace(p.length(), p.cost);
        if (!inserted && p.cost < it->second) it->second = p.cost;
      }
    }
  }

  Rational Perceived(const PathRecord& prefix, int next, const Rational& bias,
                     const std::optional<Competition>& competition,
                     TieRule rule) const {
    const int u = prefix.back();
    const std::optional<Rational> edge = graph_->EdgeCost(u, next);
    if (!edge) throw Error(ErrorCode::kInvalidPath, "not an edge");
    std::optional<Rational> best;
    for (const auto& [length, cost] : by_length_[next]) {
      Rational value = cost;
      if (competition) {
        const int total = prefix.length() + 1 + length;
        value -= Payoff(total, competition->opponent_length, competition->reward,
                        rule);
      }
      if (!best || value < *best) best = value;
    }
    return bias * *edge + *best;
  }

  PathRecord Traverse(const Rational& bias, const PathRecord* opponent,
                      const Rational& reward, const PathRecord* reference) const {
    std::optional<Competition> competition;
    if (opponent != nullptr) competition = Competition{opponent->length(), reward};
    PathRecord walked{{graph_->source()}, 0};
    while (walked.back() != graph_->sink()) {
      const int u = walked.back();
      std::optional<int> preferred;
      if (reference != nullptr &&
          walked.vertices.size() < reference->vertices.size() &&
          std::equal(walked.vertices.begin(), walked.vertices.end(),
                     reference->vertices.begin())) {
        preferred = reference->vertices[walked.vertices.size()];
      }
      int chosen = -1;
      Rational chosen_value;
      for (const Edge& e : graph_->out_edges(u)) {
        const Rational value =
            Perceived(walked, e.to, bias, competition, TieRule::kSplit);
        const bool better =
            chosen < 0 || value < chosen_value ||
            (value == chosen_value && preferred && e.to == *preferred);
        if (better) {
          chosen = e.to;
          chosen_value = value;
        }
      }
      walked.cost += *graph_->EdgeCost(u, chosen);
      walked.vertices.push_back(chosen);
    }
    return walked;
  }

 private:
  const TaskGraph* graph_;
  std::vector<std::map<int, Rational>> by_length_;
};

std::string IndexedName(const std::string& stem, int i) {
  return stem + std::to_string(i);
}

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

int MaxBruteVertices() {
  if (const char* env = std::getenv("BIASGRAPH_MAX_BRUTE")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return kDefaultMaxBrute;
}

std::vector<PathRecord> EnumeratePaths(const TaskGraph& graph, int from,
                                       std::optional<int> max_vertices) {
  const int limit = max_vertices.value_or(MaxBruteVertices());
  if (graph.num_vertices() > limit) {
    throw Error(ErrorCode::kTooLarge,
                "graph has " + std::to_string(graph.num_vertices()) +
                    " vertices; enumeration limit is " + std::to_string(limit));
  }
  std::vector<PathRecord> out;
  std::vector<int> stack{from};
  Rational cost = 0;
  Dfs(graph, stack, cost, out);
  return out;
}

std::vector<PathRecord> EnumeratePaths(const TaskGraph& graph) {
  return EnumeratePaths(graph, graph.source());
}

Rational BrutePerceivedMin(const TaskGraph& graph, const TraversalState& state,
                           int next, const Rational& bias,
                           const std::optional<Competition>& competition,
                           TieRule rule) {
  const std::optional<Rational> edge = graph.EdgeCost(state.vertex(), next);
  if (!edge) throw Error(ErrorCode::kInvalidPath, "not an edge");
  std::optional<Rational> best;
  for (const PathRecord& p : EnumeratePaths(graph, next)) {
    Rational value = p.cost;
    if (competition) {
      const int total = state.steps_taken() + 1 + p.length();
      value -= Payoff(total, competition->opponent_length, competition->reward,
                      rule);
    }
    if (!best || value < *best) best = value;
  }
  return bias * *edge + *best;
}

PathRecord BruteTraverse(const TaskGraph& graph, const Rational& bias,
                         const PathRecord* opponent, const Rational& reward,
                         const PathRecord* reference) {
  return BruteModel(graph).Traverse(bias, opponent, reward, reference);
}

bool BruteCheckNe(const TaskGraph& graph, const PathRecord& path,
                  const Rational& reward, const Rational& bias) {
  return BruteTraverse(graph, bias, &path, reward, &path).vertices ==
         path.vertices;
}

std::vector<Rational> RewardSweepNe(const TaskGraph& graph,
                                    const PathRecord& path, const Rational& bias,
                                    std::span<const Rational> candidates) {
  const BruteModel model(graph);
  std::vector<Rational> accepted;
  for (const Rational& r : candidates) {
    if (model.Traverse(bias, &path, r, &path).vertices == path.vertices) {
      accepted.push_back(r);
    }
  }
  return accepted;
}

std::optional<PathRecord> BruteDominantPath(const TaskGraph& graph) {
  const std::vector<PathRecord> paths = EnumeratePaths(graph);
  int shortest = paths.front().length();
  Rational cheapest = paths.front().cost;
  for (const PathRecord& p : paths) {
    shortest = std::min(shortest, p.length());
    cheapest = std::min(cheapest, p.cost);
  }
  const PathRecord* quickest = nullptr;
  for (const PathRecord& p : paths) {
    if (p.length() != shortest) continue;
    if (quickest != nullptr) return std::nullopt;
    quickest = &p;
  }
  if (quickest->cost != cheapest) return std::nullopt;
  return *quickest;
}

std::vector<int> LadderTable::Symmetric() const {
  std::vector<int> out;
  for (const auto& [i, j] : equilibria) {
    if (i == j) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> LadderTable::Asymmetric() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : equilibria) {
    if (i < j) out.emplace_back(i, j);
  }
  return out;
}

LadderTable BruteLadderTable(const TaskGraph& graph, const Rational& reward,
                             TieRule rule) {
  // Cheapest path of each length; enumeration order settles cost ties.
  std::map<int, PathRecord> per_length;
  for (PathRecord& p :
       EnumeratePaths(graph, graph.source(), kLadderMaxVertices)) {
    auto it = per_length.find(p.length());
    if (it == per_length.end()) {
      per_length.emplace(p.length(), std::move(p));
    } else if (p.cost < it->second.cost) {
      it->second = std::move(p);
    }
  }
  auto dominates = [&](const PathRecord& a, const PathRecord& b) {
    return b.cost >= a.cost + reward ||
           (a.length() <= b.length() && a.cost <= b.cost);
  };
  LadderTable table;
  for (const auto& [length, candidate] : per_length) {
    bool removed = false;
    for (const auto& [other_length, other] : per_length) {
      if (other_length == length || !dominates(other, candidate)) continue;
      if (dominates(candidate, other) && length < other_length) continue;
      removed = true;
      break;
    }
    if (!removed) table.paths.push_back(candidate);
  }

  const int n = static_cast<int>(table.paths.size());
  auto utility = [&](int mine, int theirs) {
    return Payoff(table.paths[mine].length(), table.paths[theirs].length(),
                  reward, rule) -
           table.paths[mine].cost;
  };
  auto best_response = [&](int mine, int theirs) {
    for (int alt = 0; alt < n; ++alt) {
      if (utility(alt, theirs) > utility(mine, theirs)) return false;
    }
    return true;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (best_response(i, j) && best_response(j, i)) {
        table.equilibria.emplace_back(i, j);
      }
    }
  }
  return table;
}

PathFrequencies MonteCarloFanBne(int n, double c, const BiasDistribution& dist,
                                 double reward, double cutoff, int64_t samples,
                                 uint64_t seed) {
  if (n < 1 || samples < 1) {
    throw Error(ErrorCode::kInvalidParameters, "need n >= 1 and samples >= 1");
  }
  const double p_direct = dist.Cdf(cutoff);
  // Opponent finishes after 1 edge (P0) or n + 1 edges (Pn).
  auto expected_reward = [&](int length) {
    double value = 0;
    const std::pair<int, double> outcomes[] = {{1, p_direct},
                                               {n + 1, 1 - p_direct}};
    for (const auto& [opponent_length, prob] : outcomes) {
      if (length < opponent_length) value += reward * prob;
      if (length == opponent_length) value += reward / 2 * prob;
    }
    return value;
  };
  // Exit i leaves from s (i = 0) or v_i; it costs c^i and has i + 1 edges.
  std::vector<double> exit_cost(n + 1), exit_net(n + 1);
  for (int i = 0; i <= n; ++i) {
    exit_cost[i] = std::pow(c, i);
    exit_net[i] = exit_cost[i] - expected_reward(i + 1);
  }

  std::mt19937_64 rng(seed);
  std::vector<int64_t> counts(n + 1, 0);
  for (int64_t s = 0; s < samples; ++s) {
    const double bias = dist.Sample(rng);
    int exit = n;
    for (int i = 0; i < n; ++i) {
      const double leave = bias * exit_cost[i] - expected_reward(i + 1);
      double stay = exit_net[i + 1];
      for (int j = i + 2; j <= n; ++j) stay = std::min(stay, exit_net[j]);
      if (leave <= stay) {
        exit = i;
        break;
      }
    }
    ++counts[exit];
  }
  PathFrequencies out;
  out.samples = samples;
  for (int64_t count : counts) {
    const double f = static_cast<double>(count) / samples;
    out.frequency.push_back(f);
    out.std_error.push_back(std::sqrt(f * (1 - f) / samples));
  }
  return out;
}

double MonteCarloInverseShare(double p, int m, int64_t samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::binomial_distribution<int> draw(m, p);
  double sum = 0;
  for (int64_t s = 0; s < samples; ++s) sum += 1.0 / (draw(rng) + 1);
  return sum / samples;
}

Rational RandomGridCost(std::mt19937_64& rng) {
  static const Rational kGrid[] = {Rational(0), Rational(1, 2), Rational(1),
                                   Rational(2), Rational(5),    Rational(8)};
  return kGrid[UniformInt(rng, 0, 5)];
}

TaskGraph RandomLayeredDag(std::mt19937_64& rng, const RandomDagOptions& options) {
  if (options.min_layers < 2 || options.max_layers < options.min_layers ||
      options.max_width < 1 || options.max_vertices < 3) {
    throw Error(ErrorCode::kInvalidParameters, "bad random DAG options");
  }
  const int layers = UniformInt(rng, options.min_layers, options.max_layers);
  int budget = options.max_vertices - 2;
  std::vector<std::vector<std::string>> layer_names(layers);
  layer_names.front() = {"s"};
  layer_names.back() = {"t"};
  RawGraph raw;
  raw.source = "s";
  raw.sink = "t";
  raw.vertices.push_back("s");
  int next_id = 1;
  for (int l = 1; l + 1 < layers && budget > 0; ++l) {
    const int remaining_layers = layers - 2 - l;
    const int cap = std::max(1, std::min(options.max_width,
                                         budget - remaining_layers));
    const int width = UniformInt(rng, 1, std::min(cap, budget));
    for (int w = 0; w < width; ++w) {
      layer_names[l].push_back(IndexedName("n", next_id++));
      raw.vertices.push_back(layer_names[l].back());
    }
    budget -= width;
  }
  raw.vertices.push_back("t");
  std::erase_if(layer_names, [](const auto& names) { return names.empty(); });

  std::set<std::pair<std::string, std::string>> present;
  auto add = [&](const std::string& from, const std::string& to) {
    if (present.emplace(from, to).second) {
      raw.edges.push_back({from, to, RandomGridCost(rng)});
    }
  };
  auto pick = [&](const std::vector<std::string>& names) -> const std::string& {
    return names[UniformInt(rng, 0, static_cast<int>(names.size()) - 1)];
  };
  for (size_t l = 0; l + 1 < layer_names.size(); ++l) {
    const auto& here = layer_names[l];
    const auto& there = layer_names[l + 1];
    for (const std::string& w : there) add(pick(here), w);
    for (const std::string& u : here) {
      const bool has_out = std::any_of(there.begin(), there.end(),
                                       [&](const std::string& w) {
                                         return present.count({u, w}) > 0;
                                       });
      if (!has_out) add(u, pick(there));
    }
  }
  std::bernoulli_distribution extra(options.extra_edge_probability);
  for (size_t l = 0; l < layer_names.size(); ++l) {
    for (size_t m = l + 1; m < layer_names.size(); ++m) {
      for (const std::string& u : layer_names[l]) {
        for (const std::string& w : layer_names[m]) {
          if (!present.count({u, w}) && extra(rng)) add(u, w);
        }
      }
    }
  }
  return Validate(raw).graph;
}

TaskGraph RandomDominantPathDag(std::mt19937_64& rng,
                                const RandomDagOptions& options) {
  for (int attempt = 0; attempt < kDominantPathAttempts; ++attempt) {
    TaskGraph graph = RandomLayeredDag(rng, options);
    if (BruteDominantPath(graph)) return graph;
  }
  throw Error(ErrorCode::kNoDominantPath,
              "rejection sampling found no graph with a dominant path");
}

TaskGraph RandomLadderGraph(std::mt19937_64& rng, int max_size) {
  if (max_size < 1) {
    throw Error(ErrorCode::kInvalidParameters, "ladder size must be positive");
  }
  const int size = UniformInt(rng, 1, max_size);
  std::vector<int> lengths(size + 2), costs(13);
  for (int i = 0; i < static_cast<int>(lengths.size()); ++i) lengths[i] = i + 1;
  for (int i = 0; i < static_cast<int>(costs.size()); ++i) costs[i] = i;
  std::shuffle(lengths.begin(), lengths.end(), rng);
  std::shuffle(costs.begin(), costs.end(), rng);
  lengths.resize(size);
  costs.resize(size);
  std::sort(lengths.begin(), lengths.end());
  std::sort(costs.begin(), costs.end(), std::greater<>());

  RawGraph raw;
  raw.source = "s";
  raw.sink = "t";
  raw.vertices.push_back("s");
  for (int i = 0; i < size; ++i) {
    std::string prev = "s";
    for (int k = 1; k < lengths[i]; ++k) {
      std::string name = "p" + std::to_string(i + 1) + "_" + std::to_string(k);
      raw.vertices.push_back(name);
      raw.edges.push_back({prev, name, k == 1 ? Rational(costs[i]) : Rational(0)});
      prev = std::move(name);
    }
    raw.edges.push_back({prev, "t", lengths[i] == 1 ? Rational(costs[i]) : Rational(0)});
  }
  raw.vertices.push_back("t");
  return Validate(raw).graph;
}

}  // namespace biasgraph
