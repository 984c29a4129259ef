// Copyright 2026 The sroom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sroom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "sroom/error.hpp"

namespace sroom {

GeneratedProfile gen_narcissistic_sp(const GeneratorConfig& config) {
  const std::size_t n = config.n_agents;
  if (n == 0 || n % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "n_agents must be even and positive, got " + std::to_string(n));
  }
  if (!(config.tie_probability >= 0.0 && config.tie_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tie_probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(config.seed);

  std::vector<std::int64_t> pos;
  if (config.positions) {
    pos = *config.positions;
    if (pos.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "need one position per agent");
    }
    auto sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kInvalidArgument, "positions must be distinct");
    }
  } else {
    std::vector<std::int64_t> slots(2 * n);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    pos.assign(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(n));
  }

  std::vector<AgentId> axis(n);
  std::iota(axis.begin(), axis.end(), AgentId{0});
  std::sort(axis.begin(), axis.end(),
            [&](AgentId a, AgentId b) { return pos[a] < pos[b]; });

  std::bernoulli_distribution tie(config.allow_ties ? config.tie_probability : 0.0);
  RawProfile raw(n);
  std::vector<AgentId> by_distance(n);
  for (AgentId i = 0; i < n; ++i) {
    std::iota(by_distance.begin(), by_distance.end(), AgentId{0});
    // Distance first, then left before right.
    auto key = [&](AgentId a) {
      const std::int64_t d = pos[a] - pos[i];
      return std::pair{d < 0 ? -d : d, pos[a]};
    };
    std::sort(by_distance.begin(), by_distance.end(),
              [&](AgentId a, AgentId b) { return key(a) < key(b); });
    auto& groups = raw[i];
    for (std::size_t t = 0; t < n; ++t) {
      const AgentId a = by_distance[t];
      const bool same_distance =
          t > 0 && key(a).first == key(by_distance[t - 1]).first;
      if (same_distance && tie(rng)) {
        groups.back().push_back(a);
      } else {
        groups.push_back({a});
      }
    }
  }

  GeneratedProfile out{validate_profile(std::move(raw)), WitnessOrder(std::move(axis)),
                       std::move(pos)};
  if (!is_single_peaked_wrt(out.profile, out.axis)) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "generated profile is not single-peaked w.r.t. its axis");
  }
  return out;
}

Graph gen_degree3_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge_probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> candidates;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) candidates.emplace_back(a, b);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::bernoulli_distribution keep(edge_probability);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  for (const auto& [a, b] : candidates) {
    const bool take = keep(rng);
    if (!take || degree[a] >= 3 || degree[b] >= 3) continue;
    ++degree[a];
    ++degree[b];
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

}  // namespace sroom
