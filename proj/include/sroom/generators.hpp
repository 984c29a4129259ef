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

// Seeded instance generators (std::mt19937_64). Same config, same output
// for a given build.

#ifndef SROOM_GENERATORS_HPP_
#define SROOM_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sroom/edge_coloring.hpp"
#include "sroom/profile.hpp"
#include "sroom/structure.hpp"

namespace sroom {

struct GeneratorConfig {
  std::size_t n_agents = 2;  // even, positive
  bool allow_ties = false;
  double tie_probability = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;
  // Fixed distinct positions, one per agent; random when absent.
  std::optional<std::vector<std::int64_t>> positions;
};

struct GeneratedProfile {
  Profile profile;
  WitnessOrder axis;  // agents sorted by position
  std::vector<std::int64_t> positions;
};

// Every agent ranks all agents by distance to its own position. Two agents
// at equal distance (one left, one right) are tied with probability
// tie_probability when allow_ties, otherwise the left one comes first.
// Random positions are distinct draws from [0, 2n). Throws kInvalidArgument
// for a bad config; the output is checked single-peaked w.r.t. axis.
GeneratedProfile gen_narcissistic_sp(const GeneratorConfig& config);

// Visits all vertex pairs in a shuffled order and keeps each with
// probability p unless an endpoint already has degree 3.
Graph gen_degree3_graph(std::size_t n, double edge_probability, std::uint64_t seed);

}  // namespace sroom

#endif  // SROOM_GENERATORS_HPP_
