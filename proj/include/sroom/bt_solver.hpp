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

// Greedy stable matching for complete narcissistic profiles that are
// single-peaked or single-crossing, ties allowed: repeatedly match two agents
// that are each other's most acceptable agents and delete them.

#ifndef SROOM_BT_SOLVER_HPP_
#define SROOM_BT_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "sroom/profile.hpp"

namespace sroom {

struct SolveRound {
  AgentPair pair;
  // Agents left after removing `pair`.
  std::size_t remaining;
  bool operator==(const SolveRound&) const = default;
};

struct SolveTrace {
  std::vector<SolveRound> rounds;
};

struct SolveResult {
  Matching matching;
  SolveTrace trace;
};

// Lexicographically smallest {x,y}, x < y, with y in M_x and x in M_y.
std::optional<AgentPair> find_mutual_most_acceptable_pair(const Profile& profile);

// Throws kNotComplete, kNotNarcissistic, or kNoMutualPair (the agents still
// unmatched are attached to the error) when the greedy step gets stuck. The
// witness axis is not checked here; see structure.hpp. Runs in O(n^2).
SolveResult bt_solve(const Profile& profile);

}  // namespace sroom

#endif  // SROOM_BT_SOLVER_HPP_
