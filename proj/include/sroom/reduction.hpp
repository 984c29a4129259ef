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

// Hardness constructions.
//
// independent_set_to_sr turns an Independent Set instance (G, k) on a graph
// of maximum degree 3 into a narcissistic, single-peaked and tie-sensitive
// single-crossing Stable Roommates instance with incomplete preferences and
// ties that has a stable matching iff G has an independent set of size k.
//
// Layout of the 10n + 10k agents (vertex index i and slot j are 0-based,
// superscripts s are 1-based):
//   vertex agent   u_i^s (s = 1..10)  -> 10 i + s - 1
//   selector agent a_j^s (s = 1..5)   -> 10 n + 5 j + s - 1
//   selector agent b_j^s (s = 1..5)   -> 10 n + 5 k + 5 j + s - 1
// Every vertex contributes a ten-agent cycle; u_i^{2c} is linked to
// u_{i'}^{2c} when {i, i'} has colour c in a proper 4-edge-colouring. The
// selectors a_j^5 / b_j^5 must be matched into U^1 = {u_i^1} and
// U^10 = {u_i^10}, and a vertex whose u^10 takes a b-selector behaves as
// chosen.
//
// The betweenness constructions produce incomplete, tie-free detection
// instances that are single-peaked (resp. single-crossing) iff the
// Betweenness instance is solvable.

#ifndef SROOM_REDUCTION_HPP_
#define SROOM_REDUCTION_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sroom/edge_coloring.hpp"
#include "sroom/profile.hpp"
#include "sroom/structure.hpp"

namespace sroom {

// Five orders: a1: a1>a5>a2, a2: a2>a1>a3, a3: a3>a2>a4, a4: a4>a3>a5,
// a5: a5>(X)>a4>a1 with X one tie group. Throws kInvalidArgument if X is
// empty or overlaps the five ids.
std::vector<PreferenceOrder> selector_gadget(const std::array<AgentId, 5>& a,
                                             std::span<const AgentId> x);

// Ten orders:
//   x1: x1 > x10 > [A] > x2       x2: x2 > x1 > r2 > x3
//   x3: x3 > x2 > x4              x4: x4 > x3 > r4 > x5
//   x5: x5 > x4 > x6              x6: x6 > x5 > r6 > x7
//   x7: x7 > x6 > x8              x8: x8 > x7 > r8 > x9
//   x9: x9 > x8 > x10             x10: x10 > x9 > [B] > x1
// [A], [B] are strict in the given order; absent hooks are left out.
std::vector<PreferenceOrder> vertex_gadget(
    const std::array<AgentId, 10>& x, std::span<const AgentId> a,
    std::span<const AgentId> b,
    const std::array<std::optional<AgentId>, 4>& hooks);

enum class RoleKind { kVertex, kSelectorA, kSelectorB };

struct AgentRole {
  RoleKind kind;
  // Vertex index for vertex agents, slot j for selectors (0-based).
  std::size_t index;
  // Superscript: 1..10 for vertex agents, 1..5 for selectors.
  int slot;
  bool operator==(const AgentRole&) const = default;
};

struct ReducedInstance {
  Graph graph;
  std::size_t k = 0;
  EdgeColoring coloring;
  Profile profile;
  WitnessOrder sp_witness;
  std::vector<AgentRole> roles;  // indexed by agent id
};

AgentId vertex_agent(std::size_t n, std::size_t vertex, int slot);
AgentId selector_a_agent(std::size_t n, std::size_t k, std::size_t j, int slot);
AgentId selector_b_agent(std::size_t n, std::size_t k, std::size_t j, int slot);

// Throws kDegreeTooHigh, kKOutOfRange (k < 1 or k > n).
ReducedInstance independent_set_to_sr(const Graph& graph, std::size_t k);

// The matching built from a size-k independent set: the j-th chosen vertex
// (ascending) takes a_j^5 at u^1 and b_j^5 at u^10 and pairs
// {u^{2c}, u^{2c+1}} for c = 1..4; every other vertex pairs
// {u^{2c-1}, u^{2c}}; selectors pair {s1,s2}, {s3,s4}.
// Throws kWrongSize, kNotIndependent, kInvalidArgument.
Matching independent_set_to_matching(const ReducedInstance& instance,
                                     std::span<const Vertex> independent_set);

// {u_i : u_i^10 is matched to some b_j^5}. Throws kUnstableMatching when the
// input is not stable, kInternalInvariantViolation when the result is not an
// independent set of size k.
std::vector<Vertex> sr_matching_to_independent_set(const ReducedInstance& instance,
                                                   const Matching& matching);

struct CrossingCaseVerdict {
  bool holds = true;
  std::optional<AgentPair> pair;
  explicit operator bool() const { return holds; }
};

// For each pair p of agents: either all agents ranking both members of p
// order them the same way, or exactly the two members of p rank both.
// This per-pair condition makes a profile tie-sensitive single-crossing
// w.r.t. every axis.
CrossingCaseVerdict check_pairwise_crossing_cases(const Profile& profile);

struct BetweennessInstance {
  std::size_t universe = 0;
  std::vector<std::array<std::size_t, 3>> triples;
};

// Throws kInvalidArgument for out-of-range or repeated elements in a triple.
void validate_betweenness(const BetweennessInstance& instance);

// n + 2m agents: elements first, then a_1..a_m, then a'_1..a'_m, where
// a_j: y > x > z and a'_j: y > z > x for t_j = (x, y, z), and each element
// ranks the triple agents containing it by a_1 > .. > a_m > a'_1 > .. > a'_m.
Profile betweenness_to_sp_instance(const BetweennessInstance& instance);

// n + 3m agents: elements first, then a_j, b_j, c_j for each triple. The
// triple agents rank the triple's elements by ascending index; an element
// ranks the blocks T_j by descending j, and inside T_j uses a>b>c, b>a>c or
// c>b>a depending on whether it is the first, middle or last element.
Profile betweenness_to_sc_instance(const BetweennessInstance& instance);

}  // namespace sroom

#endif  // SROOM_REDUCTION_HPP_
