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

// Agents, weak-order preferences, profiles, acceptability graphs and
// matchings.
//
// Agents are dense 0-based ids. A preference order is a list of tie groups,
// best first. An agent may list itself (narcissistic profiles require it);
// self entries are ignored by everything that concerns partners: the
// acceptability graph, most acceptable sets and blocking pairs.

#ifndef SROOM_PROFILE_HPP_
#define SROOM_PROFILE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sroom {

using AgentId = std::uint32_t;
inline constexpr AgentId kNoAgent = std::numeric_limits<AgentId>::max();

// Unordered pair of distinct agents, stored with first < second.
using AgentPair = std::pair<AgentId, AgentId>;

inline AgentPair make_pair_sorted(AgentId a, AgentId b) {
  return a < b ? AgentPair{a, b} : AgentPair{b, a};
}

using TieGroup = std::vector<AgentId>;
// One entry per agent: that agent's tie groups, best first.
using RawProfile = std::vector<std::vector<TieGroup>>;

class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  // Members of each group are sorted ascending (canonical form).
  PreferenceOrder(AgentId owner, std::vector<TieGroup> groups);

  AgentId owner() const { return owner_; }
  const std::vector<TieGroup>& groups() const { return groups_; }
  std::size_t acceptable_count() const;

  bool operator==(const PreferenceOrder&) const = default;

 private:
  AgentId owner_ = 0;
  std::vector<TieGroup> groups_;
};

enum class ValidationMode {
  kStrict,
  // Accepts agents nobody finds acceptable. Used for structure-detection
  // instances and for sub-profiles, never needed for matching queries.
  kAllowIsolated,
};

class Profile {
 public:
  // Sentinel rank of an agent outside the acceptable set.
  static constexpr int kUnranked = -1;

  Profile() = default;

  std::size_t size() const { return orders_.size(); }
  bool empty() const { return orders_.empty(); }

  const PreferenceOrder& order(AgentId i) const { return orders_[i]; }
  const std::vector<PreferenceOrder>& orders() const { return orders_; }

  // Index of the tie group of `x` in the order of `i`, or kUnranked.
  int rank(AgentId i, AgentId x) const { return rank_[i * orders_.size() + x]; }
  bool accepts(AgentId i, AgentId x) const { return rank(i, x) != kUnranked; }

  // The orders as plain nested vectors.
  RawProfile raw() const;

  bool operator==(const Profile& other) const { return orders_ == other.orders_; }

 private:
  friend Profile validate_profile(RawProfile raw, ValidationMode mode);
  friend Profile make_profile_unchecked(std::vector<PreferenceOrder> orders);

  std::vector<PreferenceOrder> orders_;
  std::vector<int> rank_;
};

// Builds a Profile, throwing Error for the first violated invariant:
// kInvalidAgent (id out of range), kEmptyTieGroup, kDuplicateInOrder(i, x),
// kAsymmetricAcceptability(i, j), kIsolatedAgent(i).
// An odd agent count is legal; see profile_warnings.
Profile validate_profile(RawProfile raw,
                         ValidationMode mode = ValidationMode::kStrict);

// Skips validation. Orders must already be well-formed (in-range, no
// duplicates); used internally for sub-profiles.
Profile make_profile_unchecked(std::vector<PreferenceOrder> orders);

// Non-fatal observations, e.g. an odd number of agents.
std::vector<std::string> profile_warnings(const Profile& profile);

enum class Comparison { kStrictlyBetter, kTied, kStrictlyWorse, kIncomparable };

// How agent i compares x against y.
Comparison compare(const Profile& profile, AgentId i, AgentId x, AgentId y);

// Top tie group of i after removing i itself. Ascending ids.
std::vector<AgentId> most_acceptable_set(const Profile& profile, AgentId i);

struct AcceptabilityGraph {
  std::size_t vertex_count = 0;
  // Sorted by (min id, max id).
  std::vector<AgentPair> edges;
  std::vector<std::vector<AgentId>> adjacency;

  bool has_edge(AgentId a, AgentId b) const;
  bool operator==(const AcceptabilityGraph&) const = default;
};

AcceptabilityGraph acceptability_graph(const Profile& profile);

struct Restriction {
  Profile profile;
  // kept[new_id] = old_id, ascending.
  std::vector<AgentId> kept;
  // Old ids of kept agents whose acceptable set lost every other agent.
  std::vector<AgentId> isolated;
};

// Deletes `removed` from the profile and from every acceptable set, dropping
// emptied groups. Remaining agents are relabelled densely in id order.
Restriction restrict(const Profile& profile, std::span<const AgentId> removed);

// A set of disjoint pairs, kept sorted.
class Matching {
 public:
  Matching() = default;
  // Throws kInvalidMatching on a self pair or an agent used twice.
  explicit Matching(std::vector<AgentPair> pairs);

  const std::vector<AgentPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(AgentPair pair) const;

  // partner_table(n)[a] is a's partner or kNoAgent.
  std::vector<AgentId> partner_table(std::size_t agent_count) const;

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<AgentPair> pairs_;
};

// Throws kInvalidMatching unless every pair is an acceptability edge.
void validate_matching(const Profile& profile, const Matching& matching);

}  // namespace sroom

#endif  // SROOM_PROFILE_HPP_
