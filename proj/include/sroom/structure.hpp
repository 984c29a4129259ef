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

// Structural properties of profiles: completeness, ties, narcissism,
// single-peakedness, single-crossingness (plain and tie-sensitive) and
// worst-restrictedness.
//
// With incomplete preferences every check only looks at agents inside the
// relevant acceptable set: a single-peaked triple must lie fully inside
// V(i), and the crossing structure of a pair {x,y} involves only the agents
// that rank both x and y.

#ifndef SROOM_STRUCTURE_HPP_
#define SROOM_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sroom/profile.hpp"

namespace sroom {

// A linear order of all agents, used as axis for the structure checks.
class WitnessOrder {
 public:
  WitnessOrder() = default;
  // Throws kInvalidOrder unless `sequence` is a permutation of 0..n-1.
  explicit WitnessOrder(std::vector<AgentId> sequence);

  static WitnessOrder identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  const std::vector<AgentId>& sequence() const { return sequence_; }
  std::size_t position(AgentId a) const { return position_[a]; }
  bool precedes(AgentId a, AgentId b) const { return position_[a] < position_[b]; }
  WitnessOrder reversed() const;

  bool operator==(const WitnessOrder& other) const {
    return sequence_ == other.sequence_;
  }

 private:
  std::vector<AgentId> sequence_;
  std::vector<std::size_t> position_;
};

bool is_complete(const Profile& profile);
bool has_ties(const Profile& profile);
// Every agent lists itself as the sole member of its first group.
bool is_narcissistic(const Profile& profile);

// Agent `agent` ranks x▷y▷z (along the axis) with y strictly worse than both.
struct PeakViolation {
  AgentId agent;
  AgentId x;
  AgentId y;
  AgentId z;
  bool operator==(const PeakViolation&) const = default;
};

struct SinglePeakedVerdict {
  bool holds = true;
  // Smallest agent id with a violation; within it, the violation with the
  // earliest middle element y, and then the earliest x and z.
  std::optional<PeakViolation> violation;
  explicit operator bool() const { return holds; }
};

SinglePeakedVerdict is_single_peaked_wrt(const Profile& profile,
                                         const WitnessOrder& order);

struct CrossingVerdict {
  bool holds = true;
  // Lexicographically smallest violating pair.
  std::optional<AgentPair> pair;
  explicit operator bool() const { return holds; }
};

// For every pair {x,y}, the agents ranking both must appear along the axis as
// x-preferrers, then tied agents, then y-preferrers (or the reverse).
CrossingVerdict is_tssc_wrt(const Profile& profile, const WitnessOrder& order);

struct ScOptions {
  // Largest tie group for which the exact decision is attempted.
  std::size_t max_tie_group = 6;
  std::uint64_t node_budget = 10'000'000;
};

// Whether some per-agent linear extension is single-crossing w.r.t. `order`.
// Tries two fixed tie-breakings first and falls back to an exact search over
// tie-group permutations. Throws kTieGroupTooLarge or kBudgetExceeded instead
// of guessing.
bool is_sc_wrt(const Profile& profile, const WitnessOrder& order,
               ScOptions options = {});

// Splits every tie group by `tiebreak` (earlier agents first).
Profile break_ties_fixed(const Profile& profile, const WitnessOrder& tiebreak);

struct OrderSearchOptions {
  // Upper bound on the agent count; the search is exponential in it.
  std::size_t max_agents = 20;
};

// Lexicographically smallest axis for which the profile is single-peaked,
// or nullopt. Throws kTooManyAgents.
std::optional<WitnessOrder> find_single_peaked_order(
    const Profile& profile, OrderSearchOptions options = {});

// Same for tie-sensitive single-crossingness.
std::optional<WitnessOrder> find_tssc_order(const Profile& profile,
                                            OrderSearchOptions options = {});

// Same for single-crossingness; enumerates orders and calls is_sc_wrt on
// each candidate. Default bound is smaller because of that.
std::optional<WitnessOrder> find_sc_order(
    const Profile& profile, OrderSearchOptions options = {.max_agents = 9},
    ScOptions sc_options = {});

// At most two distinct agents occur as some agent's least preferred agent
// (self excluded). Throws kTiesUnsupported for profiles with ties.
bool is_worst_restricted(const Profile& profile);

// Triple-wise variant: for every three distinct agents, restricting the
// orders of the agents that rank all three to those three, at most two of
// them are ever ranked last. Throws kTiesUnsupported.
bool is_triple_worst_restricted(const Profile& profile);

struct PropertyReport {
  bool complete = false;
  bool has_ties = false;
  bool narcissistic = false;

  struct OrderVerdict {
    WitnessOrder order;
    bool single_peaked = false;
    bool tssc = false;
    // Empty when the exact decision was infeasible.
    std::optional<bool> single_crossing;
  };
  std::vector<OrderVerdict> per_order;
};

PropertyReport analyze(const Profile& profile,
                       const std::vector<WitnessOrder>& orders = {},
                       ScOptions sc_options = {});

}  // namespace sroom

#endif  // SROOM_STRUCTURE_HPP_
