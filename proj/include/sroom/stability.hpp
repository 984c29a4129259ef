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

// Blocking pairs, (weak) stability and the exhaustive stable-matching search.

#ifndef SROOM_STABILITY_HPP_
#define SROOM_STABILITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "sroom/profile.hpp"

namespace sroom {

enum class BlockReason { kUnmatched, kPrefersOverPartner };

struct BlockingPair {
  AgentPair pair;
  BlockReason reason_first;
  BlockReason reason_second;

  bool operator==(const BlockingPair&) const = default;
};

// Every acceptability edge {x,y} outside the matching where each endpoint is
// unmatched or strictly prefers the other to its partner. Sorted by pair.
// Throws kInvalidMatching if the matching does not fit the profile.
std::vector<BlockingPair> find_blocking_pairs(const Profile& profile,
                                              const Matching& matching);

bool is_stable(const Profile& profile, const Matching& matching);

// True iff every agent of the profile is matched.
bool is_perfect(const Profile& profile, const Matching& matching);

struct SearchOptions {
  // Maximum number of branching decisions before kBudgetExceeded.
  std::uint64_t node_budget = 10'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// All stable matchings (perfect or not), sorted lexicographically by their
// sorted pair lists. Throws kBudgetExceeded.
std::vector<Matching> enumerate_stable_matchings(const Profile& profile,
                                                 SearchOptions options = {},
                                                 SearchStats* stats = nullptr);

// Stops at the first stable matching found; nullopt when none exists.
std::optional<Matching> find_stable_matching(const Profile& profile,
                                             SearchOptions options = {},
                                             SearchStats* stats = nullptr);

}  // namespace sroom

#endif  // SROOM_STABILITY_HPP_
