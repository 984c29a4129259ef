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

#include "sroom/bt_solver.hpp"

#include <set>
#include <string>

#include "sroom/error.hpp"
#include "sroom/stability.hpp"
#include "sroom/structure.hpp"

namespace sroom {
namespace {

// Most-acceptable sets under deletions, maintained incrementally.
//
// head[z] is the index of z's first tie group that still has an active
// member other than z, and live[z] counts those members. watchers[a] lists
// agents whose head group contained a at some point; stale entries are
// filtered by rank. Every group of every agent is scanned at most once, so
// the whole run costs O(n^2) on a complete profile.
class GreedyState {
 public:
  explicit GreedyState(const Profile& profile)
      : profile_(profile),
        active_(profile.size(), 1),
        head_(profile.size(), 0),
        live_(profile.size(), 0),
        watchers_(profile.size()),
        active_count_(profile.size()) {
    for (AgentId z = 0; z < profile.size(); ++z) settle(z);
    for (AgentId z = 0; z < profile.size(); ++z) {
      for_each_top(z, [&](AgentId w) {
        if (z < w && in_top(w, z)) mutual_.insert({z, w});
      });
    }
  }

  std::size_t active_count() const { return active_count_; }

  std::optional<AgentPair> smallest_mutual_pair() const {
    if (mutual_.empty()) return std::nullopt;
    return *mutual_.begin();
  }

  std::vector<AgentId> active_agents() const {
    std::vector<AgentId> out;
    for (AgentId a = 0; a < profile_.size(); ++a) {
      if (active_[a]) out.push_back(a);
    }
    return out;
  }

  void remove_pair(AgentPair pair) {
    const auto [x, y] = pair;
    for (AgentId r : {x, y}) {
      for_each_top(r, [&](AgentId w) { mutual_.erase(make_pair_sorted(r, w)); });
    }
    active_[x] = 0;
    active_[y] = 0;
    active_count_ -= 2;
    for (AgentId r : {x, y}) {
      for (AgentId z : watchers_[r]) {
        if (!active_[z] || !in_top(z, r)) continue;
        if (--live_[z] == 0) {
          ++head_[z];
          settle(z);
          for_each_top(z, [&](AgentId w) {
            if (in_top(w, z)) mutual_.insert(make_pair_sorted(z, w));
          });
        }
      }
    }
  }

 private:
  bool in_top(AgentId z, AgentId a) const {
    return head_[z] < profile_.order(z).groups().size() &&
           profile_.rank(z, a) == static_cast<int>(head_[z]);
  }

  template <typename F>
  void for_each_top(AgentId z, F&& f) const {
    const auto& groups = profile_.order(z).groups();
    if (head_[z] >= groups.size()) return;
    for (AgentId w : groups[head_[z]]) {
      if (w != z && active_[w]) f(w);
    }
  }

  // Moves head[z] forward to the first group with an active non-self member
  // and registers z as a watcher of that group's members.
  void settle(AgentId z) {
    const auto& groups = profile_.order(z).groups();
    while (head_[z] < groups.size()) {
      std::size_t count = 0;
      for (AgentId w : groups[head_[z]]) {
        if (w != z && active_[w]) {
          ++count;
          watchers_[w].push_back(z);
        }
      }
      if (count > 0) {
        live_[z] = count;
        return;
      }
      ++head_[z];
    }
    live_[z] = 0;
  }

  const Profile& profile_;
  std::vector<char> active_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> live_;
  std::vector<std::vector<AgentId>> watchers_;
  std::set<AgentPair> mutual_;
  std::size_t active_count_;
};

std::string join_ids(const std::vector<AgentId>& ids) {
  std::string out;
  for (AgentId a : ids) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a);
  }
  return out;
}

}  // namespace

std::optional<AgentPair> find_mutual_most_acceptable_pair(const Profile& profile) {
  const auto n = static_cast<AgentId>(profile.size());
  std::vector<int> top_rank(n, Profile::kUnranked);
  std::vector<std::vector<AgentId>> top(n);
  for (AgentId x = 0; x < n; ++x) {
    top[x] = most_acceptable_set(profile, x);
    if (!top[x].empty()) top_rank[x] = profile.rank(x, top[x].front());
  }
  for (AgentId x = 0; x < n; ++x) {
    for (AgentId y : top[x]) {
      if (y > x && profile.rank(y, x) == top_rank[y]) return AgentPair{x, y};
    }
  }
  return std::nullopt;
}

SolveResult bt_solve(const Profile& profile) {
  if (!is_complete(profile)) {
    throw Error(ErrorCode::kNotComplete, "profile is not complete");
  }
  if (!is_narcissistic(profile)) {
    throw Error(ErrorCode::kNotNarcissistic, "profile is not narcissistic");
  }

  GreedyState state(profile);
  SolveResult result;
  std::vector<AgentPair> pairs;
  while (state.active_count() > 0) {
    const auto pair = state.smallest_mutual_pair();
    if (!pair) {
      const auto left = state.active_agents();
      throw Error(ErrorCode::kNoMutualPair,
                  "no two remaining agents are each other's most acceptable "
                  "agents; remaining: " + join_ids(left),
                  left);
    }
    state.remove_pair(*pair);
    pairs.push_back(*pair);
    result.trace.rounds.push_back({*pair, state.active_count()});
  }
  result.matching = Matching(std::move(pairs));
  if (!is_stable(profile, result.matching)) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "greedy matching is not stable");
  }
  return result;
}

}  // namespace sroom
