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

#include "sroom/profile.hpp"

#include <algorithm>
#include <string>

#include "sroom/error.hpp"

namespace sroom {
namespace {

std::string agent_str(AgentId a) { return std::to_string(a); }

std::vector<int> build_ranks(const std::vector<PreferenceOrder>& orders) {
  const std::size_t n = orders.size();
  std::vector<int> rank(n * n, Profile::kUnranked);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& groups = orders[i].groups();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (AgentId x : groups[g]) rank[i * n + x] = static_cast<int>(g);
    }
  }
  return rank;
}

}  // namespace

PreferenceOrder::PreferenceOrder(AgentId owner, std::vector<TieGroup> groups)
    : owner_(owner), groups_(std::move(groups)) {
  for (auto& g : groups_) std::sort(g.begin(), g.end());
}

std::size_t PreferenceOrder::acceptable_count() const {
  std::size_t count = 0;
  for (const auto& g : groups_) count += g.size();
  return count;
}

RawProfile Profile::raw() const {
  RawProfile out;
  out.reserve(orders_.size());
  for (const auto& o : orders_) out.push_back(o.groups());
  return out;
}

Profile make_profile_unchecked(std::vector<PreferenceOrder> orders) {
  Profile p;
  p.rank_ = build_ranks(orders);
  p.orders_ = std::move(orders);
  return p;
}

Profile validate_profile(RawProfile raw, ValidationMode mode) {
  if (raw.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "profile has no agents");
  }
  const std::size_t n = raw.size();
  std::vector<PreferenceOrder> orders;
  orders.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto owner = static_cast<AgentId>(i);
    std::vector<bool> seen(n, false);
    for (const auto& group : raw[i]) {
      if (group.empty()) {
        throw Error(ErrorCode::kEmptyTieGroup,
                    "agent " + agent_str(owner) + " has an empty tie group",
                    {owner});
      }
      for (AgentId x : group) {
        if (x >= n) {
          throw Error(ErrorCode::kInvalidAgent,
                      "agent " + agent_str(owner) + " ranks unknown agent " +
                          agent_str(x),
                      {owner, x});
        }
        if (seen[x]) {
          throw Error(ErrorCode::kDuplicateInOrder,
                      "agent " + agent_str(owner) + " ranks agent " +
                          agent_str(x) + " twice",
                      {owner, x});
        }
        seen[x] = true;
      }
    }
    orders.emplace_back(owner, std::move(raw[i]));
  }

  Profile profile = make_profile_unchecked(std::move(orders));
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i != j && profile.accepts(i, j) && !profile.accepts(j, i)) {
        throw Error(ErrorCode::kAsymmetricAcceptability,
                    "agent " + agent_str(i) + " accepts agent " + agent_str(j) +
                        " but not conversely",
                    {i, j});
      }
    }
  }
  if (mode == ValidationMode::kStrict) {
    for (AgentId i = 0; i < n; ++i) {
      bool has_partner = false;
      for (AgentId j = 0; j < n && !has_partner; ++j) {
        has_partner = j != i && profile.accepts(j, i);
      }
      if (!has_partner) {
        throw Error(ErrorCode::kIsolatedAgent,
                    "agent " + agent_str(i) + " is acceptable to nobody", {i});
      }
    }
  }
  return profile;
}

std::vector<std::string> profile_warnings(const Profile& profile) {
  std::vector<std::string> warnings;
  if (profile.size() % 2 != 0) {
    warnings.push_back("odd number of agents (" +
                       std::to_string(profile.size()) +
                       "); no perfect matching exists");
  }
  return warnings;
}

Comparison compare(const Profile& profile, AgentId i, AgentId x, AgentId y) {
  const int rx = profile.rank(i, x);
  const int ry = profile.rank(i, y);
  if (rx == Profile::kUnranked || ry == Profile::kUnranked) {
    return Comparison::kIncomparable;
  }
  if (rx < ry) return Comparison::kStrictlyBetter;
  if (rx > ry) return Comparison::kStrictlyWorse;
  return Comparison::kTied;
}

std::vector<AgentId> most_acceptable_set(const Profile& profile, AgentId i) {
  for (const auto& group : profile.order(i).groups()) {
    std::vector<AgentId> top;
    for (AgentId x : group) {
      if (x != i) top.push_back(x);
    }
    if (!top.empty()) return top;
  }
  return {};
}

bool AcceptabilityGraph::has_edge(AgentId a, AgentId b) const {
  const auto& adj = adjacency[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

AcceptabilityGraph acceptability_graph(const Profile& profile) {
  AcceptabilityGraph graph;
  const auto n = static_cast<AgentId>(profile.size());
  graph.vertex_count = n;
  graph.adjacency.resize(n);
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = i + 1; j < n; ++j) {
      if (profile.accepts(i, j) && profile.accepts(j, i)) {
        graph.edges.emplace_back(i, j);
        graph.adjacency[i].push_back(j);
        graph.adjacency[j].push_back(i);
      }
    }
  }
  return graph;
}

Restriction restrict(const Profile& profile, std::span<const AgentId> removed) {
  const std::size_t n = profile.size();
  std::vector<bool> gone(n, false);
  for (AgentId a : removed) {
    if (a >= n) {
      throw Error(ErrorCode::kInvalidAgent,
                  "cannot remove unknown agent " + agent_str(a), {a});
    }
    gone[a] = true;
  }

  Restriction out;
  std::vector<AgentId> relabel(n, kNoAgent);
  for (AgentId a = 0; a < n; ++a) {
    if (!gone[a]) {
      relabel[a] = static_cast<AgentId>(out.kept.size());
      out.kept.push_back(a);
    }
  }

  std::vector<PreferenceOrder> orders;
  orders.reserve(out.kept.size());
  for (AgentId old_id : out.kept) {
    std::vector<TieGroup> groups;
    bool has_other = false;
    for (const auto& group : profile.order(old_id).groups()) {
      TieGroup g;
      for (AgentId x : group) {
        if (gone[x]) continue;
        g.push_back(relabel[x]);
        has_other = has_other || x != old_id;
      }
      if (!g.empty()) groups.push_back(std::move(g));
    }
    if (!has_other) out.isolated.push_back(old_id);
    orders.emplace_back(relabel[old_id], std::move(groups));
  }
  out.profile = make_profile_unchecked(std::move(orders));
  return out;
}

Matching::Matching(std::vector<AgentPair> pairs) {
  for (auto& p : pairs) {
    if (p.first == p.second) {
      throw Error(ErrorCode::kInvalidMatching,
                  "agent " + agent_str(p.first) + " paired with itself",
                  {p.first});
    }
    p = make_pair_sorted(p.first, p.second);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<AgentId> used;
  used.reserve(pairs.size() * 2);
  for (const auto& p : pairs) {
    used.push_back(p.first);
    used.push_back(p.second);
  }
  std::sort(used.begin(), used.end());
  const auto dup = std::adjacent_find(used.begin(), used.end());
  if (dup != used.end()) {
    throw Error(ErrorCode::kInvalidMatching,
                "agent " + agent_str(*dup) + " appears in two pairs", {*dup});
  }
  pairs_ = std::move(pairs);
}

bool Matching::contains(AgentPair pair) const {
  return std::binary_search(pairs_.begin(), pairs_.end(),
                            make_pair_sorted(pair.first, pair.second));
}

std::vector<AgentId> Matching::partner_table(std::size_t agent_count) const {
  std::vector<AgentId> partner(agent_count, kNoAgent);
  for (const auto& [a, b] : pairs_) {
    if (a < agent_count) partner[a] = b;
    if (b < agent_count) partner[b] = a;
  }
  return partner;
}

void validate_matching(const Profile& profile, const Matching& matching) {
  const std::size_t n = profile.size();
  for (const auto& [a, b] : matching.pairs()) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::kInvalidMatching,
                  "pair {" + agent_str(a) + "," + agent_str(b) +
                      "} names an unknown agent",
                  {a, b});
    }
    if (!profile.accepts(a, b) || !profile.accepts(b, a)) {
      throw Error(ErrorCode::kInvalidMatching,
                  "pair {" + agent_str(a) + "," + agent_str(b) +
                      "} is not mutually acceptable",
                  {a, b});
    }
  }
}

}  // namespace sroom
