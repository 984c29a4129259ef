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

#include "sroom/stability.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sroom/error.hpp"

namespace sroom {
namespace {

constexpr int kNoBound = std::numeric_limits<int>::max();

// Backtracking over matchings of the acceptability graph.
//
// Each node fixes the fate of one undecided agent: a partner among its
// undecided neighbours, or staying single. Once an agent a is fixed, every
// undecided neighbour x that a strictly prefers to its partner must end up
// with a partner it strictly prefers to a, otherwise {a,x} blocks. That
// requirement is kept as bound[x] (an exclusive rank limit), so a completed
// assignment has no blocking pair by construction. Branching picks the
// undecided agent with the fewest remaining options.
class StableSearch {
 public:
  StableSearch(const Profile& profile, SearchOptions options, bool first_only,
               SearchStats* stats)
      : profile_(profile),
        graph_(acceptability_graph(profile)),
        options_(options),
        first_only_(first_only),
        stats_(stats),
        partner_(profile.size(), kNoAgent),
        decided_(profile.size(), 0),
        bound_(profile.size(), kNoBound) {}

  std::vector<Matching> run() {
    search(profile_.size());
    if (stats_ != nullptr) stats_->nodes = nodes_;
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  struct Option {
    AgentId partner;  // kNoAgent for "stays single"
    int rank;
  };

  void options_for(AgentId v, std::vector<Option>& out) const {
    out.clear();
    for (AgentId w : graph_.adjacency[v]) {
      if (decided_[w]) continue;
      const int rv = profile_.rank(v, w);
      if (rv <= bound_[v] && profile_.rank(w, v) <= bound_[w]) {
        out.push_back({w, rv});
      }
    }
    std::sort(out.begin(), out.end(), [](const Option& a, const Option& b) {
      return a.rank != b.rank ? a.rank < b.rank : a.partner < b.partner;
    });
    if (bound_[v] == kNoBound) out.push_back({kNoAgent, kNoBound});
  }

  std::size_t option_count(AgentId v) const {
    std::size_t count = bound_[v] == kNoBound ? 1 : 0;
    for (AgentId w : graph_.adjacency[v]) {
      if (!decided_[w] && profile_.rank(v, w) <= bound_[v] &&
          profile_.rank(w, v) <= bound_[w]) {
        ++count;
      }
    }
    return count;
  }

  void tighten_neighbours(AgentId a) {
    const AgentId p = partner_[a];
    const int partner_rank = p == kNoAgent ? kNoBound : profile_.rank(a, p);
    for (AgentId x : graph_.adjacency[a]) {
      if (decided_[x] || profile_.rank(a, x) >= partner_rank) continue;
      const int limit = profile_.rank(x, a);
      if (limit < bound_[x]) {
        log_.emplace_back(x, bound_[x]);
        bound_[x] = limit;
      }
    }
  }

  // Returns true when the search should stop.
  bool search(std::size_t undecided) {
    if (undecided == 0) {
      record();
      return first_only_;
    }
    AgentId branch = kNoAgent;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (AgentId v = 0; v < profile_.size(); ++v) {
      if (decided_[v]) continue;
      const std::size_t count = option_count(v);
      if (count == 0) return false;
      if (count < best) {
        best = count;
        branch = v;
      }
    }

    std::vector<Option> opts;
    options_for(branch, opts);
    for (const Option& opt : opts) {
      if (++nodes_ > options_.node_budget) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "stable matching search exceeded " +
                        std::to_string(options_.node_budget) + " nodes");
      }
      const std::size_t mark = log_.size();
      decided_[branch] = 1;
      partner_[branch] = opt.partner;
      std::size_t fixed = 1;
      if (opt.partner != kNoAgent) {
        decided_[opt.partner] = 1;
        partner_[opt.partner] = branch;
        fixed = 2;
      }
      tighten_neighbours(branch);
      if (opt.partner != kNoAgent) tighten_neighbours(opt.partner);

      const bool stop = search(undecided - fixed);

      while (log_.size() > mark) {
        bound_[log_.back().first] = log_.back().second;
        log_.pop_back();
      }
      decided_[branch] = 0;
      partner_[branch] = kNoAgent;
      if (opt.partner != kNoAgent) {
        decided_[opt.partner] = 0;
        partner_[opt.partner] = kNoAgent;
      }
      if (stop) return true;
    }
    return false;
  }

  void record() {
    std::vector<AgentPair> pairs;
    for (AgentId a = 0; a < profile_.size(); ++a) {
      if (partner_[a] != kNoAgent && a < partner_[a]) {
        pairs.emplace_back(a, partner_[a]);
      }
    }
    Matching m(std::move(pairs));
    if (!is_stable(profile_, m)) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "search produced an unstable matching");
    }
    results_.push_back(std::move(m));
  }

  const Profile& profile_;
  AcceptabilityGraph graph_;
  SearchOptions options_;
  bool first_only_;
  SearchStats* stats_;
  std::vector<AgentId> partner_;
  std::vector<char> decided_;
  std::vector<int> bound_;
  std::vector<std::pair<AgentId, int>> log_;
  std::uint64_t nodes_ = 0;
  std::vector<Matching> results_;
};

}  // namespace

std::vector<BlockingPair> find_blocking_pairs(const Profile& profile,
                                              const Matching& matching) {
  validate_matching(profile, matching);
  const auto partner = matching.partner_table(profile.size());
  // Classifies why x would leave its current state for y, if it would.
  auto wants = [&](AgentId x, AgentId y) -> std::optional<BlockReason> {
    if (partner[x] == kNoAgent) return BlockReason::kUnmatched;
    if (profile.rank(x, y) < profile.rank(x, partner[x])) {
      return BlockReason::kPrefersOverPartner;
    }
    return std::nullopt;
  };

  std::vector<BlockingPair> blocking;
  const auto n = static_cast<AgentId>(profile.size());
  for (AgentId x = 0; x < n; ++x) {
    for (AgentId y = x + 1; y < n; ++y) {
      if (!profile.accepts(x, y) || !profile.accepts(y, x)) continue;
      if (partner[x] == y) continue;
      const auto rx = wants(x, y);
      if (!rx) continue;
      const auto ry = wants(y, x);
      if (ry) blocking.push_back({{x, y}, *rx, *ry});
    }
  }
  return blocking;
}

bool is_stable(const Profile& profile, const Matching& matching) {
  return find_blocking_pairs(profile, matching).empty();
}

bool is_perfect(const Profile& profile, const Matching& matching) {
  validate_matching(profile, matching);
  return matching.size() * 2 == profile.size();
}

std::vector<Matching> enumerate_stable_matchings(const Profile& profile,
                                                 SearchOptions options,
                                                 SearchStats* stats) {
  return StableSearch(profile, options, /*first_only=*/false, stats).run();
}

std::optional<Matching> find_stable_matching(const Profile& profile,
                                             SearchOptions options,
                                             SearchStats* stats) {
  auto found = StableSearch(profile, options, /*first_only=*/true, stats).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace sroom
