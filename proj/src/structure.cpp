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

#include "sroom/structure.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "sroom/error.hpp"

namespace sroom {
namespace {

void require_matching_size(const Profile& profile, const WitnessOrder& order) {
  if (order.size() != profile.size()) {
    throw Error(ErrorCode::kInvalidOrder,
                "order has " + std::to_string(order.size()) +
                    " agents, profile has " + std::to_string(profile.size()));
  }
}

// Orientation of the pair (x, y), x < y, in the eyes of voter v:
// +1 when x is strictly preferred, 0 when tied, -1 when y is preferred.
int pair_label(const Profile& profile, AgentId v, AgentId x, AgentId y) {
  const int rx = profile.rank(v, x);
  const int ry = profile.rank(v, y);
  return rx < ry ? 1 : (rx == ry ? 0 : -1);
}

// Acceptable agents of `voter` listed in axis order.
std::vector<AgentId> acceptable_along(const Profile& profile, AgentId voter,
                                      const WitnessOrder& order) {
  std::vector<AgentId> out;
  for (AgentId a : order.sequence()) {
    if (profile.accepts(voter, a)) out.push_back(a);
  }
  return out;
}

// Tracks, for every unordered pair, whether the labels seen so far along the
// axis form a monotone sequence.
class MonotoneTracker {
 public:
  explicit MonotoneTracker(std::size_t n)
      : n_(n), last_(n * n, kUnseen), dir_(n * n, 0) {}

  // Returns false if appending `label` breaks monotonicity.
  bool push(AgentId x, AgentId y, int label) {
    const std::size_t k = x * n_ + y;
    if (last_[k] == kUnseen) {
      log_.push_back({k, last_[k], dir_[k]});
      last_[k] = static_cast<signed char>(label);
      return true;
    }
    if (last_[k] == label) return true;
    const signed char step = label > last_[k] ? 1 : -1;
    if (dir_[k] != 0 && dir_[k] != step) return false;
    log_.push_back({k, last_[k], dir_[k]});
    dir_[k] = step;
    last_[k] = static_cast<signed char>(label);
    return true;
  }

  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      const auto& e = log_.back();
      last_[e.key] = e.last;
      dir_[e.key] = e.dir;
      log_.pop_back();
    }
  }

 private:
  static constexpr signed char kUnseen = -2;
  struct Entry {
    std::size_t key;
    signed char last;
    signed char dir;
  };
  std::size_t n_;
  std::vector<signed char> last_;
  std::vector<signed char> dir_;
  std::vector<Entry> log_;
};

// Exact single-crossing test for a fixed axis: walks the voters along the
// axis and branches over the permutations of each tie group.
class ScSearch {
 public:
  ScSearch(const Profile& profile, const WitnessOrder& order, ScOptions options)
      : profile_(profile), order_(order), options_(options),
        tracker_(profile.size()) {}

  bool run() { return voter_step(0); }

 private:
  bool voter_step(std::size_t index) {
    if (index == order_.size()) return true;
    const AgentId v = order_.sequence()[index];
    const std::size_t mark = tracker_.mark();
    bool ok = true;
    // Strictly ordered pairs are fixed; apply them first.
    const auto& groups = profile_.order(v).groups();
    for (std::size_t g = 0; g < groups.size() && ok; ++g) {
      for (std::size_t h = g + 1; h < groups.size() && ok; ++h) {
        for (AgentId a : groups[g]) {
          for (AgentId b : groups[h]) {
            const bool a_first = a < b;
            ok = tracker_.push(a_first ? a : b, a_first ? b : a,
                               a_first ? 1 : -1);
            if (!ok) break;
          }
          if (!ok) break;
        }
      }
    }
    const bool found = ok && group_step(index, 0);
    tracker_.undo(mark);
    return found;
  }

  bool group_step(std::size_t index, std::size_t group) {
    const AgentId v = order_.sequence()[index];
    const auto& groups = profile_.order(v).groups();
    while (group < groups.size() && groups[group].size() < 2) ++group;
    if (group == groups.size()) return voter_step(index + 1);

    std::vector<AgentId> perm = groups[group];  // sorted ascending
    do {
      if (++nodes_ > options_.node_budget) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "single-crossing search exceeded " +
                        std::to_string(options_.node_budget) + " nodes");
      }
      const std::size_t mark = tracker_.mark();
      bool ok = true;
      for (std::size_t i = 0; i < perm.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < perm.size() && ok; ++j) {
          const AgentId a = perm[i];
          const AgentId b = perm[j];
          ok = a < b ? tracker_.push(a, b, 1) : tracker_.push(b, a, -1);
        }
      }
      const bool found = ok && group_step(index, group + 1);
      tracker_.undo(mark);
      if (found) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  const Profile& profile_;
  const WitnessOrder& order_;
  ScOptions options_;
  MonotoneTracker tracker_;
  std::uint64_t nodes_ = 0;
};

// "Agent `middle` must not lie strictly between `left` and `right`."
// Both single-peakedness and (tie-sensitive) single-crossingness of an axis
// reduce to a set of such constraints, which makes the feasibility of a
// prefix depend only on the set of agents it contains: when the middle agent
// is placed, either both ends or neither must already be placed.
struct BetweenConstraints {
  std::size_t n = 0;
  // by_middle[m] holds (left bit, right bit).
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_middle;

  explicit BetweenConstraints(std::size_t agents) : n(agents), by_middle(agents) {}

  void add(AgentId middle, AgentId left, AgentId right) {
    if (left > right) std::swap(left, right);
    keys_.insert({middle, left, right});
  }

  void finalize() {
    for (const auto& [m, l, r] : keys_) {
      by_middle[m].emplace_back(1u << l, 1u << r);
    }
    keys_.clear();
  }

  bool placeable(std::uint32_t placed, AgentId m) const {
    for (const auto& [l, r] : by_middle[m]) {
      if (((placed & l) != 0) != ((placed & r) != 0)) return false;
    }
    return true;
  }

 private:
  std::set<std::tuple<AgentId, AgentId, AgentId>> keys_;
};

BetweenConstraints single_peaked_constraints(const Profile& profile) {
  BetweenConstraints c(profile.size());
  for (AgentId v = 0; v < profile.size(); ++v) {
    std::vector<AgentId> acc;
    for (const auto& g : profile.order(v).groups()) {
      acc.insert(acc.end(), g.begin(), g.end());
    }
    for (AgentId y : acc) {
      const int ry = profile.rank(v, y);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == y || profile.rank(v, acc[i]) >= ry) continue;
        for (std::size_t j = i + 1; j < acc.size(); ++j) {
          if (acc[j] == y || profile.rank(v, acc[j]) >= ry) continue;
          c.add(y, acc[i], acc[j]);
        }
      }
    }
  }
  c.finalize();
  return c;
}

// Voter q may not sit between voters p and s on pair {x,y} unless its label
// lies between theirs. With `strict_only`, tied voters are ignored, which
// yields necessary conditions for plain single-crossingness.
BetweenConstraints crossing_constraints(const Profile& profile, bool strict_only) {
  const auto n = static_cast<AgentId>(profile.size());
  BetweenConstraints c(n);
  std::vector<std::pair<AgentId, int>> voters;
  for (AgentId x = 0; x < n; ++x) {
    for (AgentId y = x + 1; y < n; ++y) {
      voters.clear();
      for (AgentId v = 0; v < n; ++v) {
        if (!profile.accepts(v, x) || !profile.accepts(v, y)) continue;
        const int label = pair_label(profile, v, x, y);
        if (strict_only && label == 0) continue;
        voters.emplace_back(v, label);
      }
      for (std::size_t p = 0; p < voters.size(); ++p) {
        for (std::size_t s = p + 1; s < voters.size(); ++s) {
          const int lo = std::min(voters[p].second, voters[s].second);
          const int hi = std::max(voters[p].second, voters[s].second);
          for (const auto& [q, lq] : voters) {
            if (q == voters[p].first || q == voters[s].first) continue;
            if (lq < lo || lq > hi) c.add(q, voters[p].first, voters[s].first);
          }
        }
      }
    }
  }
  c.finalize();
  return c;
}

// Memoized feasibility over placed-agent sets.
class PrefixFeasibility {
 public:
  explicit PrefixFeasibility(const BetweenConstraints& c)
      : c_(c), full_((c.n == 32) ? ~0u : ((1u << c.n) - 1)), memo_(std::size_t{1} << c.n, 0) {}

  bool feasible(std::uint32_t placed) {
    if (placed == full_) return true;
    auto& slot = memo_[placed];
    if (slot != 0) return slot == 1;
    bool ok = false;
    for (AgentId m = 0; m < c_.n && !ok; ++m) {
      const std::uint32_t bit = 1u << m;
      if ((placed & bit) == 0 && c_.placeable(placed, m)) {
        ok = feasible(placed | bit);
      }
    }
    slot = ok ? 1 : 2;
    return ok;
  }

  bool extendable(std::uint32_t placed, AgentId m) {
    return c_.placeable(placed, m) && feasible(placed | (1u << m));
  }

  std::optional<WitnessOrder> smallest_order() {
    if (!feasible(0)) return std::nullopt;
    std::vector<AgentId> seq;
    std::uint32_t placed = 0;
    while (placed != full_) {
      for (AgentId m = 0; m < c_.n; ++m) {
        const std::uint32_t bit = 1u << m;
        if ((placed & bit) == 0 && extendable(placed, m)) {
          seq.push_back(m);
          placed |= bit;
          break;
        }
      }
    }
    return WitnessOrder(std::move(seq));
  }

 private:
  const BetweenConstraints& c_;
  std::uint32_t full_;
  std::vector<signed char> memo_;
};

void require_searchable(const Profile& profile, OrderSearchOptions options) {
  const std::size_t limit = std::min<std::size_t>(options.max_agents, 24);
  if (profile.size() > limit) {
    throw Error(ErrorCode::kTooManyAgents,
                "order search supports at most " + std::to_string(limit) +
                    " agents, profile has " + std::to_string(profile.size()));
  }
}

}  // namespace

WitnessOrder::WitnessOrder(std::vector<AgentId> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), 0) {
  std::vector<bool> seen(sequence_.size(), false);
  for (std::size_t p = 0; p < sequence_.size(); ++p) {
    const AgentId a = sequence_[p];
    if (a >= sequence_.size() || seen[a]) {
      throw Error(ErrorCode::kInvalidOrder,
                  "order is not a permutation of 0.." +
                      std::to_string(sequence_.size()) + "-1");
    }
    seen[a] = true;
    position_[a] = p;
  }
}

WitnessOrder WitnessOrder::identity(std::size_t n) {
  std::vector<AgentId> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<AgentId>(i);
  return WitnessOrder(std::move(seq));
}

WitnessOrder WitnessOrder::reversed() const {
  return WitnessOrder(std::vector<AgentId>(sequence_.rbegin(), sequence_.rend()));
}

bool is_complete(const Profile& profile) {
  const auto n = static_cast<AgentId>(profile.size());
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i != j && !profile.accepts(i, j)) return false;
    }
  }
  return true;
}

bool has_ties(const Profile& profile) {
  for (const auto& order : profile.orders()) {
    for (const auto& g : order.groups()) {
      if (g.size() > 1) return true;
    }
  }
  return false;
}

bool is_narcissistic(const Profile& profile) {
  for (const auto& order : profile.orders()) {
    const auto& groups = order.groups();
    if (groups.empty() || groups.front().size() != 1 ||
        groups.front().front() != order.owner()) {
      return false;
    }
  }
  return true;
}

SinglePeakedVerdict is_single_peaked_wrt(const Profile& profile,
                                         const WitnessOrder& order) {
  require_matching_size(profile, order);
  for (AgentId v = 0; v < profile.size(); ++v) {
    const auto seq = acceptable_along(profile, v, order);
    const std::size_t m = seq.size();
    if (m < 3) continue;
    std::vector<int> r(m);
    for (std::size_t p = 0; p < m; ++p) r[p] = profile.rank(v, seq[p]);
    // A violation is a strict valley: some y ranked strictly worse than an
    // earlier and a later agent.
    std::vector<int> suffix_best(m + 1, Profile::kUnranked);
    int best = std::numeric_limits<int>::max();
    for (std::size_t p = m; p-- > 0;) {
      suffix_best[p] = best;
      best = std::min(best, r[p]);
    }
    int prefix_best = r[0];
    for (std::size_t q = 1; q + 1 < m; ++q) {
      if (prefix_best < r[q] && suffix_best[q] < r[q]) {
        std::size_t px = 0;
        while (r[px] >= r[q]) ++px;
        std::size_t pz = q + 1;
        while (r[pz] >= r[q]) ++pz;
        return {false, PeakViolation{v, seq[px], seq[q], seq[pz]}};
      }
      prefix_best = std::min(prefix_best, r[q]);
    }
  }
  return {};
}

CrossingVerdict is_tssc_wrt(const Profile& profile, const WitnessOrder& order) {
  require_matching_size(profile, order);
  const std::size_t n = profile.size();
  MonotoneTracker tracker(n);
  std::vector<bool> bad(n * n, false);
  std::optional<AgentPair> first;
  for (AgentId v : order.sequence()) {
    const auto& groups = profile.order(v).groups();
    std::vector<AgentId> acc;
    for (const auto& g : groups) acc.insert(acc.end(), g.begin(), g.end());
    std::sort(acc.begin(), acc.end());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = i + 1; j < acc.size(); ++j) {
        const AgentId x = acc[i];
        const AgentId y = acc[j];
        if (bad[x * n + y]) continue;
        if (!tracker.push(x, y, pair_label(profile, v, x, y))) {
          bad[x * n + y] = true;
          if (!first || AgentPair{x, y} < *first) first = AgentPair{x, y};
        }
      }
    }
  }
  if (first) return {false, first};
  return {};
}

Profile break_ties_fixed(const Profile& profile, const WitnessOrder& tiebreak) {
  require_matching_size(profile, tiebreak);
  std::vector<PreferenceOrder> orders;
  orders.reserve(profile.size());
  for (const auto& order : profile.orders()) {
    std::vector<TieGroup> groups;
    for (TieGroup g : order.groups()) {
      std::sort(g.begin(), g.end(), [&](AgentId a, AgentId b) {
        return tiebreak.precedes(a, b);
      });
      for (AgentId a : g) groups.push_back({a});
    }
    orders.emplace_back(order.owner(), std::move(groups));
  }
  return make_profile_unchecked(std::move(orders));
}

bool is_sc_wrt(const Profile& profile, const WitnessOrder& order,
               ScOptions options) {
  require_matching_size(profile, order);
  if (!has_ties(profile)) return is_tssc_wrt(profile, order).holds;
  // Cheap sufficient check before the exponential tie-permutation search.
  for (const WitnessOrder& tb : {order, order.reversed()}) {
    if (is_tssc_wrt(break_ties_fixed(profile, tb), order).holds) return true;
  }
  for (const auto& o : profile.orders()) {
    for (const auto& g : o.groups()) {
      if (g.size() > options.max_tie_group) {
        throw Error(ErrorCode::kTieGroupTooLarge,
                    "agent " + std::to_string(o.owner()) + " has a tie group of " +
                        std::to_string(g.size()) + " agents (limit " +
                        std::to_string(options.max_tie_group) + ")",
                    {o.owner()});
      }
    }
  }
  return ScSearch(profile, order, options).run();
}

std::optional<WitnessOrder> find_single_peaked_order(const Profile& profile,
                                                     OrderSearchOptions options) {
  require_searchable(profile, options);
  const auto constraints = single_peaked_constraints(profile);
  return PrefixFeasibility(constraints).smallest_order();
}

std::optional<WitnessOrder> find_tssc_order(const Profile& profile,
                                            OrderSearchOptions options) {
  require_searchable(profile, options);
  const auto constraints = crossing_constraints(profile, /*strict_only=*/false);
  return PrefixFeasibility(constraints).smallest_order();
}

std::optional<WitnessOrder> find_sc_order(const Profile& profile,
                                          OrderSearchOptions options,
                                          ScOptions sc_options) {
  if (!has_ties(profile)) return find_tssc_order(profile, options);
  require_searchable(profile, options);
  const auto n = static_cast<AgentId>(profile.size());
  const auto constraints = crossing_constraints(profile, /*strict_only=*/true);
  PrefixFeasibility prefix(constraints);

  std::vector<AgentId> seq;
  std::optional<WitnessOrder> found;
  auto dfs = [&](auto&& self, std::uint32_t placed) -> bool {
    if (seq.size() == n) {
      WitnessOrder candidate(seq);
      if (!is_sc_wrt(profile, candidate, sc_options)) return false;
      found = std::move(candidate);
      return true;
    }
    for (AgentId m = 0; m < n; ++m) {
      const std::uint32_t bit = 1u << m;
      if ((placed & bit) != 0 || !prefix.extendable(placed, m)) continue;
      seq.push_back(m);
      if (self(self, placed | bit)) return true;
      seq.pop_back();
    }
    return false;
  };
  dfs(dfs, 0u);
  return found;
}

bool is_worst_restricted(const Profile& profile) {
  if (has_ties(profile)) {
    throw Error(ErrorCode::kTiesUnsupported,
                "worst-restrictedness is only defined without ties");
  }
  std::set<AgentId> worst;
  for (const auto& order : profile.orders()) {
    const auto& groups = order.groups();
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      if (it->front() != order.owner()) {
        worst.insert(it->front());
        break;
      }
    }
  }
  return worst.size() <= 2;
}

bool is_triple_worst_restricted(const Profile& profile) {
  if (has_ties(profile)) {
    throw Error(ErrorCode::kTiesUnsupported,
                "worst-restrictedness is only defined without ties");
  }
  const auto n = static_cast<AgentId>(profile.size());
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      for (AgentId c = b + 1; c < n; ++c) {
        bool last[3] = {false, false, false};
        for (AgentId v = 0; v < n; ++v) {
          const int ra = profile.rank(v, a);
          const int rb = profile.rank(v, b);
          const int rc = profile.rank(v, c);
          if (ra == Profile::kUnranked || rb == Profile::kUnranked ||
              rc == Profile::kUnranked) {
            continue;
          }
          const int worst = std::max({ra, rb, rc});
          last[worst == ra ? 0 : (worst == rb ? 1 : 2)] = true;
        }
        if (last[0] && last[1] && last[2]) return false;
      }
    }
  }
  return true;
}

PropertyReport analyze(const Profile& profile,
                       const std::vector<WitnessOrder>& orders,
                       ScOptions sc_options) {
  PropertyReport report;
  report.complete = is_complete(profile);
  report.has_ties = has_ties(profile);
  report.narcissistic = is_narcissistic(profile);
  for (const auto& order : orders) {
    PropertyReport::OrderVerdict verdict;
    verdict.order = order;
    verdict.single_peaked = is_single_peaked_wrt(profile, order).holds;
    verdict.tssc = is_tssc_wrt(profile, order).holds;
    try {
      verdict.single_crossing = is_sc_wrt(profile, order, sc_options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTieGroupTooLarge &&
          e.code() != ErrorCode::kBudgetExceeded) {
        throw;
      }
    }
    report.per_order.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace sroom
