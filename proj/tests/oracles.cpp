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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

using sroom::AgentPair;
using sroom::TieGroup;

int group_of(const Profile& p, AgentId i, AgentId x) {
  const auto& groups = p.order(i).groups();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (AgentId y : groups[g]) {
      if (y == x) return static_cast<int>(g);
    }
  }
  return -1;
}

namespace {

bool mutually_acceptable(const Profile& p, AgentId x, AgentId y) {
  return x != y && group_of(p, x, y) >= 0 && group_of(p, y, x) >= 0;
}

// +1: i prefers a, 0: tied, -1: prefers b.
int sign(const Profile& p, AgentId i, AgentId a, AgentId b) {
  const int ga = group_of(p, i, a);
  const int gb = group_of(p, i, b);
  return ga < gb ? 1 : ga == gb ? 0 : -1;
}

bool monotone(const std::vector<int>& seq) {
  return std::is_sorted(seq.begin(), seq.end()) ||
         std::is_sorted(seq.rbegin(), seq.rend());
}

}  // namespace

std::vector<AgentPair> blocking_pairs(const Profile& p, const Matching& m) {
  const auto n = static_cast<AgentId>(p.size());
  std::vector<AgentId> partner(n, sroom::kNoAgent);
  for (const auto& [a, b] : m.pairs()) {
    partner[a] = b;
    partner[b] = a;
  }
  auto wants = [&](AgentId x, AgentId y) {
    if (partner[x] == sroom::kNoAgent) return true;
    return group_of(p, x, y) < group_of(p, x, partner[x]);
  };
  std::vector<AgentPair> out;
  for (AgentId x = 0; x < n; ++x) {
    for (AgentId y = x + 1; y < n; ++y) {
      if (!mutually_acceptable(p, x, y) || partner[x] == y) continue;
      if (wants(x, y) && wants(y, x)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Matching> stable_matchings(const Profile& p) {
  const auto n = static_cast<AgentId>(p.size());
  std::vector<char> used(n, 0);
  std::vector<AgentPair> pairs;
  std::vector<Matching> out;
  std::function<void(AgentId)> rec = [&](AgentId a) {
    while (a < n && used[a]) ++a;
    if (a == n) {
      Matching m(pairs);
      if (blocking_pairs(p, m).empty()) out.push_back(std::move(m));
      return;
    }
    used[a] = 1;
    rec(a + 1);  // a stays single
    for (AgentId b = a + 1; b < n; ++b) {
      if (used[b] || !mutually_acceptable(p, a, b)) continue;
      used[b] = 1;
      pairs.emplace_back(a, b);
      rec(a + 1);
      pairs.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool single_peaked(const Profile& p, const std::vector<AgentId>& axis) {
  const std::size_t n = axis.size();
  for (AgentId i = 0; i < p.size(); ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          const AgentId x = axis[a], y = axis[b], z = axis[c];
          const int gx = group_of(p, i, x), gy = group_of(p, i, y), gz = group_of(p, i, z);
          if (gx < 0 || gy < 0 || gz < 0) continue;
          // x ≻ y must force y ⪰ z.
          if (gx < gy && gz < gy) return false;
        }
      }
    }
  }
  return true;
}

bool tssc(const Profile& p, const std::vector<AgentId>& axis) {
  const auto n = static_cast<AgentId>(p.size());
  for (AgentId x = 0; x < n; ++x) {
    for (AgentId y = x + 1; y < n; ++y) {
      std::vector<int> labels;
      for (AgentId i : axis) {
        if (group_of(p, i, x) >= 0 && group_of(p, i, y) >= 0) {
          labels.push_back(sign(p, i, x, y));
        }
      }
      if (!monotone(labels)) return false;
    }
  }
  return true;
}

bool single_crossing(const Profile& p, const std::vector<AgentId>& axis) {
  const auto n = static_cast<AgentId>(p.size());
  // Every linear extension of every agent, as a rank table.
  std::vector<std::vector<std::vector<int>>> options(n);
  for (AgentId i = 0; i < n; ++i) {
    std::vector<TieGroup> groups = p.order(i).groups();
    std::function<void(std::size_t, std::vector<AgentId>&)> extend =
        [&](std::size_t g, std::vector<AgentId>& seq) {
          if (g == groups.size()) {
            std::vector<int> rank(n, -1);
            for (std::size_t t = 0; t < seq.size(); ++t) rank[seq[t]] = static_cast<int>(t);
            options[i].push_back(std::move(rank));
            return;
          }
          std::vector<AgentId> perm = groups[g];
          std::sort(perm.begin(), perm.end());
          do {
            const std::size_t old = seq.size();
            seq.insert(seq.end(), perm.begin(), perm.end());
            extend(g + 1, seq);
            seq.resize(old);
          } while (std::next_permutation(perm.begin(), perm.end()));
        };
    std::vector<AgentId> seq;
    extend(0, seq);
  }
  std::vector<std::size_t> pick(n, 0);
  auto check = [&] {
    for (AgentId x = 0; x < n; ++x) {
      for (AgentId y = x + 1; y < n; ++y) {
        std::vector<int> labels;
        for (AgentId i : axis) {
          const auto& r = options[i][pick[i]];
          if (r[x] >= 0 && r[y] >= 0) labels.push_back(r[x] < r[y] ? 1 : -1);
        }
        if (!monotone(labels)) return false;
      }
    }
    return true;
  };
  std::function<bool(AgentId)> rec = [&](AgentId i) {
    if (i == n) return check();
    for (pick[i] = 0; pick[i] < options[i].size(); ++pick[i]) {
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

bool any_order(const Profile& p,
               bool (*pred)(const Profile&, const std::vector<AgentId>&)) {
  std::vector<AgentId> axis(p.size());
  std::iota(axis.begin(), axis.end(), AgentId{0});
  do {
    if (pred(p, axis)) return true;
  } while (std::next_permutation(axis.begin(), axis.end()));
  return false;
}

std::vector<std::vector<sroom::Vertex>> independent_sets(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<sroom::Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<sroom::Vertex> set;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) set.push_back(v);
    }
    if (set.size() != k) continue;
    bool ok = true;
    for (const auto& [a, b] : g.edges()) {
      ok = ok && !((mask >> a & 1u) && (mask >> b & 1u));
    }
    if (ok) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_independent_set(const Graph& g, std::size_t k) {
  return !independent_sets(g, k).empty();
}

bool betweenness_feasible(const sroom::BetweennessInstance& b) {
  std::vector<std::size_t> order(b.universe);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> pos(b.universe);
  do {
    for (std::size_t t = 0; t < order.size(); ++t) pos[order[t]] = t;
    bool ok = true;
    for (const auto& [x, y, z] : b.triples) {
      ok = ok && ((pos[x] < pos[y] && pos[y] < pos[z]) || (pos[z] < pos[y] && pos[y] < pos[x]));
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

Profile random_profile(std::mt19937_64& rng, std::size_t n, double edge_p,
                       double tie_p, bool narcissistic) {
  std::bernoulli_distribution edge(edge_p), tie(tie_p);
  std::vector<std::vector<AgentId>> adj(n);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      if (edge(rng)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  // Give every lonely agent one partner.
  for (AgentId a = 0; a < n; ++a) {
    if (!adj[a].empty()) continue;
    AgentId b = static_cast<AgentId>((a + 1) % n);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  sroom::RawProfile raw(n);
  for (AgentId a = 0; a < n; ++a) {
    auto others = adj[a];
    std::shuffle(others.begin(), others.end(), rng);
    if (narcissistic) raw[a].push_back({a});
    for (std::size_t t = 0; t < others.size(); ++t) {
      const bool extend = t > 0 && tie(rng);
      if (extend) {
        raw[a].back().push_back(others[t]);
      } else {
        raw[a].push_back({others[t]});
      }
    }
  }
  return sroom::validate_profile(std::move(raw));
}

std::vector<Graph> small_graphs() {
  using E = std::vector<sroom::Edge>;
  return {
      Graph(1, E{}),
      Graph(2, E{}),
      Graph(2, E{{0, 1}}),
      Graph(3, E{}),
      Graph(3, E{{0, 1}}),
      Graph(3, E{{0, 1}, {1, 2}}),
      Graph(3, E{{0, 1}, {1, 2}, {0, 2}}),
      Graph(4, E{}),
      Graph(4, E{{0, 1}}),
      Graph(4, E{{0, 1}, {2, 3}}),
      Graph(4, E{{0, 1}, {1, 2}}),
      Graph(4, E{{0, 1}, {0, 2}, {0, 3}}),
      Graph(4, E{{0, 1}, {1, 2}, {2, 3}}),
      Graph(4, E{{0, 1}, {1, 2}, {0, 2}}),
      Graph(4, E{{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
      Graph(4, E{{0, 1}, {1, 2}, {0, 2}, {2, 3}}),
      Graph(4, E{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}}),
      Graph(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
  };
}

}  // namespace oracle
