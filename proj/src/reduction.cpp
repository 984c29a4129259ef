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

#include "sroom/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sroom/error.hpp"
#include "sroom/stability.hpp"

namespace sroom {
namespace {

void append_strict(std::vector<TieGroup>& groups, std::span<const AgentId> ids) {
  for (AgentId id : ids) groups.push_back({id});
}

void require_disjoint(std::span<const AgentId> own, std::span<const AgentId> other,
                      const char* what) {
  for (AgentId x : other) {
    if (std::find(own.begin(), own.end(), x) != own.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " overlaps the gadget agents at " +
                      std::to_string(x));
    }
  }
}

// Writes each order into its owner's slot.
void place(RawProfile& raw, const std::vector<PreferenceOrder>& orders) {
  for (const auto& o : orders) raw[o.owner()] = o.groups();
}

Comparison label(const Profile& p, AgentId i, AgentId x, AgentId y) {
  const int rx = p.rank(i, x);
  const int ry = p.rank(i, y);
  if (rx == ry) return Comparison::kTied;
  return rx < ry ? Comparison::kStrictlyBetter : Comparison::kStrictlyWorse;
}

}  // namespace

std::vector<PreferenceOrder> selector_gadget(const std::array<AgentId, 5>& a,
                                             std::span<const AgentId> x) {
  if (x.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "selector gadget needs a non-empty X");
  }
  require_disjoint(a, x, "X");
  std::vector<PreferenceOrder> out;
  out.emplace_back(a[0], std::vector<TieGroup>{{a[0]}, {a[4]}, {a[1]}});
  out.emplace_back(a[1], std::vector<TieGroup>{{a[1]}, {a[0]}, {a[2]}});
  out.emplace_back(a[2], std::vector<TieGroup>{{a[2]}, {a[1]}, {a[3]}});
  out.emplace_back(a[3], std::vector<TieGroup>{{a[3]}, {a[2]}, {a[4]}});
  out.emplace_back(a[4], std::vector<TieGroup>{
                             {a[4]}, TieGroup(x.begin(), x.end()), {a[3]}, {a[0]}});
  return out;
}

std::vector<PreferenceOrder> vertex_gadget(
    const std::array<AgentId, 10>& x, std::span<const AgentId> a,
    std::span<const AgentId> b,
    const std::array<std::optional<AgentId>, 4>& hooks) {
  require_disjoint(x, a, "A");
  require_disjoint(x, b, "B");
  for (const auto& h : hooks) {
    if (h) require_disjoint(x, std::span<const AgentId>(&*h, 1), "hook");
  }
  std::vector<PreferenceOrder> out;
  // x1 and x10 close the cycle through A and B.
  {
    std::vector<TieGroup> g{{x[0]}, {x[9]}};
    append_strict(g, a);
    g.push_back({x[1]});
    out.emplace_back(x[0], std::move(g));
  }
  for (std::size_t s = 1; s < 9; ++s) {
    std::vector<TieGroup> g{{x[s]}, {x[s - 1]}};
    // Even superscripts 2, 4, 6, 8 sit at indices 1, 3, 5, 7.
    if (s % 2 == 1 && hooks[s / 2]) g.push_back({*hooks[s / 2]});
    g.push_back({x[s + 1]});
    out.emplace_back(x[s], std::move(g));
  }
  {
    std::vector<TieGroup> g{{x[9]}, {x[8]}};
    append_strict(g, b);
    g.push_back({x[0]});
    out.emplace_back(x[9], std::move(g));
  }
  return out;
}

AgentId vertex_agent(std::size_t /*n*/, std::size_t vertex, int slot) {
  return static_cast<AgentId>(10 * vertex + static_cast<std::size_t>(slot - 1));
}

AgentId selector_a_agent(std::size_t n, std::size_t /*k*/, std::size_t j, int slot) {
  return static_cast<AgentId>(10 * n + 5 * j + static_cast<std::size_t>(slot - 1));
}

AgentId selector_b_agent(std::size_t n, std::size_t k, std::size_t j, int slot) {
  return static_cast<AgentId>(10 * n + 5 * k + 5 * j +
                              static_cast<std::size_t>(slot - 1));
}

ReducedInstance independent_set_to_sr(const Graph& graph, std::size_t k) {
  const std::size_t n = graph.vertex_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kKOutOfRange, "k = " + std::to_string(k) +
                                             " outside 1.." + std::to_string(n));
  }
  ReducedInstance inst;
  inst.graph = graph;
  inst.k = k;
  inst.coloring = misra_gries_edge_coloring(graph);

  const std::size_t total = 10 * n + 10 * k;
  inst.roles.resize(total);
  RawProfile raw(total);

  std::vector<AgentId> u1(n), u10(n), a5(k), b5(k);
  for (std::size_t i = 0; i < n; ++i) {
    u1[i] = vertex_agent(n, i, 1);
    u10[i] = vertex_agent(n, i, 10);
  }
  for (std::size_t j = 0; j < k; ++j) {
    a5[j] = selector_a_agent(n, k, j, 5);
    b5[j] = selector_b_agent(n, k, j, 5);
  }

  for (std::size_t j = 0; j < k; ++j) {
    std::array<AgentId, 5> a{}, b{};
    for (int s = 1; s <= 5; ++s) {
      a[s - 1] = selector_a_agent(n, k, j, s);
      b[s - 1] = selector_b_agent(n, k, j, s);
      inst.roles[a[s - 1]] = {RoleKind::kSelectorA, j, s};
      inst.roles[b[s - 1]] = {RoleKind::kSelectorB, j, s};
    }
    place(raw, selector_gadget(a, u1));
    place(raw, selector_gadget(b, u10));
  }

  // hooks[i][c] is r_i^{2(c+1)}.
  std::vector<std::array<std::optional<AgentId>, 4>> hooks(n);
  for (std::size_t c = 0; c < 4; ++c) {
    const int slot = 2 * static_cast<int>(c + 1);
    for (const auto& [i, j] : inst.coloring.classes[c]) {
      hooks[i][c] = vertex_agent(n, j, slot);
      hooks[j][c] = vertex_agent(n, i, slot);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::array<AgentId, 10> x{};
    for (int s = 1; s <= 10; ++s) {
      x[s - 1] = vertex_agent(n, i, s);
      inst.roles[x[s - 1]] = {RoleKind::kVertex, i, s};
    }
    place(raw, vertex_gadget(x, a5, b5, hooks[i]));
  }
  inst.profile = validate_profile(std::move(raw));

  std::vector<AgentId> axis;
  axis.reserve(total);
  for (auto sel : {&selector_a_agent, &selector_b_agent}) {
    for (std::size_t j = k; j-- > 0;) {
      for (int s : {3, 2, 1, 4, 5}) axis.push_back(sel(n, k, j, s));
    }
  }
  for (int s : {10, 9}) {
    for (std::size_t i = 0; i < n; ++i) axis.push_back(vertex_agent(n, i, s));
  }
  for (std::size_t c = 0; c < 4; ++c) {
    const int lo = 2 * static_cast<int>(c) + 1;
    std::vector<bool> covered(n, false);
    for (const auto& [i, j] : inst.coloring.classes[c]) {  // sorted, i < j
      for (std::size_t v : {i, j}) {
        axis.push_back(vertex_agent(n, v, lo));
        axis.push_back(vertex_agent(n, v, lo + 1));
        covered[v] = true;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (covered[v]) continue;
      axis.push_back(vertex_agent(n, v, lo));
      axis.push_back(vertex_agent(n, v, lo + 1));
    }
  }
  inst.sp_witness = WitnessOrder(std::move(axis));
  return inst;
}

Matching independent_set_to_matching(const ReducedInstance& instance,
                                     std::span<const Vertex> independent_set) {
  const std::size_t n = instance.graph.vertex_count();
  const std::size_t k = instance.k;
  std::vector<Vertex> chosen(independent_set.begin(), independent_set.end());
  std::sort(chosen.begin(), chosen.end());
  for (Vertex v : chosen) {
    if (v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " out of range");
    }
  }
  if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex set has a repeated vertex");
  }
  if (chosen.size() != k) {
    throw Error(ErrorCode::kWrongSize, "vertex set has size " +
                                           std::to_string(chosen.size()) +
                                           ", expected " + std::to_string(k));
  }
  for (std::size_t x = 0; x < chosen.size(); ++x) {
    for (std::size_t y = x + 1; y < chosen.size(); ++y) {
      if (instance.graph.adjacent(chosen[x], chosen[y])) {
        throw Error(ErrorCode::kNotIndependent,
                    "vertices " + std::to_string(chosen[x]) + " and " +
                        std::to_string(chosen[y]) + " are adjacent");
      }
    }
  }

  std::vector<AgentPair> pairs;
  std::vector<bool> is_chosen(n, false);
  for (std::size_t j = 0; j < k; ++j) {
    const Vertex v = chosen[j];
    is_chosen[v] = true;
    pairs.push_back(make_pair_sorted(selector_a_agent(n, k, j, 5), vertex_agent(n, v, 1)));
    pairs.push_back(make_pair_sorted(selector_b_agent(n, k, j, 5), vertex_agent(n, v, 10)));
    for (auto sel : {&selector_a_agent, &selector_b_agent}) {
      pairs.push_back({sel(n, k, j, 1), sel(n, k, j, 2)});
      pairs.push_back({sel(n, k, j, 3), sel(n, k, j, 4)});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const int first = is_chosen[v] ? 2 : 1;
    for (int s = first; s + 1 <= (is_chosen[v] ? 9 : 10); s += 2) {
      pairs.push_back({vertex_agent(n, v, s), vertex_agent(n, v, s + 1)});
    }
  }
  Matching m(std::move(pairs));
  if (!is_stable(instance.profile, m)) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "matching built from an independent set is not stable");
  }
  return m;
}

std::vector<Vertex> sr_matching_to_independent_set(const ReducedInstance& instance,
                                                   const Matching& matching) {
  if (!is_stable(instance.profile, matching)) {
    throw Error(ErrorCode::kUnstableMatching, "matching is not stable");
  }
  const std::size_t n = instance.graph.vertex_count();
  const auto partner = matching.partner_table(instance.profile.size());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    const AgentId p = partner[vertex_agent(n, v, 10)];
    if (p == kNoAgent) continue;
    const auto& role = instance.roles[p];
    if (role.kind == RoleKind::kSelectorB && role.slot == 5) out.push_back(v);
  }
  bool ok = out.size() == instance.k;
  for (std::size_t x = 0; ok && x < out.size(); ++x) {
    for (std::size_t y = x + 1; ok && y < out.size(); ++y) {
      ok = !instance.graph.adjacent(out[x], out[y]);
    }
  }
  if (!ok) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "extracted vertex set is not an independent set of size " +
                    std::to_string(instance.k));
  }
  return out;
}

CrossingCaseVerdict check_pairwise_crossing_cases(const Profile& profile) {
  struct Seen {
    Comparison first;
    bool disagree = false;
    std::vector<AgentId> rankers;
  };
  std::map<AgentPair, Seen> seen;
  for (AgentId i = 0; i < profile.size(); ++i) {
    std::vector<AgentId> acc;
    for (const auto& g : profile.order(i).groups()) acc.insert(acc.end(), g.begin(), g.end());
    std::sort(acc.begin(), acc.end());
    for (std::size_t x = 0; x < acc.size(); ++x) {
      for (std::size_t y = x + 1; y < acc.size(); ++y) {
        const AgentPair p{acc[x], acc[y]};
        const Comparison c = label(profile, i, p.first, p.second);
        auto [it, fresh] = seen.try_emplace(p, Seen{c, false, {}});
        if (!fresh && it->second.first != c) it->second.disagree = true;
        it->second.rankers.push_back(i);
      }
    }
  }
  for (const auto& [p, s] : seen) {
    if (!s.disagree) continue;
    // rankers is ascending and p.first < p.second.
    if (s.rankers != std::vector<AgentId>{p.first, p.second}) {
      return {false, p};
    }
  }
  return {};
}

void validate_betweenness(const BetweennessInstance& instance) {
  for (const auto& t : instance.triples) {
    for (std::size_t e : t) {
      if (e >= instance.universe) {
        throw Error(ErrorCode::kInvalidArgument,
                    "triple element " + std::to_string(e) + " out of range");
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::kInvalidArgument, "triple elements must be distinct");
    }
  }
}

Profile betweenness_to_sp_instance(const BetweennessInstance& instance) {
  validate_betweenness(instance);
  const std::size_t n = instance.universe;
  const std::size_t m = instance.triples.size();
  RawProfile raw(n + 2 * m);
  // Iterating a_1..a_m, then a'_1..a'_m keeps every element order consistent
  // with L.
  for (std::size_t j = 0; j < m; ++j) {
    const auto [x, y, z] = instance.triples[j];
    const auto a = static_cast<AgentId>(n + j);
    raw[a] = {{static_cast<AgentId>(y)}, {static_cast<AgentId>(x)}, {static_cast<AgentId>(z)}};
    for (std::size_t e : instance.triples[j]) raw[e].push_back({a});
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto [x, y, z] = instance.triples[j];
    const auto a = static_cast<AgentId>(n + m + j);
    raw[a] = {{static_cast<AgentId>(y)}, {static_cast<AgentId>(z)}, {static_cast<AgentId>(x)}};
    for (std::size_t e : instance.triples[j]) raw[e].push_back({a});
  }
  return validate_profile(std::move(raw), ValidationMode::kAllowIsolated);
}

Profile betweenness_to_sc_instance(const BetweennessInstance& instance) {
  validate_betweenness(instance);
  const std::size_t n = instance.universe;
  const std::size_t m = instance.triples.size();
  RawProfile raw(n + 3 * m);
  for (std::size_t j = m; j-- > 0;) {
    const auto& t = instance.triples[j];
    const auto a = static_cast<AgentId>(n + 3 * j);
    const AgentId b = a + 1;
    const AgentId c = a + 2;
    std::array<std::size_t, 3> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    for (AgentId agent : {a, b, c}) {
      for (std::size_t e : sorted) raw[agent].push_back({static_cast<AgentId>(e)});
    }
    const std::array<std::array<AgentId, 3>, 3> blocks{{{a, b, c}, {b, a, c}, {c, b, a}}};
    for (std::size_t pos = 0; pos < 3; ++pos) {
      for (AgentId agent : blocks[pos]) raw[t[pos]].push_back({agent});
    }
  }
  return validate_profile(std::move(raw), ValidationMode::kAllowIsolated);
}

}  // namespace sroom
