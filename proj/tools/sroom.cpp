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

// sroom: command-line driver.
//
// Exit codes: 0 found / stable / ok, 1 none / unstable, 2 error. Errors go to
// stderr as a single line "error <Kind>: <message>".

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sroom/bt_solver.hpp"
#include "sroom/error.hpp"
#include "sroom/fixtures.hpp"
#include "sroom/generators.hpp"
#include "sroom/io.hpp"
#include "sroom/reduction.hpp"
#include "sroom/stability.hpp"
#include "sroom/structure.hpp"

namespace {

using namespace sroom;

constexpr int kOk = 0;
constexpr int kNone = 1;
constexpr int kFailure = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

SearchOptions search_options(std::optional<std::uint64_t> budget) {
  SearchOptions opts;
  if (const char* env = std::getenv("SR_SEARCH_BUDGET")) {
    try {
      opts.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "SR_SEARCH_BUDGET is not a number: '" + std::string(env) + "'");
    }
  }
  if (budget) opts.node_budget = *budget;
  return opts;
}

bool has_independent_set(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n > 30) {
    throw Error(ErrorCode::kInvalidArgument,
                "brute-force independent set check limited to 30 vertices");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    bool ok = true;
    for (const auto& [a, b] : g.edges()) {
      if ((mask >> a & 1) && (mask >> b & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::string agents_str(const std::vector<AgentId>& ids) {
  std::string s;
  for (AgentId a : ids) s += (s.empty() ? "" : " ") + std::to_string(a);
  return s;
}

int cmd_check(const std::string& path, const std::string& order_path) {
  const Profile p = parse_profile(read_file(path), ValidationMode::kAllowIsolated);
  std::cout << "agents " << p.size() << "\n"
            << "complete " << yes_no(is_complete(p)) << "\n"
            << "ties " << yes_no(has_ties(p)) << "\n"
            << "narcissistic " << yes_no(is_narcissistic(p)) << "\n";
  for (const auto& w : profile_warnings(p)) std::cout << "warning " << w << "\n";
  if (order_path.empty()) return kOk;

  const WitnessOrder order = parse_order(read_file(order_path));
  if (order.size() != p.size()) {
    throw Error(ErrorCode::kInvalidOrder, "order has " + std::to_string(order.size()) +
                                              " agents, profile has " +
                                              std::to_string(p.size()));
  }
  const auto sp = is_single_peaked_wrt(p, order);
  std::cout << "single-peaked " << yes_no(sp.holds);
  if (sp.violation) {
    const auto& v = *sp.violation;
    std::cout << " (agent " << v.agent << " on " << v.x << " " << v.y << " " << v.z << ")";
  }
  std::cout << "\n";
  const auto tssc = is_tssc_wrt(p, order);
  std::cout << "tie-sensitive-single-crossing " << yes_no(tssc.holds);
  if (tssc.pair) std::cout << " (pair " << tssc.pair->first << " " << tssc.pair->second << ")";
  std::cout << "\n";
  std::cout << "single-crossing " << yes_no(is_sc_wrt(p, order)) << "\n";
  return kOk;
}

int cmd_solve(const std::string& path, const std::string& algorithm,
              const std::string& out_path) {
  const Profile p = parse_profile(read_file(path));
  if (algorithm == "brute") {
    const auto m = find_stable_matching(p, search_options(std::nullopt));
    if (!m) {
      std::cout << "NO STABLE MATCHING\n";
      return kNone;
    }
    emit(serialize_matching(*m), out_path);
    return kOk;
  }
  try {
    const auto result = bt_solve(p);
    emit(serialize_matching(result.matching), out_path);
    return kOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoMutualPair) throw;
    std::cout << "NO MUTUAL PAIR; remaining agents: " << agents_str(e.agents()) << "\n";
    return kNone;
  }
}

int cmd_enumerate(const std::string& path) {
  const Profile p = parse_profile(read_file(path));
  const auto all = enumerate_stable_matchings(p, search_options(std::nullopt));
  std::cout << "stable-matchings " << all.size() << "\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::cout << "# matching " << i + 1 << "\n" << serialize_matching(all[i]);
  }
  return all.empty() ? kNone : kOk;
}

int cmd_verify(const std::string& profile_path, const std::string& matching_path) {
  const Profile p = parse_profile(read_file(profile_path));
  const Matching m = parse_matching(read_file(matching_path));
  const auto blocking = find_blocking_pairs(p, m);
  if (blocking.empty()) {
    std::cout << "STABLE\n";
    return kOk;
  }
  for (const auto& b : blocking) {
    std::cout << "blocking " << b.pair.first << " " << b.pair.second << "\n";
  }
  return kNone;
}

int cmd_reduce_is(const std::string& graph_path, std::size_t k, const std::string& prefix) {
  const Graph g = parse_graph(read_file(graph_path));
  const ReducedInstance inst = independent_set_to_sr(g, k);
  write_file(prefix + ".prof", serialize_profile(inst.profile));
  write_file(prefix + ".order", serialize_order(inst.sp_witness));
  write_file(prefix + ".roles", serialize_roles(inst.roles));
  std::cout << "agents " << inst.profile.size() << "\n";
  return kOk;
}

int cmd_reduce_btw(const std::string& path, bool sp, const std::string& out_path) {
  const BetweennessInstance b = parse_betweenness(read_file(path));
  emit(serialize_profile(sp ? betweenness_to_sp_instance(b) : betweenness_to_sc_instance(b)),
       out_path);
  return kOk;
}

int cmd_verify_reduction(const std::string& graph_path, std::size_t k,
                         std::optional<std::uint64_t> budget) {
  const Graph g = parse_graph(read_file(graph_path));
  const ReducedInstance inst = independent_set_to_sr(g, k);
  const bool is_exists = has_independent_set(g, k);
  const auto m = find_stable_matching(inst.profile, search_options(budget));
  const std::string ks = std::to_string(k);
  std::string detail = (is_exists ? "IS of size " + ks + " exists" : "no IS of size " + ks) +
                       "; " + (m ? "stable matching found" : "no stable matching");
  bool pass = is_exists == m.has_value();
  if (pass && m) {
    const auto set = sr_matching_to_independent_set(inst, *m);
    detail += "; extracted {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      detail += (i ? "," : "") + std::to_string(set[i]);
    }
    detail += "}";
  }
  std::cout << (pass ? "PASS" : "FAIL") << " with \"" << detail << "\"\n";
  return pass ? kOk : kNone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable Roommates with structured preferences"};
  app.require_subcommand(1);

  std::string profile_path, order_path, out_path, algorithm = "bt", matching_path;
  std::string graph_path, btw_path;
  std::size_t k = 0;
  std::optional<std::uint64_t> budget;

  auto* check = app.add_subcommand("check", "report structural properties");
  check->add_option("profile", profile_path)->required();
  check->add_option("--order", order_path, "witness order file");

  auto* solve = app.add_subcommand("solve", "find a stable matching");
  solve->add_option("profile", profile_path)->required();
  solve->add_option("--algorithm", algorithm)->check(CLI::IsMember({"bt", "brute"}));
  solve->add_option("--out", out_path, "write the matching here");

  auto* enumerate = app.add_subcommand("enumerate", "list all stable matchings");
  enumerate->add_option("profile", profile_path)->required();

  auto* verify = app.add_subcommand("verify", "list blocking pairs");
  verify->add_option("profile", profile_path)->required();
  verify->add_option("matching", matching_path)->required();

  auto* reduce = app.add_subcommand("reduce", "build hardness instances");
  reduce->require_subcommand(1);
  auto* is2sr = reduce->add_subcommand("is2sr", "Independent Set to Stable Roommates");
  is2sr->add_option("graph", graph_path)->required();
  is2sr->add_option("k", k)->required();
  is2sr->add_option("--out", out_path, "output prefix for .prof/.order/.roles")->required();
  auto* btw2sp = reduce->add_subcommand("btw2sp", "Betweenness to single-peakedness");
  btw2sp->add_option("betweenness", btw_path)->required();
  btw2sp->add_option("--out", out_path);
  auto* btw2sc = reduce->add_subcommand("btw2sc", "Betweenness to single-crossingness");
  btw2sc->add_option("betweenness", btw_path)->required();
  btw2sc->add_option("--out", out_path);

  auto* verify_red = app.add_subcommand("verify-reduction",
                                        "check IS existence against stable matching existence");
  verify_red->add_option("graph", graph_path)->required();
  verify_red->add_option("k", k)->required();
  verify_red->add_option("--budget", budget, "search node budget");

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  std::size_t gen_n = 2;
  std::uint64_t seed = 0;
  double probability = 0.0;
  std::string axis_out, fixture_name;
  auto* gen_sp = gen->add_subcommand("sp-profile", "narcissistic single-peaked profile");
  gen_sp->add_option("--n", gen_n, "number of agents (even)")->required();
  gen_sp->add_option("--seed", seed);
  gen_sp->add_option("--ties", probability, "tie probability (enables ties)");
  gen_sp->add_option("--out", out_path);
  gen_sp->add_option("--axis-out", axis_out, "write the axis order here");
  auto* gen_graph = gen->add_subcommand("graph", "random graph of maximum degree 3");
  gen_graph->add_option("--n", gen_n)->required();
  gen_graph->add_option("--p", probability, "edge probability")->required();
  gen_graph->add_option("--seed", seed);
  gen_graph->add_option("--out", out_path);
  auto* gen_fixture = gen->add_subcommand("fixture", "a built-in example profile");
  gen_fixture->add_option("name", fixture_name)->required();
  gen_fixture->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error Usage: " << e.what() << "\n";
    return kFailure;
  }

  try {
    if (*check) return cmd_check(profile_path, order_path);
    if (*solve) return cmd_solve(profile_path, algorithm, out_path);
    if (*enumerate) return cmd_enumerate(profile_path);
    if (*verify) return cmd_verify(profile_path, matching_path);
    if (*is2sr) return cmd_reduce_is(graph_path, k, out_path);
    if (*btw2sp) return cmd_reduce_btw(btw_path, true, out_path);
    if (*btw2sc) return cmd_reduce_btw(btw_path, false, out_path);
    if (*verify_red) return cmd_verify_reduction(graph_path, k, budget);
    if (*gen_sp) {
      GeneratorConfig cfg;
      cfg.n_agents = gen_n;
      cfg.seed = seed;
      cfg.allow_ties = gen_sp->count("--ties") > 0;
      cfg.tie_probability = probability;
      const auto out = gen_narcissistic_sp(cfg);
      emit(serialize_profile(out.profile), out_path);
      if (!axis_out.empty()) write_file(axis_out, serialize_order(out.axis));
      return kOk;
    }
    if (*gen_graph) {
      emit(serialize_graph(gen_degree3_graph(gen_n, probability, seed)), out_path);
      return kOk;
    }
    if (*gen_fixture) {
      emit(serialize_profile(fixture(fixture_name)), out_path);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error Internal: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
