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

#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sroom/fixtures.hpp"
#include "sroom/generators.hpp"
#include "sroom/io.hpp"
#include "test_util.hpp"

using namespace sroom;

namespace {

std::string parse_error_message(const std::string& text) {
  try {
    parse_profile(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    return e.what();
  }
  FAIL("no error");
  return {};
}

}  // namespace

TEST_CASE("profile text format") {
  const Profile p = fixture("example1");
  const std::string text = serialize_profile(p);
  CHECK(text ==
        "agents 4\n"
        "pref 0: 0 | 1 | 2 | 3\n"
        "pref 1: 1 | 2 | 0 | 3\n"
        "pref 2: 2 | 1 3 | 0\n"
        "pref 3: 3 | 2 | 1 | 0\n");
  CHECK(parse_profile(text) == p);
  // Comments, blank lines, tight spacing, any line order.
  CHECK(parse_profile("# worked example\nagents 4\n\npref 3:3|2|1|0\n"
                      "pref 2: 2 | 3 1 | 0  # tie\npref 0: 0 | 1 | 2 | 3\n"
                      "pref 1: 1 | 2 | 0 | 3\n") == p);
}

TEST_CASE("profile parse errors") {
  CHECK(parse_error_message("pref 0: 0\n").find("line 1") != std::string::npos);
  CHECK(parse_error_message("agents 2\npref 0: 1\npref 0: 1\n").find("line 3") !=
        std::string::npos);
  CHECK(parse_error_message("agents 2\npref 0: 1\n").find("agent 1") != std::string::npos);
  CHECK(parse_error_message("agents 2\npref 0: 1 | | 0\npref 1: 0\n").find("line 2") !=
        std::string::npos);
  CHECK(parse_error_message("agents 2\npref 0: x\npref 1: 0\n").find("'x'") !=
        std::string::npos);
  CHECK(parse_error_message("agents 2\npref 5: 1\n").find("out of range") !=
        std::string::npos);
  CHECK(parse_error_message("agents 2\npref 0 1\npref 1: 0\n").find("line 2") !=
        std::string::npos);
  // Semantic checks still apply after parsing.
  CHECK_THROWS_CODE(parse_profile("agents 2\npref 0: 1\npref 1: 1\n"),
                    ErrorCode::kAsymmetricAcceptability);
  CHECK_THROWS_CODE(parse_profile("agents 2\npref 0: 1 1\npref 1: 0\n"),
                    ErrorCode::kDuplicateInOrder);
  // An agent with an empty list parses when isolation is allowed.
  CHECK(parse_profile("agents 3\npref 0: 1\npref 1: 0\npref 2:\n",
                      ValidationMode::kAllowIsolated)
            .order(2)
            .groups()
            .empty());
}

TEST_CASE("profile round trips") {
  for (const auto& name : fixture_names()) {
    const Profile p = fixture(name);
    const std::string text = serialize_profile(p);
    CHECK(parse_profile(text) == p);
    CHECK(serialize_profile(parse_profile(text)) == text);
  }
  std::mt19937_64 rng(51);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 2 + rng() % 15;
    const Profile p = oracle::random_profile(rng, n, 0.4, 0.3, round % 2 == 0);
    CHECK(parse_profile(serialize_profile(p)) == p);
  }
}

TEST_CASE("graph format") {
  const Graph g(4, {{2, 3}, {0, 1}});
  const std::string text = serialize_graph(g);
  CHECK(text == "vertices 4\nedge 0 1\nedge 2 3\n");
  CHECK(parse_graph(text) == g);
  CHECK_THROWS_CODE(parse_graph("vertices 3\nedge 0 1\nedge 1 0\n"), ErrorCode::kParseError);
  CHECK_THROWS_CODE(parse_graph("vertices 3\nedge 0 3\n"), ErrorCode::kParseError);
  CHECK_THROWS_CODE(parse_graph("vertices 3\nedge 1 1\n"), ErrorCode::kParseError);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph r = gen_degree3_graph(1 + seed % 12, 0.5, seed);
    CHECK(parse_graph(serialize_graph(r)) == r);
  }
}

TEST_CASE("betweenness format") {
  const BetweennessInstance b{5, {{0, 1, 2}, {4, 3, 1}}};
  const std::string text = serialize_betweenness(b);
  CHECK(text == "universe 5\ntriple 0 1 2\ntriple 4 3 1\n");
  const auto back = parse_betweenness(text);
  CHECK(back.universe == 5);
  CHECK(back.triples == b.triples);
  CHECK_THROWS_CODE(parse_betweenness("universe 3\ntriple 0 1 2\ntriple 0 1 2\n"),
                    ErrorCode::kParseError);
  CHECK_THROWS_CODE(parse_betweenness("universe 3\ntriple 0 1 1\n"), ErrorCode::kParseError);
}

TEST_CASE("matching, order and roles formats") {
  const Matching m({{3, 1}, {0, 2}});
  CHECK(serialize_matching(m) == "pair 0 2\npair 1 3\n");
  CHECK(parse_matching(serialize_matching(m)) == m);
  CHECK(parse_matching("") == Matching{});
  CHECK_THROWS_CODE(parse_matching("pair 0 1\npair 1 0\n"), ErrorCode::kParseError);
  CHECK_THROWS_CODE(parse_matching("pair 0 1\npair 1 2\n"), ErrorCode::kInvalidMatching);

  const WitnessOrder o({2, 0, 1});
  CHECK(serialize_order(o) == "order 2 0 1\n");
  CHECK(parse_order(serialize_order(o)) == o);
  CHECK_THROWS_CODE(parse_order("order 0 0\n"), ErrorCode::kInvalidOrder);

  const auto inst = independent_set_to_sr(Graph(2, {{0, 1}}), 1);
  CHECK(parse_roles(serialize_roles(inst.roles)) == inst.roles);
  CHECK(serialize_roles(inst.roles).substr(0, 20) == "role 0 vertex 0 1\nro");
  CHECK_THROWS_CODE(parse_roles("role 0 vertex 0 11\n"), ErrorCode::kParseError);
  CHECK_THROWS_CODE(parse_roles("role 1 a 0 1\n"), ErrorCode::kParseError);
}

TEST_CASE("file helpers") {
  CHECK_THROWS_CODE(read_file("/nonexistent/x.prof"), ErrorCode::kIoError);
}
