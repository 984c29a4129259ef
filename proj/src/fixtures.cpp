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

#include "sroom/fixtures.hpp"

#include <numeric>

#include "sroom/error.hpp"

namespace sroom {
namespace {

// Orders in 1-based labels, one entry per agent; inner vectors are tie groups.
using Labelled = std::vector<std::vector<std::vector<int>>>;

Labelled labelled_orders(std::string_view name) {
  if (name == "example1") {
    return {{{1}, {2}, {3}, {4}},
            {{2}, {3}, {1}, {4}},
            {{3}, {2, 4}, {1}},
            {{4}, {3}, {2}, {1}}};
  }
  if (name == "example1_modified") {
    return {{{1}, {2}, {3}, {4}},
            {{2}, {3}, {1}, {4}},
            {{3}, {1}, {2}, {4}},
            {{4}, {3}, {2}, {1}}};
  }
  if (name == "p1") {
    return {{{1}, {6}, {5}},
            {{2}, {5}, {6}},
            {{3}, {5}, {6}},
            {{4}, {5}, {6}},
            {{5}, {1}, {2}, {3}, {4}},
            {{6}, {4}, {2}, {3}, {1}}};
  }
  if (name == "p2") {
    return {{{1}, {2}, {3}, {4}},
            {{2}, {4}, {1}},
            {{3}, {1}, {4}},
            {{4}, {3}, {2}, {1}}};
  }
  if (name == "p3") {
    return {{{1}, {5}, {2}},
            {{2}, {1}, {3}},
            {{3}, {2}, {4}},
            {{4}, {3}, {5}},
            {{5}, {4}, {1}, {6}},
            {{6}, {5}}};
  }
  if (name == "fig2a") {
    return {{{1}, {2}, {3}, {4}},
            {{2}, {3}, {4}, {1}},
            {{3}, {2}, {1}, {4}},
            {{4}, {3}, {2}, {1}}};
  }
  if (name == "fig2b") {
    return {{{1, 2}, {3}, {4}},
            {{1}, {2}, {4}, {3}},
            {{4}, {2}, {3}, {1}},
            {{4}, {3}, {2}, {1}}};
  }
  throw Error(ErrorCode::kUnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "example1", "example1_modified", "p1", "p2", "p3", "fig2a", "fig2b"};
  return names;
}

Fixture load_fixture(std::string_view name) {
  const Labelled orders = labelled_orders(name);
  RawProfile raw(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (const auto& group : orders[i]) {
      TieGroup g;
      for (int label : group) g.push_back(static_cast<AgentId>(label - 1));
      raw[i].push_back(std::move(g));
    }
  }
  Fixture f{std::string(name), validate_profile(std::move(raw)),
            std::vector<int>(orders.size())};
  std::iota(f.labels.begin(), f.labels.end(), 1);
  return f;
}

Profile fixture(std::string_view name) { return load_fixture(name).profile; }

Matching matching_from_labels(std::vector<std::pair<int, int>> labelled) {
  std::vector<AgentPair> pairs;
  for (const auto& [a, b] : labelled) {
    pairs.push_back(make_pair_sorted(static_cast<AgentId>(a - 1), static_cast<AgentId>(b - 1)));
  }
  return Matching(std::move(pairs));
}

}  // namespace sroom
