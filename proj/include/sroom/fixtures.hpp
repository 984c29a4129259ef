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

// Hand-written example profiles. Published labels are 1-based; agent id i
// here is label i + 1 everywhere.
//
//   example1            1: 1>2>3>4   2: 2>3>1>4   3: 3>2~4>1   4: 4>3>2>1
//   example1_modified   as example1 but 3: 3>1>2>4
//   p1                  1: 1>6>5  2: 2>5>6  3: 3>5>6  4: 4>5>6
//                       5: 5>1>2>3>4  6: 6>4>2>3>1
//   p2                  1: 1>2>3>4  2: 2>4>1  3: 3>1>4  4: 4>3>2>1
//   p3                  1: 1>5>2  2: 2>1>3  3: 3>2>4  4: 4>3>5
//                       5: 5>4>1>6  6: 6>5
//   fig2a               1: 1>2>3>4  2: 2>3>4>1  3: 3>2>1>4  4: 4>3>2>1
//   fig2b               1: 1~2>3>4  2: 1>2>4>3  3: 4>2>3>1  4: 4>3>2>1

#ifndef SROOM_FIXTURES_HPP_
#define SROOM_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sroom/profile.hpp"

namespace sroom {

struct Fixture {
  std::string name;
  Profile profile;
  // labels[id] is the published 1-based label of agent id.
  std::vector<int> labels;
};

const std::vector<std::string>& fixture_names();

// Throws kUnknownFixture.
Fixture load_fixture(std::string_view name);
Profile fixture(std::string_view name);

// Converts pairs written with 1-based labels.
Matching matching_from_labels(std::vector<std::pair<int, int>> labelled);

}  // namespace sroom

#endif  // SROOM_FIXTURES_HPP_
