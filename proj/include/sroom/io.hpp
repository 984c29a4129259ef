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

// Line-based text formats. Ids are 0-based; '#' starts a comment; blank
// lines are ignored.
//
//   profile      agents N            graph     vertices N
//                pref 0: 0 | 1 2 | 3           edge 0 1
//   betweenness  universe N          matching  pair 0 1
//                triple 0 1 2
//   order        order 3 1 0 2       roles     role 12 vertex 1 3
//
// Inside a pref line, '|' separates tie groups (best first) and ids within a
// group are tied. Parsers throw kParseError with the line number; parsed
// profiles are then validated as usual.

#ifndef SROOM_IO_HPP_
#define SROOM_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sroom/edge_coloring.hpp"
#include "sroom/profile.hpp"
#include "sroom/reduction.hpp"
#include "sroom/structure.hpp"

namespace sroom {

Profile parse_profile(std::string_view text,
                      ValidationMode mode = ValidationMode::kStrict);
std::string serialize_profile(const Profile& profile);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& graph);

BetweennessInstance parse_betweenness(std::string_view text);
std::string serialize_betweenness(const BetweennessInstance& instance);

Matching parse_matching(std::string_view text);
std::string serialize_matching(const Matching& matching);

WitnessOrder parse_order(std::string_view text);
std::string serialize_order(const WitnessOrder& order);

std::vector<AgentRole> parse_roles(std::string_view text);
std::string serialize_roles(const std::vector<AgentRole>& roles);

// Throw kIoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sroom

#endif  // SROOM_IO_HPP_
