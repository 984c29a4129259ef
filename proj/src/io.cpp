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

#include "sroom/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "sroom/error.hpp"

namespace sroom {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits into non-empty lines of tokens. ':' and '|' become tokens of their
// own so "pref 0:0|1" and "pref 0 : 0 | 1" read the same.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::string spaced;
    for (char c : raw) {
      if (c == ':' || c == '|') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    std::istringstream in(spaced);
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + msg);
}

std::size_t number(const Line& line, std::size_t idx) {
  if (idx >= line.tokens.size()) fail(line.number, "missing number");
  const std::string& tok = line.tokens[idx];
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line.number, "expected a non-negative integer, got '" + tok + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line.number, "'" + line.tokens[0] + "' expects " +
                          std::to_string(count - 1) + " argument(s)");
  }
}

// Reads the "<keyword> N" header that must come first.
std::size_t header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty() || lines[0].tokens[0] != keyword) {
    fail(lines.empty() ? 1 : lines[0].number, "expected '" + keyword + " <N>' header");
  }
  expect_arity(lines[0], 2);
  return number(lines[0], 1);
}

void expect_keyword(const Line& line, const std::string& keyword) {
  if (line.tokens[0] != keyword) {
    fail(line.number, "unexpected '" + line.tokens[0] + "', expected '" + keyword + "'");
  }
}

std::size_t bounded(const Line& line, std::size_t idx, std::size_t limit,
                    const char* what) {
  const std::size_t v = number(line, idx);
  if (v >= limit) {
    fail(line.number, std::string(what) + " " + std::to_string(v) + " out of range");
  }
  return v;
}

}  // namespace

Profile parse_profile(std::string_view text, ValidationMode mode) {
  const auto lines = tokenize(text);
  const std::size_t n = header(lines, "agents");
  if (n == 0) fail(lines[0].number, "profile needs at least one agent");
  std::vector<std::optional<std::vector<TieGroup>>> orders(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    expect_keyword(line, "pref");
    if (line.tokens.size() < 3 || line.tokens[2] != ":") {
      fail(line.number, "expected 'pref <id>: ...'");
    }
    const std::size_t owner = bounded(line, 1, n, "agent");
    if (orders[owner]) {
      fail(line.number, "second pref line for agent " + std::to_string(owner));
    }
    std::vector<TieGroup> groups;
    TieGroup current;
    for (std::size_t t = 3; t < line.tokens.size(); ++t) {
      if (line.tokens[t] == "|") {
        if (current.empty()) fail(line.number, "empty tie group");
        groups.push_back(std::move(current));
        current.clear();
      } else {
        // Range and duplicate checks are left to validate_profile.
        current.push_back(static_cast<AgentId>(number(line, t)));
      }
    }
    if (!current.empty()) {
      groups.push_back(std::move(current));
    } else if (!groups.empty()) {
      fail(line.number, "empty tie group");
    }
    orders[owner] = std::move(groups);
  }
  RawProfile raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!orders[i]) {
      throw Error(ErrorCode::kParseError,
                  "missing pref line for agent " + std::to_string(i));
    }
    raw[i] = std::move(*orders[i]);
  }
  return validate_profile(std::move(raw), mode);
}

std::string serialize_profile(const Profile& profile) {
  std::string out = "agents " + std::to_string(profile.size()) + "\n";
  for (AgentId i = 0; i < profile.size(); ++i) {
    out += "pref " + std::to_string(i) + ":";
    bool first_group = true;
    for (const auto& g : profile.order(i).groups()) {
      if (!first_group) out += " |";
      first_group = false;
      for (AgentId x : g) out += " " + std::to_string(x);
    }
    out += "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t n = header(lines, "vertices");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    expect_keyword(line, "edge");
    expect_arity(line, 3);
    Vertex a = bounded(line, 1, n, "vertex");
    Vertex b = bounded(line, 2, n, "vertex");
    if (a == b) fail(line.number, "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) fail(line.number, "duplicate edge");
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& graph) {
  std::string out = "vertices " + std::to_string(graph.vertex_count()) + "\n";
  for (const auto& [a, b] : graph.edges()) {
    out += "edge " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

BetweennessInstance parse_betweenness(std::string_view text) {
  const auto lines = tokenize(text);
  BetweennessInstance inst;
  inst.universe = header(lines, "universe");
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    expect_keyword(line, "triple");
    expect_arity(line, 4);
    std::array<std::size_t, 3> t{};
    for (std::size_t e = 0; e < 3; ++e) t[e] = bounded(line, e + 1, inst.universe, "element");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      fail(line.number, "triple elements must be distinct");
    }
    if (!seen.insert(t).second) fail(line.number, "duplicate triple");
    inst.triples.push_back(t);
  }
  return inst;
}

std::string serialize_betweenness(const BetweennessInstance& instance) {
  std::string out = "universe " + std::to_string(instance.universe) + "\n";
  for (const auto& t : instance.triples) {
    out += "triple " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
           std::to_string(t[2]) + "\n";
  }
  return out;
}

Matching parse_matching(std::string_view text) {
  std::vector<AgentPair> pairs;
  std::set<AgentPair> seen;
  for (const Line& line : tokenize(text)) {
    expect_keyword(line, "pair");
    expect_arity(line, 3);
    const auto a = static_cast<AgentId>(number(line, 1));
    const auto b = static_cast<AgentId>(number(line, 2));
    if (a == b) fail(line.number, "agent paired with itself");
    const auto p = make_pair_sorted(a, b);
    if (!seen.insert(p).second) fail(line.number, "duplicate pair");
    pairs.push_back(p);
  }
  return Matching(std::move(pairs));
}

std::string serialize_matching(const Matching& matching) {
  std::string out;
  for (const auto& [a, b] : matching.pairs()) {
    out += "pair " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

WitnessOrder parse_order(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1 || lines[0].tokens[0] != "order") {
    fail(lines.empty() ? 1 : lines[0].number, "expected a single 'order ...' line");
  }
  std::vector<AgentId> seq;
  for (std::size_t t = 1; t < lines[0].tokens.size(); ++t) {
    seq.push_back(static_cast<AgentId>(number(lines[0], t)));
  }
  return WitnessOrder(std::move(seq));
}

std::string serialize_order(const WitnessOrder& order) {
  std::string out = "order";
  for (AgentId a : order.sequence()) out += " " + std::to_string(a);
  return out + "\n";
}

std::vector<AgentRole> parse_roles(std::string_view text) {
  std::vector<std::optional<AgentRole>> slots;
  for (const Line& line : tokenize(text)) {
    expect_keyword(line, "role");
    expect_arity(line, 5);
    const std::size_t agent = number(line, 1);
    AgentRole role{};
    const std::string& kind = line.tokens[2];
    if (kind == "vertex") {
      role.kind = RoleKind::kVertex;
    } else if (kind == "a") {
      role.kind = RoleKind::kSelectorA;
    } else if (kind == "b") {
      role.kind = RoleKind::kSelectorB;
    } else {
      fail(line.number, "unknown role kind '" + kind + "'");
    }
    role.index = number(line, 3);
    role.slot = static_cast<int>(number(line, 4));
    const int max_slot = role.kind == RoleKind::kVertex ? 10 : 5;
    if (role.slot < 1 || role.slot > max_slot) fail(line.number, "slot out of range");
    if (agent >= slots.size()) slots.resize(agent + 1);
    if (slots[agent]) fail(line.number, "second role for agent " + std::to_string(agent));
    slots[agent] = role;
  }
  std::vector<AgentRole> out;
  for (std::size_t a = 0; a < slots.size(); ++a) {
    if (!slots[a]) {
      throw Error(ErrorCode::kParseError, "missing role for agent " + std::to_string(a));
    }
    out.push_back(*slots[a]);
  }
  return out;
}

std::string serialize_roles(const std::vector<AgentRole>& roles) {
  std::string out;
  for (std::size_t a = 0; a < roles.size(); ++a) {
    const auto& r = roles[a];
    const char* kind = r.kind == RoleKind::kVertex      ? "vertex"
                       : r.kind == RoleKind::kSelectorA ? "a"
                                                        : "b";
    out += "role " + std::to_string(a) + " " + kind + " " + std::to_string(r.index) +
           " " + std::to_string(r.slot) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path + "' failed");
}

}  // namespace sroom
