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

#include "sroom/edge_coloring.hpp"

#include <algorithm>
#include <string>

#include "sroom/error.hpp"

namespace sroom {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), adjacency_(vertex_count) {
  for (auto& e : edges) {
    if (e.first >= n_ || e.second >= n_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge {" + std::to_string(e.first) + "," +
                      std::to_string(e.second) + "} names an unknown vertex");
    }
    if (e.first == e.second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "loop at vertex " + std::to_string(e.first));
    }
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate edge {" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + "}");
  }
  for (const auto& [a, b] : edges) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  edges_ = std::move(edges);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

namespace {

class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g), n_(g.vertex_count()), colors_(static_cast<int>(g.max_degree()) + 1),
        color_(n_ * n_, kNone) {}

  EdgeColoring run() {
    for (const auto& [u, v] : g_.edges()) color_edge(u, v);
    EdgeColoring out;
    for (const auto& e : g_.edges()) {
      out.classes[static_cast<std::size_t>(get(e.first, e.second))].push_back(e);
    }
    return out;
  }

 private:
  static constexpr int kNone = -1;

  int get(Vertex a, Vertex b) const { return color_[a * n_ + b]; }
  void set(Vertex a, Vertex b, int c) {
    color_[a * n_ + b] = c;
    color_[b * n_ + a] = c;
  }

  bool is_free(Vertex v, int c) const {
    for (Vertex w : g_.neighbours(v)) {
      if (get(v, w) == c) return false;
    }
    return true;
  }

  int first_free(Vertex v) const {
    for (int c = 0; c < colors_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw Error(ErrorCode::kInternalInvariantViolation,
                "no free colour at vertex " + std::to_string(v));
  }

  // A sequence of distinct neighbours of u where (u, fan[0]) is uncoloured
  // and colour(u, fan[i+1]) is free on fan[i].
  std::vector<Vertex> maximal_fan(Vertex u, Vertex v) const {
    std::vector<Vertex> fan{v};
    bool grown = true;
    while (grown) {
      grown = false;
      for (Vertex w : g_.neighbours(u)) {
        if (std::find(fan.begin(), fan.end(), w) != fan.end()) continue;
        const int c = get(u, w);
        if (c != kNone && is_free(fan.back(), c)) {
          fan.push_back(w);
          grown = true;
          break;
        }
      }
    }
    return fan;
  }

  // Swaps c and d along the maximal path from u alternating d, c, d, ...
  void invert_path(Vertex u, int c, int d) {
    std::vector<Edge> path;
    Vertex prev = u;
    Vertex cur = u;
    int want = d;
    while (true) {
      Vertex next = cur;
      for (Vertex w : g_.neighbours(cur)) {
        if (w != prev && get(cur, w) == want) {
          next = w;
          break;
        }
      }
      if (next == cur) break;
      path.emplace_back(cur, next);
      prev = cur;
      cur = next;
      want = want == d ? c : d;
    }
    for (const auto& [a, b] : path) set(a, b, get(a, b) == d ? c : d);
  }

  bool is_fan_prefix(Vertex u, const std::vector<Vertex>& fan, std::size_t last) const {
    for (std::size_t j = 0; j < last; ++j) {
      const int c = get(u, fan[j + 1]);
      if (c == kNone || !is_free(fan[j], c)) return false;
    }
    return true;
  }

  void color_edge(Vertex u, Vertex v) {
    auto fan = maximal_fan(u, v);
    const int c = first_free(u);
    const int d = first_free(fan.back());
    if (c != d) invert_path(u, c, d);

    std::size_t pick = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (is_free(fan[i], d) && is_fan_prefix(u, fan, i)) {
        pick = i;
        break;
      }
    }
    if (pick == fan.size()) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "no fan rotation available for edge {" + std::to_string(u) +
                      "," + std::to_string(v) + "}");
    }
    for (std::size_t j = 0; j < pick; ++j) set(u, fan[j], get(u, fan[j + 1]));
    set(u, fan[pick], d);
  }

  const Graph& g_;
  std::size_t n_;
  int colors_;
  std::vector<int> color_;
};

}  // namespace

EdgeColoring misra_gries_edge_coloring(const Graph& graph) {
  if (graph.max_degree() > 3) {
    throw Error(ErrorCode::kDegreeTooHigh,
                "maximum degree " + std::to_string(graph.max_degree()) +
                    " exceeds 3");
  }
  return MisraGries(graph).run();
}

bool is_proper_edge_coloring(const Graph& graph, const EdgeColoring& coloring) {
  std::vector<Edge> all;
  for (const auto& cls : coloring.classes) {
    std::vector<bool> used(graph.vertex_count(), false);
    for (const auto& [a, b] : cls) {
      if (a >= graph.vertex_count() || b >= graph.vertex_count()) return false;
      if (used[a] || used[b]) return false;
      used[a] = used[b] = true;
      all.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
  }
  std::sort(all.begin(), all.end());
  return all == graph.edges();
}

}  // namespace sroom
