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

#ifndef SROOM_EDGE_COLORING_HPP_
#define SROOM_EDGE_COLORING_HPP_

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace sroom {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;  // first < second

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  // Throws kInvalidArgument on loops, duplicate edges or unknown vertices.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  // Sorted, each with first < second.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Proper 4-edge-colouring: four disjoint matchings covering every edge.
struct EdgeColoring {
  std::array<std::vector<Edge>, 4> classes;
};

// Misra–Gries fan/path recolouring with max_degree + 1 colours, padded to
// four classes. Deterministic: edges are coloured in sorted order and the
// smallest free colour is always taken. Throws kDegreeTooHigh above degree 3.
EdgeColoring misra_gries_edge_coloring(const Graph& graph);

// True iff the classes partition the edge set and each class is a matching.
bool is_proper_edge_coloring(const Graph& graph, const EdgeColoring& coloring);

}  // namespace sroom

#endif  // SROOM_EDGE_COLORING_HPP_
