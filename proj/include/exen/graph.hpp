// Copyright 2026 The exen Authors
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

#ifndef EXEN_GRAPH_HPP_
#define EXEN_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exen {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
//
// Construction normalizes pair order and collapses duplicates; self-loops and
// out-of-range endpoints are rejected with std::invalid_argument.
class Graph {
 public:
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  // Bit k of `mask` selects the k-th pair in column-major upper-triangle
  // order: (0,1), (0,2), (1,2), (0,3), ... Requires order <= 11.
  static Graph FromUpperMask(int order, std::uint64_t mask);

  int order() const { return static_cast<int>(neighbors_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.neighbors_.size() == b.neighbors_.size() && a.edges_ == b.edges_;
  }

 private:
  void Build(std::vector<Edge> edges);

  std::vector<std::vector<Vertex>> neighbors_;  // sorted ascending
  std::vector<Edge> edges_;                     // sorted ascending
};

// Degree-based invariants. All fields are exact integers.
struct DegreeProfile {
  std::vector<int> degrees;
  int delta_min = 0;
  int delta_max = 0;
  std::int64_t edge_count = 0;
  // Sum of cubed degrees.
  std::int64_t forgotten = 0;

  int order() const { return static_cast<int>(degrees.size()); }
  int n_hat() const { return order() - 1; }
  bool regular() const { return delta_min == delta_max; }
};

DegreeProfile degree_profile(const Graph& g);

// Forgotten index computed edge-wise: sum over edges of d_i^2 + d_j^2.
std::int64_t forgotten_index_by_edges(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
// Subgraph induced by `vertices`; vertex k of the result is vertices[k].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
// Result vertex v is g's vertex perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// graph6: 6-bit big-endian packing of the upper triangle, bias 63.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// Edge-list text: header line "<n> <m>" followed by whitespace-separated
// vertex pairs. Duplicate pairs collapse; m must equal the number of distinct
// edges.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace exen

#endif  // EXEN_GRAPH_HPP_
