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

#include "exen/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace exen {

Graph::Graph(int order) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  neighbors_.resize(order);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  Build(std::vector<Edge>(edges.begin(), edges.end()));
}

Graph Graph::FromUpperMask(int order, std::uint64_t mask) {
  if (order > 11) throw std::invalid_argument("upper mask supports order <= 11");
  Graph g(order);
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({i, j});
    }
  }
  g.Build(std::move(edges));
  return g;
}

void Graph::Build(std::vector<Edge> edges) {
  const int n = order();
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} out of range for order " +
                                  std::to_string(n));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto& row : neighbors_) row.clear();
  for (const Edge& e : edges_) {
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& row : neighbors_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& row = neighbors_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  const int n = g.order();
  p.degrees.resize(n);
  for (int v = 0; v < n; ++v) p.degrees[v] = g.degree(v);
  p.delta_min = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.delta_max = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.edge_count = g.size();
  for (int d : p.degrees) p.forgotten += static_cast<std::int64_t>(d) * d * d;
  return p;
}

std::int64_t forgotten_index_by_edges(const Graph& g) {
  std::int64_t f = 0;
  for (const Edge& e : g.edges()) {
    const std::int64_t a = g.degree(e.u);
    const std::int64_t b = g.degree(e.v);
    f += a * a + b * b;
  }
  return f;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comps[id].push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(comps[id].begin(), comps[id].end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.size());
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!g.adjacent(i, j)) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges());
  const int shift = a.order();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.order() + b.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) index[vertices[k]] = static_cast<int>(k);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  std::vector<int> inverse(g.order(), -1);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] < 0 || perm[k] >= g.order() || inverse[perm[k]] >= 0) {
      throw std::invalid_argument("not a permutation");
    }
    inverse[perm[k]] = static_cast<int>(k);
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({inverse[e.u], inverse[e.v]});
  return Graph(g.order(), edges);
}

}  // namespace exen
