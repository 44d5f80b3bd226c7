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

#include "exen/structure.hpp"

#include <algorithm>
#include <vector>

namespace exen {
namespace {

int CommonNeighbours(const Graph& g, Vertex a, Vertex b) {
  auto x = g.neighbors(a);
  auto y = g.neighbors(b);
  int count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::optional<SrgParameters> strongly_regular_parameters(const Graph& g) {
  if (!is_regular(g)) return std::nullopt;
  const int n = g.order();
  const int k = g.degree(0);
  if (k == 0 || k == n - 1) return std::nullopt;
  int lambda = -1;
  int mu = -1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const int c = CommonNeighbours(g, i, j);
      int& slot = g.adjacent(i, j) ? lambda : mu;
      if (slot < 0) {
        slot = c;
      } else if (slot != c) {
        return std::nullopt;
      }
    }
  }
  return SrgParameters{n, k, lambda, mu};
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || g.size() == 0 || !is_connected(g) || !is_bipartite(g)) {
    return std::nullopt;
  }
  // In a connected bipartite graph the 2-colouring is unique; colour by BFS.
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        stack.push_back(w);
      }
    }
  }
  int a = 0;
  for (int s : side) a += s == 0 ? 1 : 0;
  const int b = g.order() - a;
  if (static_cast<long>(g.size()) != static_cast<long>(a) * b) return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

bool edges_join_equal_degrees(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != g.degree(e.v)) return false;
  }
  return true;
}

bool edges_join_extreme_degrees(const Graph& g) {
  int lo = g.degree(0);
  int hi = lo;
  for (int v = 1; v < g.order(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  for (const Edge& e : g.edges()) {
    const int a = std::min(g.degree(e.u), g.degree(e.v));
    const int b = std::max(g.degree(e.u), g.degree(e.v));
    if (a != lo || b != hi) return false;
  }
  return true;
}

bool is_perfect_matching(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) return false;
  }
  return true;
}

bool is_star_center(const Graph& g, Vertex v) {
  for (Vertex w : g.neighbors(v)) {
    if (g.degree(w) != 1) return false;
  }
  return true;
}

}  // namespace exen
