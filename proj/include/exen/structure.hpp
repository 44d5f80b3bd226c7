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

#ifndef EXEN_STRUCTURE_HPP_
#define EXEN_STRUCTURE_HPP_

#include <compare>
#include <optional>
#include <utility>

#include "exen/graph.hpp"

// Structural predicates used to classify equality cases.
namespace exen {

struct SrgParameters {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  friend auto operator<=>(const SrgParameters&, const SrgParameters&) = default;
};

// Parameters (n, k, lambda, mu) by exhaustive common-neighbour counts, or
// nullopt if g is not strongly regular. Complete and edgeless graphs are
// excluded (one of lambda/mu would be undefined).
std::optional<SrgParameters> strongly_regular_parameters(const Graph& g);

bool is_regular(const Graph& g);
bool is_bipartite(const Graph& g);

// Part sizes (a <= b) when g is a complete bipartite graph K_{a,b} with
// a, b >= 1 and no other vertices.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g);

// Every edge joins two vertices of equal degree (each component is regular).
bool edges_join_equal_degrees(const Graph& g);

// Every edge joins a minimum-degree vertex to a maximum-degree vertex.
bool edges_join_extreme_degrees(const Graph& g);

// Every vertex has degree exactly 1.
bool is_perfect_matching(const Graph& g);

// The component containing v is a star centered at v. K_1 and both ends of a
// K_2 component qualify.
bool is_star_center(const Graph& g, Vertex v);

}  // namespace exen

#endif  // EXEN_STRUCTURE_HPP_
