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

#ifndef EXEN_FAMILIES_HPP_
#define EXEN_FAMILIES_HPP_

#include <cstdint>
#include <span>
#include <string_view>

#include "exen/graph.hpp"

// Named graph families. Invalid parameters raise std::invalid_argument.
namespace exen::families {

Graph complete(int n);
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
// K_{1,leaves}; vertex 0 is the center.
Graph star(int leaves);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
// Perfect matching on `order` vertices (order/2 copies of K_2); order must be even.
Graph matching(int order);
// i ~ j iff (j - i) mod n or (i - j) mod n lies in `connections`.
Graph circulant(int n, std::span<const int> connections);
// Paley graph on Z_q, q prime with q = 1 mod 4.
Graph paley(int q);
// Complement of the Clebsch graph, strongly regular (16, 10, 6, 6). The fixed
// table is verified on every call.
Graph clebsch_complement();
// Erdos-Renyi G(n, p); identical (n, p, seed) gives an identical graph.
Graph random_gnp(int n, double p, std::uint64_t seed);

// Parses "name:arg,arg" family specs, e.g. "path:3", "complete_bipartite:2,3",
// "circulant:8:1,2", "gnp:20,0.5,7", "complement(cycle:5)",
// "union(path:3,empty:1)".
Graph from_spec(std::string_view spec);

}  // namespace exen::families

#endif  // EXEN_FAMILIES_HPP_
