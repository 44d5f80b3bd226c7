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

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "exen/errors.hpp"
#include "exen/families.hpp"
#include "exen/graph.hpp"
#include "exen/random.hpp"
#include "exen/structure.hpp"

namespace fam = exen::families;
using exen::Edge;
using exen::Graph;

namespace {

std::vector<int> SortedDegrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction normalizes and rejects invalid edges") {
  const std::vector<Edge> edges{{1, 0}, {0, 1}, {2, 1}};
  const Graph g(3, edges);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g == fam::path(3));

  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("upper mask bit order is column-major") {
  CHECK(Graph::FromUpperMask(4, 0b1) == Graph(4, std::vector<Edge>{{0, 1}}));
  CHECK(Graph::FromUpperMask(4, 0b10) == Graph(4, std::vector<Edge>{{0, 2}}));
  CHECK(Graph::FromUpperMask(4, 0b100) == Graph(4, std::vector<Edge>{{1, 2}}));
  CHECK(Graph::FromUpperMask(4, 0b1000) == Graph(4, std::vector<Edge>{{0, 3}}));
  CHECK(Graph::FromUpperMask(4, 63) == fam::complete(4));
}

TEST_CASE("graph6 decoding") {
  const Graph k2 = exen::parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);

  const Graph e3 = exen::parse_graph6("B?");
  CHECK(e3.order() == 3);
  CHECK(e3.size() == 0);

  // 'D' = 5 vertices; body "Qc" = 010010 100100 over pairs
  // (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) (0,4) (1,4) (2,4) (3,4).
  const Graph g = exen::parse_graph6("DQc");
  CHECK(g == Graph(5, std::vector<Edge>{{0, 2}, {1, 3}, {0, 4}, {3, 4}}));
  CHECK(exen::serialize_graph6(g) == "DQc");

  CHECK(exen::parse_graph6(">>graph6<<A_\n") == k2);
}

TEST_CASE("graph6 encoding") {
  CHECK(exen::serialize_graph6(fam::complete(2)) == "A_");
  CHECK(exen::serialize_graph6(fam::empty(3)) == "B?");
  CHECK(exen::serialize_graph6(fam::complete(4)) == "C~");
  CHECK(exen::serialize_graph6(fam::empty(1)) == "@");
  // 63 = 000000 000000 111111 in the 18-bit extended header.
  const std::string big = exen::serialize_graph6(fam::cycle(63));
  CHECK(big.substr(0, 4) == "~??~");
  CHECK(exen::parse_graph6(big) == fam::cycle(63));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const int n = exen::uniform_int(rng, 1, 20);
    const Graph g = fam::random_gnp(n, exen::unit_double(rng), rng());
    const std::string s = exen::serialize_graph6(g);
    CHECK(exen::parse_graph6(s) == g);
    CHECK(exen::serialize_graph6(exen::parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 errors name the byte offset") {
  auto offset_of = [](std::string_view s) {
    try {
      exen::parse_graph6(s);
    } catch (const exen::ParseError& e) {
      return e.offset();
    }
    return std::string::npos - 1;
  };
  CHECK(offset_of("A") == 1);        // truncated body
  CHECK(offset_of("A ") == 1);       // byte 32 out of range
  CHECK(offset_of("A__") == 2);      // trailing byte
  CHECK(offset_of("A`") != std::string::npos - 1);  // non-zero padding
  CHECK(offset_of("~?") == 2);       // truncated extended header
  CHECK(offset_of("?") == 0);        // zero vertices
  CHECK(offset_of("") == 0);
}

TEST_CASE("edge list parsing") {
  CHECK(exen::parse_edge_list("3 2\n0 1\n1 2") == fam::path(3));
  CHECK(exen::parse_edge_list("2 1\n0 1\n1 0") == fam::complete(2));
  CHECK_THROWS_AS(exen::parse_edge_list("2 1\n0 0"), exen::ParseError);
  CHECK_THROWS_AS(exen::parse_edge_list("2 1\n0 2"), exen::ParseError);
  CHECK_THROWS_AS(exen::parse_edge_list("2 1\n0 x"), exen::ParseError);
  CHECK_THROWS_AS(exen::parse_edge_list("3 5\n0 1"), exen::ParseError);
  CHECK_THROWS_AS(exen::parse_edge_list("3 1\n0"), exen::ParseError);
  const Graph g = fam::from_spec("circulant:7:1,3");
  CHECK(exen::parse_edge_list(exen::serialize_edge_list(g)) == g);
}

TEST_CASE("family generators") {
  const std::vector<int> swap_center{1, 0, 2};
  CHECK(exen::relabel(fam::complete_bipartite(1, 2), swap_center) == fam::path(3));

  const Graph c5c = exen::complement(fam::cycle(5));
  CHECK(SortedDegrees(c5c) == std::vector<int>(5, 2));
  CHECK(exen::is_connected(c5c));

  const Graph cc = fam::clebsch_complement();
  CHECK(cc.order() == 16);
  CHECK(cc.size() == 80);
  CHECK(exen::strongly_regular_parameters(cc) == exen::SrgParameters{16, 10, 6, 6});

  CHECK(fam::paley(5) == fam::cycle(5));
  CHECK(exen::strongly_regular_parameters(fam::paley(13)) == exen::SrgParameters{13, 6, 2, 3});
  CHECK(fam::matching(6).size() == 3);
  CHECK(fam::star(3).degree(0) == 3);
  CHECK(fam::complete_bipartite(2, 3).size() == 6);

  CHECK_THROWS_AS(fam::matching(5), std::invalid_argument);
  CHECK_THROWS_AS(fam::paley(7), std::invalid_argument);
  CHECK_THROWS_AS(fam::paley(9), std::invalid_argument);
  CHECK_THROWS_AS(fam::cycle(2), std::invalid_argument);
}

TEST_CASE("family specs") {
  CHECK(fam::from_spec("path:3") == fam::path(3));
  CHECK(fam::from_spec("complete_bipartite:2,3") == fam::complete_bipartite(2, 3));
  CHECK(fam::from_spec("complement(cycle:5)") == exen::complement(fam::cycle(5)));
  const Graph u = fam::from_spec("union(path:3,empty:1)");
  CHECK(u.order() == 4);
  CHECK(u.size() == 2);
  CHECK(SortedDegrees(fam::from_spec("circulant:8:1,2")) == std::vector<int>(8, 4));
  CHECK(fam::from_spec("gnp:20,0.5,7") == fam::from_spec("gnp:20,0.5,7"));
  CHECK(fam::from_spec("clebsch_complement") == fam::clebsch_complement());
  CHECK_THROWS_AS(fam::from_spec("hypercube:3"), exen::ParseError);
  CHECK_THROWS_AS(fam::from_spec("path:x"), exen::ParseError);
  CHECK_THROWS_AS(fam::from_spec("path:3,4"), exen::ParseError);
}

TEST_CASE("degree profile") {
  const auto p3 = exen::degree_profile(fam::path(3));
  CHECK(p3.degrees == std::vector<int>{1, 2, 1});
  CHECK(p3.delta_min == 1);
  CHECK(p3.delta_max == 2);
  CHECK(p3.edge_count == 2);
  CHECK(p3.forgotten == 10);
  CHECK(exen::forgotten_index_by_edges(fam::path(3)) == 10);
  CHECK(p3.n_hat() == 2);

  const auto e4 = exen::degree_profile(fam::empty(4));
  CHECK(e4.degrees == std::vector<int>(4, 0));
  CHECK(e4.forgotten == 0);

  CHECK(exen::degree_profile(fam::path(4)).forgotten == 18);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Graph g = fam::random_gnp(exen::uniform_int(rng, 1, 15), 0.4, rng());
    const auto p = exen::degree_profile(g);
    long sum = 0;
    for (int d : p.degrees) sum += d;
    CHECK(sum == 2 * p.edge_count);
    CHECK(p.forgotten == exen::forgotten_index_by_edges(g));
  }
}

TEST_CASE("connected components") {
  const auto two = exen::connected_components(fam::matching(4));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<int>{0, 1});
  CHECK(two[1] == std::vector<int>{2, 3});
  CHECK(exen::connected_components(fam::complete(5)).size() == 1);
  CHECK(exen::connected_components(fam::empty(3)).size() == 3);
  // Order by smallest member even when labels interleave.
  const Graph g(4, std::vector<Edge>{{0, 2}, {1, 3}});
  const auto c = exen::connected_components(g);
  CHECK(c == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("complement and union") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Graph g = fam::random_gnp(exen::uniform_int(rng, 1, 12), 0.5, rng());
    CHECK(exen::complement(exen::complement(g)) == g);
    CHECK(g.size() + exen::complement(g).size() == g.order() * (g.order() - 1) / 2);
  }
  const Graph u = exen::disjoint_union(fam::complete(2), fam::path(3));
  CHECK(u == Graph(5, std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}}));
  const std::vector<int> pick{2, 3, 4};
  CHECK(exen::induced_subgraph(u, pick) == fam::path(3));
}

TEST_CASE("structural predicates") {
  CHECK(exen::strongly_regular_parameters(fam::cycle(5)) == exen::SrgParameters{5, 2, 0, 1});
  CHECK_FALSE(exen::strongly_regular_parameters(fam::path(4)));
  CHECK_FALSE(exen::strongly_regular_parameters(fam::complete(4)));
  CHECK(exen::is_bipartite(fam::cycle(6)));
  CHECK_FALSE(exen::is_bipartite(fam::cycle(5)));
  CHECK(exen::complete_bipartite_parts(fam::complete_bipartite(3, 2)) == std::pair{2, 3});
  CHECK(exen::complete_bipartite_parts(fam::cycle(4)) == std::pair{2, 2});
  CHECK_FALSE(exen::complete_bipartite_parts(fam::cycle(6)));
  CHECK_FALSE(exen::complete_bipartite_parts(fam::matching(4)));
  CHECK(exen::edges_join_equal_degrees(exen::disjoint_union(fam::complete(2), fam::complete(3))));
  CHECK(exen::edges_join_extreme_degrees(fam::matching(4)));
  CHECK(exen::is_star_center(fam::star(3), 0));
  CHECK_FALSE(exen::is_star_center(fam::star(3), 1));
  CHECK(exen::is_star_center(fam::complete(2), 1));
  CHECK(exen::is_star_center(fam::empty(1), 0));
}

}  // TEST_SUITE
