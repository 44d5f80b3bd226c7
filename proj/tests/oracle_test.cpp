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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "exen/errors.hpp"
#include "exen/families.hpp"
#include "exen/oracle.hpp"
#include "exen/report.hpp"
#include "exen/structure.hpp"

namespace fam = exen::families;
using exen::Graph;
using exen::SweepConfig;
using exen::SweepMode;

namespace {

SweepConfig Exhaustive(int n_min, int n_max, std::vector<std::string> bounds = {"all"}) {
  SweepConfig c;
  c.mode = SweepMode::kExhaustive;
  c.n_min = n_min;
  c.n_max = n_max;
  c.bounds = std::move(bounds);
  return c;
}

std::set<std::uint64_t> Indices(const std::vector<exen::Witness>& ws) {
  std::set<std::uint64_t> out;
  for (const auto& w : ws) out.insert(w.index);
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("labeled enumeration") {
  CHECK(exen::labeled_count(1) == 1);
  CHECK(exen::labeled_count(4) == 64);
  CHECK(exen::labeled_count(7) == 2097152);
  std::uint64_t count = 0;
  bool in_order = true;
  exen::enumerate_labeled(4, [&](const Graph& g) {
    in_order &= g == Graph::FromUpperMask(4, count);
    ++count;
  });
  CHECK(count == 64);
  CHECK(in_order);
  CHECK_THROWS(exen::enumerate_labeled(8, [](const Graph&) {}));
}

TEST_CASE("small exhaustive sweep has no violations") {
  SweepConfig c = Exhaustive(1, 5);
  c.complement_pairs = true;
  const auto s = exen::run_sweep(c);
  CHECK(s.graphs_processed == 1 + 2 + 8 + 64 + 1024);
  CHECK(s.violations() == 0);
  CHECK(s.consistency.failures == 0);
  CHECK(s.errors == 0);
  CHECK(s.passed());
  CHECK(s.bounds.size() == 26);
  CHECK(s.find("vertex_lower")->evaluations() == 1 + 2 * 2 + 3 * 8 + 4 * 64 + 5 * 1024);
}

TEST_CASE("pair bounds are skipped without complement pairs") {
  const auto s = exen::run_sweep(Exhaustive(1, 3));
  CHECK(s.find("ng_wang") == nullptr);
  CHECK(s.find("das_i") != nullptr);
  CHECK_THROWS_AS(exen::run_sweep(Exhaustive(1, 3, {"ng_*"})), std::invalid_argument);
}

TEST_CASE("left sandwich equality on four vertices") {
  // Independent count: every edge joins vertices of equal degree.
  std::uint64_t expected = 0;
  exen::enumerate_labeled(4, [&](const Graph& g) { expected += exen::edges_join_equal_degrees(g); });
  const auto s = exen::run_sweep(Exhaustive(4, 4, {"sandwich_left"}));
  const auto* t = s.find("sandwich_left");
  CHECK(t->equality == expected);
  CHECK(t->holds + t->equality == 64);
}

TEST_CASE("das_i equality witnesses on four vertices") {
  // Edgeless, then the three perfect matchings {01,23}, {03,12}, {02,13}.
  const auto w = exen::find_equality_witnesses(Exhaustive(4, 4), "das_i");
  CHECK(Indices(w) == std::set<std::uint64_t>{0, 12, 18, 33});
  for (const auto& x : w) CHECK(!x.vertex);
}

TEST_CASE("right sandwich equality on four vertices") {
  std::set<std::uint64_t> expected;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = Graph::FromUpperMask(4, mask);
    const auto p = exen::degree_profile(g);
    if (p.delta_min == 0 && p.delta_max > 0) continue;
    if (p.regular() || exen::complete_bipartite_parts(g)) expected.insert(mask);
  }
  const auto w = exen::find_equality_witnesses(Exhaustive(4, 4), "sandwich_right");
  CHECK(Indices(w) == expected);
}

TEST_CASE("vertex lower bound equality on four vertices") {
  const auto w = exen::find_equality_witnesses(Exhaustive(4, 4), "vertex_lower");
  std::map<std::uint64_t, int> per_graph;
  for (const auto& x : w) ++per_graph[x.index];
  int all_vertices = 0;
  for (const auto& [index, count] : per_graph) {
    if (count != 4) continue;
    ++all_vertices;
    const Graph g = Graph::FromUpperMask(4, index);
    CHECK((g.size() == 2 || g.size() == 4));
    CHECK(exen::is_regular(g));
  }
  // Three labeled C4 and three labeled 2K2.
  CHECK(all_vertices == 6);
}

TEST_CASE("witness cap keeps the smallest indices") {
  SweepConfig c = Exhaustive(1, 5, {"sandwich_left"});
  c.witness_limit = 5;
  const auto capped = exen::run_sweep(c).find("sandwich_left")->equality_witnesses;
  auto all = exen::find_equality_witnesses(Exhaustive(1, 5), "sandwich_left");
  REQUIRE(capped.size() == 5);
  REQUIRE(all.size() > 5);
  for (int k = 0; k < 5; ++k) CHECK(capped[k] == all[k]);
}

TEST_CASE("sweeps are independent of thread count") {
  SweepConfig c = Exhaustive(1, 5);
  c.complement_pairs = true;
  c.threads = 1;
  const std::string one = exen::to_json(exen::run_sweep(c)).dump();
  c.threads = 4;
  const std::string four = exen::to_json(exen::run_sweep(c)).dump();
  CHECK(one == four);

  SweepConfig r;
  r.mode = SweepMode::kRandom;
  r.random_orders = {8, 11};
  r.probabilities = {0.3, 0.7};
  r.samples = 25;
  r.seed = 99;
  r.threads = 1;
  const auto a = exen::run_sweep(r);
  r.threads = 3;
  const auto b = exen::run_sweep(r);
  CHECK(a.graphs_processed == 100);
  CHECK(exen::to_json(a).dump() == exen::to_json(b).dump());
  r.seed = 100;
  CHECK(exen::to_json(exen::run_sweep(r)).dump() != exen::to_json(a).dump());
}

TEST_CASE("connected_only skips graphs") {
  SweepConfig c = Exhaustive(4, 4, {"sandwich_left"});
  c.connected_only = true;
  const auto s = exen::run_sweep(c);
  // 38 of the 64 labeled graphs on four vertices are connected.
  CHECK(s.graphs_processed == 38);
  CHECK(s.graphs_skipped == 26);
}

TEST_CASE("corpus and list sources") {
  const std::string data = EXEN_TEST_DATA;
  const auto graphs = exen::read_corpus(data + "/small.g6");
  REQUIRE(graphs.size() == 5);
  CHECK(graphs[0] == fam::complete(2));
  CHECK(graphs[1] == fam::path(3));
  CHECK(graphs[2] == fam::cycle(4));
  CHECK(graphs[3] == fam::complete(4));
  CHECK(graphs[4] == fam::cycle(5));

  try {
    exen::read_corpus(data + "/bad.g6");
    FAIL("expected ParseError");
  } catch (const exen::ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(exen::read_corpus(data + "/missing.g6"), std::runtime_error);

  SweepConfig c;
  c.mode = SweepMode::kList;
  c.graphs = {fam::clebsch_complement(), fam::star(5)};
  c.bounds = {"n_only_ex", "vertex_upper_star"};
  const auto s = exen::run_sweep(c);
  CHECK(s.graphs_processed == 2);
  CHECK(s.find("n_only_ex")->equality == 1);
  CHECK(s.find("vertex_upper_star")->equality >= 1);
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(exen::run_sweep(Exhaustive(1, 8)), std::invalid_argument);
  CHECK_THROWS_AS(exen::run_sweep(Exhaustive(5, 4)), std::invalid_argument);
  SweepConfig r;
  r.mode = SweepMode::kRandom;
  CHECK_THROWS_AS(exen::run_sweep(r), std::invalid_argument);
  SweepConfig c;
  c.mode = SweepMode::kCorpus;
  c.corpus_path = "/nonexistent/file.g6";
  CHECK_THROWS(exen::run_sweep(c));
}

TEST_CASE("consistency tallies stay within tolerance") {
  SweepConfig r;
  r.mode = SweepMode::kRandom;
  r.random_orders = {6, 12};
  r.probabilities = {0.2, 0.8};
  r.samples = 20;
  r.seed = 5;
  const auto s = exen::run_sweep(r);
  const auto& t = s.consistency;
  CHECK(t.failures == 0);
  CHECK(t.vertex_sum <= 1e-9);
  CHECK(t.weight_sums <= 1e-9);
  CHECK(t.component_locality <= 1e-9);
  CHECK(t.eig_orthogonality <= 1e-10);
  CHECK(t.regular_collapse_mismatch == 0);
  CHECK(t.forgotten_mismatch == 0);
}

TEST_CASE("identity suite") {
  SweepConfig c;
  c.seed = 7;
  const auto s = exen::identity_suite(c);
  // Connected labeled graphs: 1 + 4 + 38 + 728 for n = 2..5, plus 20 random.
  CHECK(s.s_identity_graphs == 771 + 20);
  CHECK(s.polar_samples == 200);
  CHECK(s.kronecker_samples == 100);
  CHECK(s.von_neumann_samples == 100);
  CHECK(s.am_qm_samples == 1000);
  CHECK(s.s_identity_residual <= 1e-8);
  CHECK(s.polar_reconstruction <= 1e-8);
  CHECK(s.polar_orthogonality <= 1e-10);
  CHECK(s.kronecker_residual <= 1e-10);
  CHECK(s.passed());
}

}  // TEST_SUITE
