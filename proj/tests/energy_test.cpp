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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "exen/energy.hpp"
#include "exen/families.hpp"
#include "exen/identities.hpp"
#include "exen/random.hpp"
#include "exen/structure.hpp"

namespace fam = exen::families;
using exen::Graph;

namespace {

// Extended adjacency matrix assembled directly from the degree sequence.
Eigen::MatrixXd EigenExtended(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const exen::Edge& e : g.edges()) {
    const double di = g.degree(e.u), dj = g.degree(e.v);
    m(e.u, e.v) = m(e.v, e.u) = 0.5 * (di / dj + dj / di);
  }
  return m;
}

Eigen::MatrixXd EigenAdjacency(const Graph& g) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const exen::Edge& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = 1.0;
  return m;
}

struct Reference {
  double energy = 0;
  Eigen::VectorXd vertex;
};

Reference EigenEnergy(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::MatrixXd abs = es.eigenvectors() * es.eigenvalues().cwiseAbs().asDiagonal() *
                              es.eigenvectors().transpose();
  return {es.eigenvalues().cwiseAbs().sum(), abs.diagonal()};
}

Graph RandomGraph(std::mt19937_64& rng, int n_lo, int n_hi) {
  return fam::random_gnp(exen::uniform_int(rng, n_lo, n_hi), exen::uniform(rng, 0.1, 0.9), rng());
}

}  // namespace

TEST_SUITE("energy") {

TEST_CASE("extended adjacency entries") {
  const auto a = exen::extended_adjacency_matrix(fam::path(3));
  CHECK(a(0, 1) == 1.25);
  CHECK(a(1, 2) == 1.25);
  CHECK(a(0, 2) == 0.0);
  CHECK(a(1, 1) == 0.0);
  CHECK(exen::extended_adjacency_matrix(fam::cycle(6)) == exen::adjacency_matrix(fam::cycle(6)));
  const auto iso = exen::extended_adjacency_matrix(fam::from_spec("union(path:2,empty:1)"));
  CHECK(iso(0, 1) == 1.0);
  CHECK(iso(2, 0) == 0.0);
  const auto d = exen::degree_matrix(fam::star(3));
  CHECK(d(0, 0) == 3);
  CHECK(d(1, 1) == 1);
  CHECK(d(0, 1) == 0);
}

TEST_CASE("closed-form energies") {
  const double sqrt2 = std::numbers::sqrt2, sqrt3 = std::numbers::sqrt3;

  const auto p3 = exen::energy_report(fam::path(3));
  CHECK(p3.ordinary_energy == doctest::Approx(2 * sqrt2).epsilon(1e-12));
  CHECK(p3.extended_energy == doctest::Approx(2.5 * sqrt2).epsilon(1e-12));
  CHECK(p3.extended_spectral_radius == doctest::Approx(1.25 * sqrt2).epsilon(1e-12));

  // Star K_{1,k}: |A| has diagonal sqrt(k) at the center and 1/sqrt(k) at
  // leaves; A_ex = (k + 1/k)/2 * A.
  const auto s3 = exen::energy_report(fam::star(3));
  const double c = (3.0 + 1.0 / 3.0) / 2.0;
  CHECK(s3.ordinary_energy == doctest::Approx(2 * sqrt3).epsilon(1e-12));
  CHECK(s3.extended_energy == doctest::Approx(2 * c * sqrt3).epsilon(1e-12));
  CHECK(s3.vertex_energies[0] == doctest::Approx(sqrt3).epsilon(1e-12));
  CHECK(s3.vertex_energies[1] == doctest::Approx(1 / sqrt3).epsilon(1e-12));
  CHECK(s3.extended_vertex_energies[0] == doctest::Approx(c * sqrt3).epsilon(1e-12));
  CHECK(s3.extended_vertex_energies[3] == doctest::Approx(c / sqrt3).epsilon(1e-12));

  const auto p4 = exen::energy_report(fam::path(4));
  CHECK(p4.ordinary_energy == doctest::Approx(2 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(p4.extended_energy == doctest::Approx(std::sqrt(29.0)).epsilon(1e-12));

  const auto c5 = exen::energy_report(fam::cycle(5));
  CHECK(c5.ordinary_energy == doctest::Approx(2 + 2 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(c5.extended_energy == doctest::Approx(c5.ordinary_energy).epsilon(1e-12));
  CHECK(c5.spectrum == c5.extended_spectrum);

  // K_{a,b}: energy 2 sqrt(ab), scaled by (a/b + b/a)/2.
  const auto k23 = exen::energy_report(fam::complete_bipartite(2, 3));
  CHECK(k23.ordinary_energy == doctest::Approx(2 * std::sqrt(6.0)).epsilon(1e-12));
  CHECK(k23.extended_energy == doctest::Approx(13.0 / 12.0 * 2 * std::sqrt(6.0)).epsilon(1e-12));

  const auto k1 = exen::energy_report(fam::empty(1));
  CHECK(k1.ordinary_energy == 0.0);
  CHECK(k1.extended_energy == 0.0);
  CHECK(k1.vertex_energies == std::vector<double>{0.0});
}

TEST_CASE("energies agree with an Eigen reference") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    const Graph g = RandomGraph(rng, 1, 14);
    const auto report = exen::energy_report(g);
    const Reference ordinary = EigenEnergy(EigenAdjacency(g));
    const Reference extended = EigenEnergy(EigenExtended(g));
    CHECK(report.ordinary_energy == doctest::Approx(ordinary.energy).epsilon(1e-11));
    CHECK(report.extended_energy == doctest::Approx(extended.energy).epsilon(1e-11));
    for (int i = 0; i < g.order(); ++i) {
      CHECK(std::abs(report.vertex_energies[i] - ordinary.vertex(i)) < 1e-10);
      CHECK(std::abs(report.extended_vertex_energies[i] - extended.vertex(i)) < 1e-10);
    }
    // The extended energy never falls below the ordinary energy.
    CHECK(report.ordinary_energy <= report.extended_energy + 1e-9);
  }
}

TEST_CASE("vertex energies sum to the graph energy") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 200; ++k) {
    const auto r = exen::energy_report(RandomGraph(rng, 1, 12));
    double s = 0, s_ex = 0;
    for (double v : r.vertex_energies) s += v;
    for (double v : r.extended_vertex_energies) s_ex += v;
    CHECK(s == doctest::Approx(r.ordinary_energy).epsilon(1e-10));
    CHECK(s_ex == doctest::Approx(r.extended_energy).epsilon(1e-10));
  }
}

TEST_CASE("weight decomposition is doubly stochastic") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 100; ++k) {
    const Graph g = RandomGraph(rng, 1, 12);
    const auto analysis = exen::analyze_energy(g);
    const auto q = exen::vertex_weight_decomposition(analysis.extended_eig);
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
      double row = 0, col = 0;
      for (int r = 0; r < n; ++r) {
        row += q.weights(i, r);
        col += q.weights(r, i);
        CHECK(q.weights(i, r) >= 0.0);
      }
      CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(col == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(q.vertex_energy(i) ==
            doctest::Approx(analysis.report.extended_vertex_energies[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("vertex energies are component-local") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 100; ++k) {
    const Graph g = exen::disjoint_union(RandomGraph(rng, 1, 6), RandomGraph(rng, 1, 6));
    CHECK(exen::component_locality_check(g));
    CHECK(exen::component_locality_residual(g, exen::energy_report(g)) < 1e-9);
  }
}

TEST_CASE("regular and bidegreed collapse") {
  for (const char* spec : {"cycle:7", "complete:5", "paley:13", "circulant:10:1,3"}) {
    const Graph g = fam::from_spec(spec);
    const auto r = exen::energy_report(g);
    CHECK(r.extended_energy == doctest::Approx(r.ordinary_energy).epsilon(1e-12));
  }
  // Every edge joins degree 2 and degree 4 vertices: A_ex = (2/4 + 4/2)/2 A.
  const Graph g = fam::complete_bipartite(2, 4);
  CHECK(exen::edges_join_extreme_degrees(g));
  const auto r = exen::energy_report(g);
  CHECK(r.extended_energy == doctest::Approx(1.25 * r.ordinary_energy).epsilon(1e-12));
}

TEST_CASE("S identity") {
  for (const char* spec : {"path:2", "path:4", "star:3", "cycle:5", "complete_bipartite:2,3"}) {
    const auto s = exen::verify_s_identity(fam::from_spec(spec));
    CHECK(s.applicable);
    CHECK(s.residual < 1e-10);
    CHECK(s.precursor_residual < 1e-12);
  }
  std::mt19937_64 rng(35);
  for (int k = 0; k < 30; ++k) {
    const Graph g = fam::random_gnp(exen::uniform_int(rng, 2, 8), 0.6, rng());
    const auto s = exen::verify_s_identity(g);
    bool isolated = false;
    for (int v = 0; v < g.order(); ++v) isolated |= g.degree(v) == 0;
    CHECK(s.applicable == !isolated);
    if (s.applicable) CHECK(s.residual < 1e-10);
  }
  CHECK_FALSE(exen::verify_s_identity(fam::from_spec("union(path:3,empty:1)")).applicable);
}

TEST_CASE("matrix inequalities") {
  const std::vector<double> flat{1, 1, 1, 1};
  CHECK(exen::am_qm_gap(flat) == doctest::Approx(0.0));
  const std::vector<double> skew{4, 0};
  CHECK(exen::am_qm_gap(skew) == doctest::Approx(std::sqrt(8.0) - 2.0));

  std::mt19937_64 rng(36);
  for (int k = 0; k < 50; ++k) {
    const int n = 5;
    exen::SymmetricMatrix x1(n);
    exen::Matrix b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) x1.set(i, j, exen::uniform(rng, -1, 1));
      for (int j = 0; j < n; ++j) b(i, j) = exen::uniform(rng, -1, 1);
    }
    const auto x2 = exen::SymmetricMatrix::FromMatrix([&] {
      exen::Matrix p = b * b.transpose();
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) p(i, j) = p(j, i);
      }
      return p;
    }());
    CHECK(exen::von_neumann_slack(x1, x2) >= -1e-12);
    const auto u = exen::polar_factor(x1);
    CHECK(exen::polar_reconstruction_residual(x1, u) < 1e-12);
  }
}

}  // TEST_SUITE
