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

#include "exen/energy.hpp"

#include <algorithm>
#include <cmath>

namespace exen {

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

SymmetricMatrix extended_adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (const Edge& e : g.edges()) {
    const double du = g.degree(e.u);
    const double dv = g.degree(e.v);
    a.set(e.u, e.v, 0.5 * (du / dv + dv / du));
  }
  return a;
}

SymmetricMatrix degree_matrix(const Graph& g) {
  SymmetricMatrix d(g.order());
  for (int v = 0; v < g.order(); ++v) d.set(v, v, g.degree(v));
  return d;
}

namespace {

double AbsSum(const std::vector<double>& values) {
  double s = 0.0;
  for (double x : values) s += std::abs(x);
  return s;
}

std::vector<double> Diagonal(const SymmetricMatrix& m) {
  std::vector<double> d(m.order());
  for (int i = 0; i < m.order(); ++i) d[i] = m(i, i);
  return d;
}

}  // namespace

EnergyAnalysis analyze_energy(const Graph& g) {
  EnergyAnalysis out;
  out.adjacency = adjacency_matrix(g);
  out.extended = extended_adjacency_matrix(g);
  out.adjacency_eig = eig_symmetric(out.adjacency);
  out.extended_eig = eig_symmetric(out.extended);

  EnergyReport& r = out.report;
  r.spectrum = out.adjacency_eig.eigenvalues;
  r.extended_spectrum = out.extended_eig.eigenvalues;
  r.ordinary_energy = AbsSum(r.spectrum);
  r.extended_energy = AbsSum(r.extended_spectrum);
  r.vertex_energies = Diagonal(matrix_abs(out.adjacency_eig));
  r.extended_vertex_energies = Diagonal(matrix_abs(out.extended_eig));
  r.adjacency_spectral_radius = spectral_radius(r.spectrum);
  r.extended_spectral_radius = spectral_radius(r.extended_spectrum);
  return out;
}

EnergyReport energy_report(const Graph& g) { return analyze_energy(g).report; }

double VertexEnergyDecomposition::vertex_energy(int i) const {
  double s = 0.0;
  for (int r = 0; r < weights.cols(); ++r) s += weights(i, r) * abs_eigenvalues[r];
  return s;
}

VertexEnergyDecomposition vertex_weight_decomposition(const EigenDecomposition& extended_eig) {
  const int n = static_cast<int>(extended_eig.eigenvalues.size());
  VertexEnergyDecomposition d{Matrix(n, n), std::vector<double>(n)};
  for (int r = 0; r < n; ++r) d.abs_eigenvalues[r] = std::abs(extended_eig.eigenvalues[r]);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      const double w = extended_eig.vectors(i, r);
      d.weights(i, r) = w * w;
    }
  }
  return d;
}

VertexEnergyDecomposition vertex_weight_decomposition(const Graph& g) {
  return vertex_weight_decomposition(eig_symmetric(extended_adjacency_matrix(g)));
}

double component_locality_residual(const Graph& g, const EnergyReport& report) {
  const auto components = connected_components(g);
  if (components.size() == 1) return 0.0;
  double worst = 0.0;
  for (const auto& comp : components) {
    const Graph sub = induced_subgraph(g, comp);
    std::vector<double> local(comp.size(), 0.0);
    if (sub.size() > 0) {
      local = Diagonal(matrix_abs(eig_symmetric(extended_adjacency_matrix(sub))));
    }
    for (std::size_t k = 0; k < comp.size(); ++k) {
      worst = std::max(worst, std::abs(local[k] - report.extended_vertex_energies[comp[k]]));
    }
  }
  return worst;
}

bool component_locality_check(const Graph& g, double tolerance) {
  return component_locality_residual(g, energy_report(g)) <= tolerance;
}

}  // namespace exen
