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

#ifndef EXEN_ENERGY_HPP_
#define EXEN_ENERGY_HPP_

#include <vector>

#include "exen/graph.hpp"
#include "exen/linalg.hpp"

namespace exen {

// 0/1 adjacency matrix.
SymmetricMatrix adjacency_matrix(const Graph& g);

// Entry (d_i/d_j + d_j/d_i) / 2 for adjacent i, j and 0 otherwise. Isolated
// vertices give zero rows; ratios are only formed across edges, where both
// degrees are positive. Equals adjacency_matrix(g) on regular graphs.
SymmetricMatrix extended_adjacency_matrix(const Graph& g);

// diag(d_1, ..., d_n).
SymmetricMatrix degree_matrix(const Graph& g);

struct EnergyReport {
  double ordinary_energy = 0.0;
  double extended_energy = 0.0;
  // Diagonals of |A| and |A_ex|.
  std::vector<double> vertex_energies;
  std::vector<double> extended_vertex_energies;
  double adjacency_spectral_radius = 0.0;
  double extended_spectral_radius = 0.0;
  // Non-increasing.
  std::vector<double> spectrum;
  std::vector<double> extended_spectrum;
};

// Everything derived from the two eigendecompositions of a graph. Bounds and
// consistency checks share one instance per graph.
struct EnergyAnalysis {
  SymmetricMatrix adjacency;
  SymmetricMatrix extended;
  EigenDecomposition adjacency_eig;
  EigenDecomposition extended_eig;
  EnergyReport report;
};

EnergyAnalysis analyze_energy(const Graph& g);
EnergyReport energy_report(const Graph& g);

// q[i][r] = w_ir^2 for the eigenvector matrix W of A_ex; rows index vertices,
// columns index eigenvalues in non-increasing order.
struct VertexEnergyDecomposition {
  Matrix weights;
  // |eta_r| in the column order of `weights`.
  std::vector<double> abs_eigenvalues;

  // sum_r q[i][r] |eta_r|.
  double vertex_energy(int i) const;
};

VertexEnergyDecomposition vertex_weight_decomposition(const EigenDecomposition& extended_eig);
VertexEnergyDecomposition vertex_weight_decomposition(const Graph& g);

// Largest deviation between the extended vertex energies of g and those of
// each component computed in isolation.
double component_locality_residual(const Graph& g, const EnergyReport& report);
// True when component_locality_residual(g, ...) <= tolerance.
bool component_locality_check(const Graph& g, double tolerance = 1e-9);

}  // namespace exen

#endif  // EXEN_ENERGY_HPP_
