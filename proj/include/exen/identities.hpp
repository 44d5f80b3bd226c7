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

#ifndef EXEN_IDENTITIES_HPP_
#define EXEN_IDENTITIES_HPP_

#include <span>

#include "exen/graph.hpp"
#include "exen/linalg.hpp"

// Numerical checks of the matrix identities behind the energy inequalities.
namespace exen {

struct SIdentityResult {
  // False when g has an isolated vertex (the degree matrix is singular).
  bool applicable = false;
  // ||vec(|A_ex|) - S vec(|A|)||_max.
  double residual = 0.0;
  // ||A_ex - (D A D^-1 + D^-1 A D) / 2||_max.
  double precursor_residual = 0.0;
};

// Builds U = polar(A_ex), V = polar(A), D = diag(degrees) and
//   S = 1/2 (U (x) I) ((D^-1 (x) D) + (D (x) D^-1)) (V^T (x) I),
// then compares vec(|A_ex|) with S vec(|A|). Kronecker products are dense, so
// n^2 is capped by kKroneckerMaxDimension.
SIdentityResult verify_s_identity(const Graph& g);

// ||X - |X| U||_max for U = polar_factor(X).
double polar_reconstruction_residual(const SymmetricMatrix& x, const OrthogonalFactor& u);

// operator_norm(x1) * trace(x2) - |trace(x1 x2)|; nonnegative for symmetric
// x1 and positive semidefinite x2.
double von_neumann_slack(const SymmetricMatrix& x1, const SymmetricMatrix& x2);

// sqrt(r * sum t) - sum sqrt(t) for nonnegative t; zero iff t is constant.
double am_qm_gap(std::span<const double> t);

}  // namespace exen

#endif  // EXEN_IDENTITIES_HPP_
