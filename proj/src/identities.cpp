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

#include "exen/identities.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "exen/energy.hpp"

namespace exen {

SIdentityResult verify_s_identity(const Graph& g) {
  SIdentityResult out;
  const int n = g.order();
  std::vector<double> deg(n), inv(n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) return out;
    deg[v] = g.degree(v);
    inv[v] = 1.0 / deg[v];
  }
  out.applicable = true;

  const SymmetricMatrix a = adjacency_matrix(g);
  const SymmetricMatrix a_ex = extended_adjacency_matrix(g);
  const Matrix d = Matrix::Diagonal(deg);
  const Matrix d_inv = Matrix::Diagonal(inv);

  const Matrix precursor = 0.5 * (d * a.matrix() * d_inv + d_inv * a.matrix() * d);
  out.precursor_residual = (a_ex.matrix() - precursor).max_abs();

  const EigenDecomposition eig_a = eig_symmetric(a);
  const EigenDecomposition eig_ex = eig_symmetric(a_ex);
  const Matrix u = polar_factor(eig_ex).matrix();
  const Matrix v = polar_factor(eig_a).matrix();
  const Matrix id = Matrix::Identity(n);

  const Matrix middle = kronecker(d_inv, d) + kronecker(d, d_inv);
  const Matrix s = 0.5 * (kronecker(u, id) * middle * kronecker(v.transpose(), id));

  const std::vector<double> lhs = vec(matrix_abs(eig_ex).matrix());
  const std::vector<double> abs_a = vec(matrix_abs(eig_a).matrix());
  const std::vector<double> rhs = s * std::span<const double>(abs_a);
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    out.residual = std::max(out.residual, std::abs(lhs[k] - rhs[k]));
  }
  return out;
}

double polar_reconstruction_residual(const SymmetricMatrix& x, const OrthogonalFactor& u) {
  return (x.matrix() - matrix_abs(x).matrix() * u.matrix()).max_abs();
}

double von_neumann_slack(const SymmetricMatrix& x1, const SymmetricMatrix& x2) {
  return operator_norm(x1) * trace(x2.matrix()) - std::abs(trace(x1.matrix() * x2.matrix()));
}

double am_qm_gap(std::span<const double> t) {
  double sum = 0.0, root_sum = 0.0;
  for (double x : t) {
    sum += x;
    root_sum += std::sqrt(x);
  }
  return std::sqrt(static_cast<double>(t.size()) * sum) - root_sum;
}

}  // namespace exen
