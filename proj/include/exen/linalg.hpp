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

#ifndef EXEN_LINALG_HPP_
#define EXEN_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

// Dense real linear algebra for small matrices: symmetric eigendecomposition
// by cyclic Jacobi rotations, the matrix absolute value, polar factors, and
// the vec / Kronecker operators.
namespace exen {

// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);

  static Matrix Identity(int n);
  static Matrix Diagonal(std::span<const double> diag);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::span<const double> data() const { return data_; }

  Matrix transpose() const;
  // Largest absolute entry; 0 for an empty matrix.
  double max_abs() const;
  double frobenius() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<double> operator*(const Matrix& a, std::span<const double> x);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Real symmetric matrix. Symmetry holds exactly: every write goes to both
// (i, j) and (j, i).
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int order) : m_(order, order) {}

  // Throws std::invalid_argument unless `m` is square and exactly symmetric.
  static SymmetricMatrix FromMatrix(const Matrix& m);
  static SymmetricMatrix Diagonal(std::span<const double> diag);

  int order() const { return m_.rows(); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
  }
  const Matrix& matrix() const { return m_; }

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) = default;

 private:
  Matrix m_;
};

// A = W diag(eigenvalues) W^T with eigenvalues non-increasing and column r of
// W the unit eigenvector for eigenvalues[r].
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix vectors;
};

// Square matrix Q with Q^T Q = I.
class OrthogonalFactor {
 public:
  explicit OrthogonalFactor(Matrix q) : q_(std::move(q)) {}
  int order() const { return q_.rows(); }
  const Matrix& matrix() const { return q_; }

 private:
  Matrix q_;
};

struct JacobiOptions {
  // Converged once the off-diagonal Frobenius norm is at most
  // relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-12;
  int max_sweeps = 100;
};

// Throws NumericError on non-finite input or if the sweep cap is reached.
EigenDecomposition eig_symmetric(const SymmetricMatrix& m, const JacobiOptions& options = {});
// Eigenvalues only (no eigenvector accumulation), non-increasing.
std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& m,
                                          const JacobiOptions& options = {});

// |X| = W diag(|lambda|) W^T.
SymmetricMatrix matrix_abs(const SymmetricMatrix& m);
SymmetricMatrix matrix_abs(const EigenDecomposition& eig);
// Diagonal of |X| without forming the full product.
std::vector<double> matrix_abs_diagonal(const EigenDecomposition& eig);

// Orthogonal U with X = |X| U, built as U = Q P^T where P holds the
// eigenvectors and Q flips every eigenvector whose eigenvalue is <= 0.
OrthogonalFactor polar_factor(const SymmetricMatrix& m);
OrthogonalFactor polar_factor(const EigenDecomposition& eig);

// Largest dimension (rows or columns) of a Kronecker product.
inline constexpr long kKroneckerMaxDimension = 10000;

// (pm) x (qn) block matrix [x_ij * Y]. Throws std::length_error past the cap.
Matrix kronecker(const Matrix& x, const Matrix& y);

// Column-major concatenation of the columns of m.
std::vector<double> vec(const Matrix& m);
// Inverse of vec for an rows x cols matrix.
Matrix unvec(std::span<const double> v, int rows, int cols);

double trace(const Matrix& m);
// Largest singular value.
double operator_norm(const Matrix& m);
double operator_norm(const SymmetricMatrix& m);
// Largest absolute eigenvalue.
double spectral_radius(const SymmetricMatrix& m);
double spectral_radius(std::span<const double> eigenvalues);

// ||Q^T Q - I||_max.
double orthogonality_residual(const Matrix& q);
// ||A - W diag(lambda) W^T||_max.
double reconstruction_residual(const SymmetricMatrix& a, const EigenDecomposition& eig);

}  // namespace exen

#endif  // EXEN_LINALG_HPP_
