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

#include "exen/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "exen/errors.hpp"

namespace exen {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::Identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::Diagonal(std::span<const double> diag) {
  const int n = static_cast<int>(diag.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix sum: dimension mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix difference: dimension mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
  if (static_cast<std::size_t>(a.cols_) != x.size()) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  std::vector<double> y(a.rows_, 0.0);
  for (int i = 0; i < a.rows_; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

SymmetricMatrix SymmetricMatrix::FromMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix must be square");
  SymmetricMatrix s(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not exactly symmetric");
      s.set(i, j, m(i, j));
    }
  }
  return s;
}

SymmetricMatrix SymmetricMatrix::Diagonal(std::span<const double> diag) {
  SymmetricMatrix s(static_cast<int>(diag.size()));
  for (int i = 0; i < s.order(); ++i) s.set(i, i, diag[i]);
  return s;
}

namespace {

// Cyclic Jacobi on a working copy `a`; rotations are accumulated into `v`
// when it is non-null. Returns the unsorted diagonal.
std::vector<double> JacobiSweeps(Matrix& a, Matrix* v, const JacobiOptions& options) {
  const int n = a.rows();
  for (double x : a.data()) {
    if (!std::isfinite(x)) throw NumericError("eig_symmetric: non-finite matrix entry");
  }
  const double target = options.relative_tolerance * a.frobenius();
  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) off += a(i, j) * a(i, j);
      }
    }
    if (std::sqrt(off) <= target || off == 0.0) break;
    if (sweep == options.max_sweeps) {
      throw NumericError("eig_symmetric: no convergence after " +
                         std::to_string(options.max_sweeps) + " sweeps");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (std::abs(theta) > 1e150) t = 0.5 / std::abs(theta);
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a(r, p);
          const double h = a(r, q);
          const double rp = g - s * (h + g * tau);
          const double rq = h + s * (g - h * tau);
          a(r, p) = rp;
          a(p, r) = rp;
          a(r, q) = rq;
          a(q, r) = rq;
        }
        if (v != nullptr) {
          for (int r = 0; r < n; ++r) {
            const double g = (*v)(r, p);
            const double h = (*v)(r, q);
            (*v)(r, p) = g - s * (h + g * tau);
            (*v)(r, q) = h + s * (g - h * tau);
          }
        }
      }
    }
  }
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  return diag;
}

// Indices ordering `values` non-increasingly; ties keep original index order.
std::vector<int> DescendingOrder(const std::vector<double>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return values[x] > values[y]; });
  return order;
}

}  // namespace

EigenDecomposition eig_symmetric(const SymmetricMatrix& m, const JacobiOptions& options) {
  const int n = m.order();
  Matrix a = m.matrix();
  Matrix v = Matrix::Identity(n);
  const std::vector<double> diag = JacobiSweeps(a, &v, options);
  const std::vector<int> order = DescendingOrder(diag);
  EigenDecomposition eig{std::vector<double>(n), Matrix(n, n)};
  for (int r = 0; r < n; ++r) {
    eig.eigenvalues[r] = diag[order[r]];
    for (int i = 0; i < n; ++i) eig.vectors(i, r) = v(i, order[r]);
  }
  return eig;
}

std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& m, const JacobiOptions& options) {
  Matrix a = m.matrix();
  std::vector<double> diag = JacobiSweeps(a, nullptr, options);
  std::stable_sort(diag.begin(), diag.end(), std::greater<>());
  return diag;
}

SymmetricMatrix matrix_abs(const EigenDecomposition& eig) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  SymmetricMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int r = 0; r < n; ++r) {
        s += eig.vectors(i, r) * std::abs(eig.eigenvalues[r]) * eig.vectors(j, r);
      }
      out.set(i, j, s);
    }
  }
  return out;
}

SymmetricMatrix matrix_abs(const SymmetricMatrix& m) { return matrix_abs(eig_symmetric(m)); }

std::vector<double> matrix_abs_diagonal(const EigenDecomposition& eig) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  std::vector<double> diag(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      diag[i] += eig.vectors(i, r) * eig.vectors(i, r) * std::abs(eig.eigenvalues[r]);
    }
  }
  return diag;
}

OrthogonalFactor polar_factor(const EigenDecomposition& eig) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  // U = Q P^T, Q = P diag(s), s_r = +1 if lambda_r > 0 else -1.
  Matrix u(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int r = 0; r < n; ++r) {
        const double sign = eig.eigenvalues[r] > 0.0 ? 1.0 : -1.0;
        s += sign * eig.vectors(i, r) * eig.vectors(j, r);
      }
      u(i, j) = s;
    }
  }
  return OrthogonalFactor(std::move(u));
}

OrthogonalFactor polar_factor(const SymmetricMatrix& m) { return polar_factor(eig_symmetric(m)); }

Matrix kronecker(const Matrix& x, const Matrix& y) {
  const long rows = static_cast<long>(x.rows()) * y.rows();
  const long cols = static_cast<long>(x.cols()) * y.cols();
  if (rows > kKroneckerMaxDimension || cols > kKroneckerMaxDimension) {
    throw std::length_error("kronecker: product dimension " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds cap " +
                            std::to_string(kKroneckerMaxDimension));
  }
  Matrix k(static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      const double xij = x(i, j);
      for (int a = 0; a < y.rows(); ++a) {
        for (int b = 0; b < y.cols(); ++b) k(i * y.rows() + a, j * y.cols() + b) = xij * y(a, b);
      }
    }
  }
  return k;
}

std::vector<double> vec(const Matrix& m) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
  }
  return v;
}

Matrix unvec(std::span<const double> v, int rows, int cols) {
  if (v.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("unvec: length does not match dimensions");
  }
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = v[static_cast<std::size_t>(j) * rows + i];
  }
  return m;
}

double trace(const Matrix& m) {
  double t = 0.0;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const Matrix gram = m.transpose() * m;
  // Round-off can leave the Gram product a few ulps from symmetric.
  SymmetricMatrix s(gram.cols());
  for (int i = 0; i < gram.rows(); ++i) {
    for (int j = i; j < gram.cols(); ++j) s.set(i, j, 0.5 * (gram(i, j) + gram(j, i)));
  }
  const std::vector<double> ev = eigenvalues_symmetric(s);
  return std::sqrt(std::max(0.0, ev.front()));
}

double operator_norm(const SymmetricMatrix& m) { return spectral_radius(m); }

double spectral_radius(std::span<const double> eigenvalues) {
  double r = 0.0;
  for (double x : eigenvalues) r = std::max(r, std::abs(x));
  return r;
}

double spectral_radius(const SymmetricMatrix& m) {
  return spectral_radius(eigenvalues_symmetric(m));
}

double orthogonality_residual(const Matrix& q) {
  return (q.transpose() * q - Matrix::Identity(q.cols())).max_abs();
}

double reconstruction_residual(const SymmetricMatrix& a, const EigenDecomposition& eig) {
  const int n = a.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int r = 0; r < n; ++r) s += eig.vectors(i, r) * eig.eigenvalues[r] * eig.vectors(j, r);
      worst = std::max(worst, std::abs(a(i, j) - s));
    }
  }
  return worst;
}

}  // namespace exen
