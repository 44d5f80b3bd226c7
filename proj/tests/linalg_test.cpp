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
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "exen/errors.hpp"
#include "exen/linalg.hpp"
#include "exen/random.hpp"

using exen::Matrix;
using exen::SymmetricMatrix;

namespace {

SymmetricMatrix RandomSymmetric(std::mt19937_64& rng, int n) {
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m.set(i, j, exen::uniform(rng, -2.0, 2.0));
  }
  return m;
}

Matrix RandomMatrix(std::mt19937_64& rng, int r, int c) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m(i, j) = exen::uniform(rng, -1.0, 1.0);
  }
  return m;
}

Eigen::MatrixXd ToEigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  return e;
}

double MaxDiff(const Matrix& a, const Eigen::MatrixXd& b) {
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  }
  return d;
}

double MaxDiff(const Matrix& a, const Matrix& b) { return MaxDiff(a, ToEigen(b)); }

// Eigenvalues in non-increasing order from Eigen's self-adjoint solver.
std::vector<double> EigenValues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  std::sort(v.rbegin(), v.rend());
  return v;
}

Eigen::MatrixXd EigenAbs(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return es.eigenvectors() * es.eigenvalues().cwiseAbs().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("matrix basics") {
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = -4;
  a(1, 1) = 2;
  CHECK(a.transpose().rows() == 3);
  CHECK(a.transpose()(2, 0) == -4);
  CHECK(a.max_abs() == 4);
  CHECK(a.frobenius() == doctest::Approx(std::sqrt(21.0)));
  const Matrix p = a * a.transpose();
  CHECK(p(0, 0) == 17);
  CHECK(p(1, 1) == 4);
  CHECK(exen::trace(p) == 21);
  const std::vector<double> x{1, 1, 1};
  CHECK(a * std::span<const double>(x) == std::vector<double>{-3, 2});
  CHECK(Matrix().max_abs() == 0.0);

  Matrix asym(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(SymmetricMatrix::FromMatrix(asym), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix::FromMatrix(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("jacobi on small closed forms") {
  // [[2,1],[1,2]] has eigenvalues 3 and 1.
  SymmetricMatrix m(2);
  m.set(0, 0, 2);
  m.set(1, 1, 2);
  m.set(0, 1, 1);
  const auto eig = exen::eig_symmetric(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(eig.vectors(0, 0)) == doctest::Approx(std::sqrt(0.5)));

  const std::vector<double> one{-5.0};
  const auto single = exen::eig_symmetric(SymmetricMatrix::Diagonal(one));
  CHECK(single.eigenvalues == std::vector<double>{-5.0});
  CHECK(std::abs(single.vectors(0, 0)) == 1.0);

  const auto zero = exen::eig_symmetric(SymmetricMatrix(4));
  CHECK(zero.eigenvalues == std::vector<double>(4, 0.0));
  CHECK(exen::orthogonality_residual(zero.vectors) == 0.0);

  // J - I on 5 vertices: eigenvalue 4 once, -1 with multiplicity 4.
  SymmetricMatrix k5(5);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) k5.set(i, j, 1.0);
  }
  const auto ek = exen::eig_symmetric(k5);
  CHECK(ek.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-12));
  for (int r = 1; r < 5; ++r) CHECK(ek.eigenvalues[r] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(exen::orthogonality_residual(ek.vectors) < 1e-12);
  CHECK(exen::reconstruction_residual(k5, ek) < 1e-12);
}

TEST_CASE("weighted path quartic") {
  // Off-diagonals 5/4, 1, 5/4: lambda^4 - (33/8) lambda^2 + 625/256 = 0, so
  // lambda^2 = (33/8 +- sqrt(29)/2) / 2 and the absolute values sum to sqrt(29).
  SymmetricMatrix m(4);
  m.set(0, 1, 1.25);
  m.set(1, 2, 1.0);
  m.set(2, 3, 1.25);
  const auto values = exen::eigenvalues_symmetric(m);
  const double hi = std::sqrt((33.0 / 8 + std::sqrt(29.0) / 2) / 2);
  const double lo = std::sqrt((33.0 / 8 - std::sqrt(29.0) / 2) / 2);
  const std::vector<double> expected{hi, lo, -lo, -hi};
  for (int r = 0; r < 4; ++r) CHECK(values[r] == doctest::Approx(expected[r]).epsilon(1e-13));
  double sum = 0;
  for (double v : values) sum += std::abs(v);
  CHECK(sum == doctest::Approx(std::sqrt(29.0)).epsilon(1e-13));
}

TEST_CASE("jacobi agrees with Eigen on random symmetric matrices") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const int n = exen::uniform_int(rng, 1, 12);
    const SymmetricMatrix m = RandomSymmetric(rng, n);
    const auto eig = exen::eig_symmetric(m);
    const auto ref = EigenValues(ToEigen(m.matrix()));
    for (int r = 0; r < n; ++r) CHECK(std::abs(eig.eigenvalues[r] - ref[r]) < 1e-11);
    CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
    CHECK(exen::orthogonality_residual(eig.vectors) < 1e-12);
    CHECK(exen::reconstruction_residual(m, eig) < 1e-11);
    CHECK(exen::eigenvalues_symmetric(m) == eig.eigenvalues);
  }
}

TEST_CASE("jacobi rejects non-finite input") {
  SymmetricMatrix m(3);
  m.set(0, 1, std::numeric_limits<double>::quiet_NaN());
  CHECK_THROWS_AS(exen::eig_symmetric(m), exen::NumericError);
  m.set(0, 1, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(exen::eigenvalues_symmetric(m), exen::NumericError);

  SymmetricMatrix hard = [] {
    std::mt19937_64 rng(1);
    return RandomSymmetric(rng, 8);
  }();
  CHECK_THROWS_AS(exen::eig_symmetric(hard, exen::JacobiOptions{1e-300, 1}), exen::NumericError);
}

TEST_CASE("matrix absolute value") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const int n = exen::uniform_int(rng, 1, 10);
    const SymmetricMatrix m = RandomSymmetric(rng, n);
    const SymmetricMatrix a = exen::matrix_abs(m);
    CHECK(MaxDiff(a.matrix(), EigenAbs(ToEigen(m.matrix()))) < 1e-11);
    // |X|^2 = X^2.
    CHECK(MaxDiff(a.matrix() * a.matrix(), m.matrix() * m.matrix()) < 1e-10);
    const auto eig = exen::eig_symmetric(m);
    const auto diag = exen::matrix_abs_diagonal(eig);
    for (int i = 0; i < n; ++i) CHECK(diag[i] == doctest::Approx(a(i, i)).epsilon(1e-12));
    double tr = 0, abs_sum = 0;
    for (int i = 0; i < n; ++i) tr += diag[i];
    for (double v : eig.eigenvalues) abs_sum += std::abs(v);
    CHECK(tr == doctest::Approx(abs_sum).epsilon(1e-12));
  }
  const std::vector<double> d{-3.0, 0.0, 2.0};
  const SymmetricMatrix a = exen::matrix_abs(SymmetricMatrix::Diagonal(d));
  CHECK(a(0, 0) == doctest::Approx(3.0));
  CHECK(a(1, 1) == doctest::Approx(0.0));
  CHECK(a(2, 2) == doctest::Approx(2.0));
}

TEST_CASE("polar factor") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const int n = exen::uniform_int(rng, 1, 9);
    SymmetricMatrix m = RandomSymmetric(rng, n);
    if (k % 3 == 0 && n > 1) {
      // Rank one: the null space takes the flipped sign.
      std::vector<double> v(n);
      for (double& x : v) x = exen::uniform(rng, -1.0, 1.0);
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) m.set(i, j, v[i] * v[j]);
      }
    }
    const auto u = exen::polar_factor(m);
    CHECK(exen::orthogonality_residual(u.matrix()) < 1e-12);
    const Matrix rebuilt = exen::matrix_abs(m).matrix() * u.matrix();
    CHECK(MaxDiff(rebuilt, m.matrix()) < 1e-11);
  }
  // X = 0: U = -I.
  const auto u0 = exen::polar_factor(SymmetricMatrix(3));
  CHECK(MaxDiff(u0.matrix(), Matrix::Identity(3) * -1.0) < 1e-15);
  // Negative definite X: U = -I.
  const std::vector<double> d{-1.0, -2.0};
  const auto un = exen::polar_factor(SymmetricMatrix::Diagonal(d));
  CHECK(MaxDiff(un.matrix(), Matrix::Identity(2) * -1.0) < 1e-15);
}

TEST_CASE("kronecker product") {
  Matrix x(2, 2);
  x(0, 0) = 1;
  x(0, 1) = 2;
  x(1, 0) = 3;
  x(1, 1) = 4;
  const Matrix k = exen::kronecker(x, Matrix::Identity(2));
  CHECK(k.rows() == 4);
  CHECK(k(0, 0) == 1);
  CHECK(k(1, 1) == 1);
  CHECK(k(0, 2) == 2);
  CHECK(k(3, 1) == 3);
  CHECK(k(3, 3) == 4);
  CHECK(k(0, 1) == 0);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = RandomMatrix(rng, 2, 3), b = RandomMatrix(rng, 3, 2);
    const Matrix c = RandomMatrix(rng, 3, 2), d = RandomMatrix(rng, 2, 3);
    const Eigen::MatrixXd ea = ToEigen(a), eb = ToEigen(b);
    Eigen::MatrixXd ref(ea.rows() * eb.rows(), ea.cols() * eb.cols());
    for (int i = 0; i < ea.rows(); ++i) {
      for (int j = 0; j < ea.cols(); ++j) {
        ref.block(i * eb.rows(), j * eb.cols(), eb.rows(), eb.cols()) = ea(i, j) * eb;
      }
    }
    CHECK(MaxDiff(exen::kronecker(a, b), ref) == 0.0);
    // Mixed product.
    CHECK(MaxDiff(exen::kronecker(a, b) * exen::kronecker(c, d),
                  exen::kronecker(a * c, b * d)) < 1e-13);
  }

  CHECK_THROWS_AS(exen::kronecker(Matrix(101, 1), Matrix(100, 1)), std::length_error);
  CHECK(exen::kronecker(Matrix(100, 1), Matrix(100, 1)).rows() == 10000);
}

TEST_CASE("vec is column-major and inverts") {
  Matrix m(2, 3);
  m(0, 0) = 1;
  m(1, 0) = 2;
  m(0, 1) = 3;
  m(1, 1) = 4;
  m(0, 2) = 5;
  m(1, 2) = 6;
  CHECK(exen::vec(m) == std::vector<double>{1, 2, 3, 4, 5, 6});
  CHECK(exen::unvec(exen::vec(m), 2, 3) == m);

  // vec(A X B) = (B^T (x) A) vec(X).
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = RandomMatrix(rng, 3, 3), x = RandomMatrix(rng, 3, 3),
                 b = RandomMatrix(rng, 3, 3);
    const auto lhs = exen::vec(a * x * b);
    const auto vx = exen::vec(x);
    const auto rhs = exen::kronecker(b.transpose(), a) * std::span<const double>(vx);
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]));
  }
}

TEST_CASE("norms agree with Eigen") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = RandomMatrix(rng, exen::uniform_int(rng, 1, 7), exen::uniform_int(rng, 1, 7));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ToEigen(m));
    CHECK(exen::operator_norm(m) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));

    const SymmetricMatrix s = RandomSymmetric(rng, exen::uniform_int(rng, 1, 7));
    const auto ev = EigenValues(ToEigen(s.matrix()));
    const double rho = std::max(std::abs(ev.front()), std::abs(ev.back()));
    CHECK(exen::spectral_radius(s) == doctest::Approx(rho).epsilon(1e-12));
    CHECK(exen::operator_norm(s) == doctest::Approx(rho).epsilon(1e-12));
  }
  const std::vector<double> ev{2.0, -3.5, 1.0};
  CHECK(exen::spectral_radius(ev) == 3.5);
}

}  // TEST_SUITE
