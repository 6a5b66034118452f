// Copyright 2026 The rsedkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsed/linalg.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "rsed/errors.hpp"

namespace rsed {

double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_error(const Matrix &m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
}

double hermiticity_error(const Matrix &m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m - m.adjoint());
}

UnitaryEigen unitary_eigen(const Matrix &m) {
  const Eigen::Index dim = m.rows();
  if (dim != m.cols()) throw DomainError("unitary_eigen: matrix must be square");
  // Re(u) + c Im(u) is Hermitian and shares the eigenvectors of a normal u; a generic c
  // splits almost all distinct phases, and the rest are resolved cluster by cluster below.
  constexpr double kMix = 0.6180339887498949;
  const Matrix mixed = 0.5 * (m + m.adjoint()) - Complex(0.0, 0.5 * kMix) * (m - m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mixed);
  // The tridiagonal QL step occasionally hits its iteration cap; a single cluster
  // spanning everything then falls back to a full Schur decomposition.
  const bool split = solver.info() == Eigen::Success;
  const RealVector mu = split ? RealVector(solver.eigenvalues()) : RealVector::Zero(dim);
  const Matrix v = split ? Matrix(solver.eigenvectors()) : Matrix(Matrix::Identity(dim, dim));
  const Matrix d = split ? Matrix(v.adjoint() * m * v) : m;

  UnitaryEigen out;
  out.phases.resize(dim);
  out.vectors.resize(dim, dim);
  constexpr double kCluster = 1e-6;
  double leak = 0.0;
  for (Eigen::Index lo = 0; lo < dim;) {
    Eigen::Index hi = lo + 1;
    while (hi < dim && mu(hi) - mu(hi - 1) <= kCluster) ++hi;
    const Eigen::Index size = hi - lo;
    Vector diag(size);
    if (size == 1) {
      diag(0) = d(lo, lo);
      out.vectors.col(lo) = v.col(lo);
    } else {
      Eigen::ComplexSchur<Matrix> schur(d.block(lo, lo, size, size));
      if (schur.info() != Eigen::Success) throw ValidationError("unitary_eigen: Schur step did not converge");
      diag = schur.matrixT().diagonal();
      out.vectors.middleCols(lo, size) = v.middleCols(lo, size) * schur.matrixU();
    }
    for (Eigen::Index i = 0; i < size; ++i) {
      const Complex z = diag(i);
      if (std::abs(std::abs(z) - 1.0) > 1e-8) throw ValidationError("unitary_eigen: eigenvalue off the unit circle");
      double theta = std::arg(z);
      if (theta <= -std::numbers::pi + kPhaseSnap) theta = std::numbers::pi;
      out.phases(lo + i) = theta;
    }
    if (lo > 0) leak = std::max(leak, d.block(lo, 0, size, lo).cwiseAbs().maxCoeff());
    if (hi < dim) leak = std::max(leak, d.block(lo, hi, size, dim - hi).cwiseAbs().maxCoeff());
    lo = hi;
  }
  if (leak > 1e-8) throw ValidationError("unitary_eigen: matrix is not normal");
  return out;
}

HermitianEigen hermitian_eigen(const Matrix &m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw ValidationError("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix spectral_compose(const Matrix &vectors, const Vector &d) {
  return vectors * d.asDiagonal() * vectors.adjoint();
}

namespace {

template <typename T>
void fwht_impl(std::span<T> v) {
  const std::size_t size = v.size();
  if (size == 0 || (size & (size - 1)) != 0) throw DomainError("fwht: length must be a power of two");
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * half) {
      for (std::size_t i = base; i < base + half; ++i) {
        const T x = v[i];
        const T y = v[i + half];
        v[i] = x + y;
        v[i + half] = x - y;
      }
    }
  }
}

}  // namespace

void fwht(std::span<double> v) { fwht_impl(v); }
void fwht(std::span<Complex> v) { fwht_impl(v); }

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

}  // namespace rsed
