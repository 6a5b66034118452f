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

#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace rsed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

double max_abs(const Matrix &m);
/// max |(m^dagger m - I)_{ij}|
double unitarity_error(const Matrix &m);
/// max |(m - m^dagger)_{ij}|
double hermiticity_error(const Matrix &m);

/// Eigen-decomposition of a unitary (normal) matrix: m = vectors * diag(e^{i phases}) * vectors^dagger
/// with vectors unitary and phases in (-pi, pi]. Uses a Hermitian solve on a
/// mix of the real and imaginary parts, then a small Schur step inside nearly
/// degenerate clusters. Degenerate eigenspaces get an orthonormal basis.
/// Phases within kPhaseSnap of -pi are moved to +pi. Throws ValidationError
/// for non-normal input or eigenvalues off the unit circle.
struct UnitaryEigen {
  RealVector phases;
  Matrix vectors;
};
inline constexpr double kPhaseSnap = 1e-9;
UnitaryEigen unitary_eigen(const Matrix &m);

struct HermitianEigen {
  RealVector values;  ///< ascending
  Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix &m);

/// vectors * diag(d) * vectors^dagger
Matrix spectral_compose(const Matrix &vectors, const Vector &d);

/// Unnormalized in-place Walsh-Hadamard transform; size must be a power of two.
void fwht(std::span<double> v);
void fwht(std::span<Complex> v);

/// Kronecker product a (x) b; a acts on the high index bits.
Matrix kron(const Matrix &a, const Matrix &b);

/// -sum p log p over p > 0 (natural log).
double shannon_entropy(std::span<const double> probabilities);

}  // namespace rsed
