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

#include <cstdint>
#include <span>
#include <vector>

#include "rsed/linalg.hpp"
#include "rsed/rng.hpp"

namespace rsed {

inline constexpr int kMaxSubsystemQubits = 12;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;

/// Dense K x K unitary on the embedded subsystem.
class SubUnitary {
 public:
  /// Validates shape (square, power-of-two dimension, k <= 12) and unitarity.
  explicit SubUnitary(Matrix entries, double tolerance = kUnitaryTolerance);
  /// Skips the unitarity check; for results of exact constructions.
  static SubUnitary unchecked(Matrix entries);

  int k() const noexcept { return k_; }
  std::uint64_t dim() const noexcept { return static_cast<std::uint64_t>(entries_.rows()); }
  const Matrix &matrix() const noexcept { return entries_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  SubUnitary adjoint() const { return unchecked(entries_.adjoint()); }
  friend SubUnitary operator*(const SubUnitary &a, const SubUnitary &b) { return unchecked(a.entries_ * b.entries_); }

 private:
  struct Unchecked {};
  SubUnitary(Matrix entries, Unchecked);

  int k_;
  Matrix entries_;
};

/// Dense Hermitian K x K Hamiltonian with its eigen-decomposition computed at
/// construction (immutable afterwards).
class SubHamiltonian {
 public:
  explicit SubHamiltonian(Matrix entries, double tolerance = kHermitianTolerance);
  /// From an orthonormal eigenbasis and real eigenvalues.
  static SubHamiltonian from_spectrum(RealVector values, Matrix vectors);

  int k() const noexcept { return k_; }
  std::uint64_t dim() const noexcept { return static_cast<std::uint64_t>(entries_.rows()); }
  const Matrix &matrix() const noexcept { return entries_; }
  /// Ascending.
  const RealVector &eigenvalues() const noexcept { return values_; }
  const Matrix &eigenvectors() const noexcept { return vectors_; }

 private:
  SubHamiltonian() = default;

  int k_ = 0;
  Matrix entries_;
  RealVector values_;
  Matrix vectors_;
};

/// u_{b,b'} = 2^{-k/2} (-1)^{popcount(b & b')}
SubUnitary hadamard_layer(int k);

/// Random sign pattern phi(b) for the diagonal P = diag((-1)^phi(b)).
std::vector<std::uint8_t> random_sign_bits(int k, RngSeed seed);
SubUnitary sign_diag(const std::vector<std::uint8_t> &phi);
SubUnitary random_sign_diag(int k, RngSeed seed);

/// H^{(x)k} P with P = random_sign_diag(k, seed).
SubUnitary random_sign_hadamard(int k, RngSeed seed);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
SubUnitary random_unitary(int k, RngSeed seed);

/// Structured form of u = H^{(x)k} diag((-1)^phi). Powers are applied column
/// by column with the fast Walsh-Hadamard transform in O(K log K) per column.
class SignedHadamard {
 public:
  SignedHadamard(int k, std::vector<std::uint8_t> phi);
  static SignedHadamard random(int k, RngSeed seed) { return {k, random_sign_bits(k, seed)}; }
  static SignedHadamard plain(int k) { return {k, std::vector<std::uint8_t>(std::size_t{1} << k, 0)}; }

  int k() const noexcept { return k_; }
  std::uint64_t dim() const noexcept { return phi_.size(); }
  const std::vector<std::uint8_t> &signs() const noexcept { return phi_; }

  /// In-place v <- u^power v.
  void apply_power(std::span<double> v, int power) const;
  /// Column b0 of u^power.
  RealVector power_column(std::uint64_t b0, int power) const;
  SubUnitary dense_power(int power) const;

 private:
  int k_;
  std::vector<std::uint8_t> phi_;
};

/// Pauli SYK on k qubits: Majoranas chi_{2m} = X_m, chi_{2m+1} = Y_m (0-based),
/// h' = sum_{a<b<c<d} J_abcd i^{eta_abcd} chi_a chi_b chi_c chi_d with standard
/// normal J and eta the number of same-qubit pairs among (a,b,c,d), then
/// rescaled by 1 / max(|lambda_min|, |lambda_max|).
SubHamiltonian pauli_syk(int k, RngSeed seed);
/// Same with caller-supplied couplings in lexicographic (a<b<c<d) order.
SubHamiltonian pauli_syk(int k, const std::vector<double> &couplings);

/// h = (i / 2 pi) log u on the principal branch; eigenvalues lie in (-1/2, 1/2]
/// and exp(-2 pi i h) = u.
SubHamiltonian parent_hamiltonian(const SubUnitary &u);

/// u^t. Non-negative integer t uses repeated squaring; any other t uses the
/// eigenphases theta in (-pi, pi]: u^t = V e^{i theta t} V^dagger.
SubUnitary unitary_power(const SubUnitary &u, double t);

/// e^{-i h t}
SubUnitary evolve(const SubHamiltonian &h, double t);

struct ElementMagnitudeStats {
  double max_sq = 0.0;
  double mean_sq = 0.0;
  double threshold = 0.0;         ///< K^{-epsilon}
  double exceed_fraction = 0.0;   ///< fraction of entries with |u|^2 >= threshold
  std::uint64_t exceed_count = 0;
};
ElementMagnitudeStats element_magnitude_stats(const Matrix &u, double epsilon);

}  // namespace rsed
