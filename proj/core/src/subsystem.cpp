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

#include "rsed/subsystem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "rsed/bitcore.hpp"
#include "rsed/errors.hpp"

namespace rsed {

namespace {

int dimension_to_qubits(Eigen::Index rows, Eigen::Index cols, const char *what) {
  if (rows != cols || rows < 2) {
    throw ValidationError(std::string(what) + ": expected a square matrix of dimension >= 2");
  }
  const auto dim = static_cast<std::uint64_t>(rows);
  if ((dim & (dim - 1)) != 0) throw ValidationError(std::string(what) + ": dimension is not a power of two");
  const int k = std::countr_zero(dim);
  if (k > kMaxSubsystemQubits) {
    throw CapacityError(std::string(what) + ": k=" + std::to_string(k) + " exceeds the dense cap of 12");
  }
  return k;
}

void check_k(int k, const char *what) {
  if (k < 1 || k > kMaxSubsystemQubits) {
    throw DomainError(std::string(what) + ": k=" + std::to_string(k) + " outside [1, 12]");
  }
}

}  // namespace

SubUnitary::SubUnitary(Matrix entries, double tolerance)
    : k_(dimension_to_qubits(entries.rows(), entries.cols(), "SubUnitary")), entries_(std::move(entries)) {
  const double err = unitarity_error(entries_);
  if (!(err <= tolerance)) {
    throw ValidationError("SubUnitary: ||u^dagger u - I||_max = " + std::to_string(err) + " exceeds tolerance");
  }
}

SubUnitary::SubUnitary(Matrix entries, Unchecked)
    : k_(dimension_to_qubits(entries.rows(), entries.cols(), "SubUnitary")), entries_(std::move(entries)) {}

SubUnitary SubUnitary::unchecked(Matrix entries) { return SubUnitary(std::move(entries), Unchecked{}); }

SubHamiltonian::SubHamiltonian(Matrix entries, double tolerance) {
  k_ = dimension_to_qubits(entries.rows(), entries.cols(), "SubHamiltonian");
  const double err = hermiticity_error(entries);
  if (!(err <= tolerance)) {
    throw ValidationError("SubHamiltonian: ||h - h^dagger||_max = " + std::to_string(err) + " exceeds tolerance");
  }
  entries_ = (entries + entries.adjoint()) * 0.5;
  auto eig = hermitian_eigen(entries_);
  values_ = std::move(eig.values);
  vectors_ = std::move(eig.vectors);
}

SubHamiltonian SubHamiltonian::from_spectrum(RealVector values, Matrix vectors) {
  SubHamiltonian h;
  h.k_ = dimension_to_qubits(vectors.rows(), vectors.cols(), "SubHamiltonian");
  if (values.size() != vectors.cols()) throw ValidationError("SubHamiltonian: eigenvalue count mismatch");
  // Keep ascending order like the eigensolver path.
  std::vector<Eigen::Index> order(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return values(x) < values(y); });
  h.values_.resize(values.size());
  h.vectors_.resize(vectors.rows(), vectors.cols());
  for (std::size_t i = 0; i < order.size(); ++i) {
    h.values_(static_cast<Eigen::Index>(i)) = values(order[i]);
    h.vectors_.col(static_cast<Eigen::Index>(i)) = vectors.col(order[i]);
  }
  Matrix m = spectral_compose(h.vectors_, h.values_.cast<Complex>());
  h.entries_ = (m + m.adjoint()) * 0.5;
  return h;
}

SubUnitary hadamard_layer(int k) {
  check_k(k, "hadamard_layer");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << k);
  const double scale = std::pow(2.0, -0.5 * k);
  Matrix u(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      u(r, c) = bits::parity(static_cast<std::uint64_t>(r & c)) ? -scale : scale;
    }
  }
  return SubUnitary::unchecked(std::move(u));
}

std::vector<std::uint8_t> random_sign_bits(int k, RngSeed seed) {
  check_k(k, "random_sign_bits");
  Rng rng(seed);
  std::vector<std::uint8_t> phi(std::size_t{1} << k);
  for (auto &v : phi) v = static_cast<std::uint8_t>(rng.bit());
  return phi;
}

SubUnitary sign_diag(const std::vector<std::uint8_t> &phi) {
  const auto dim = static_cast<Eigen::Index>(phi.size());
  Vector d(dim);
  for (Eigen::Index i = 0; i < dim; ++i) d(i) = phi[static_cast<std::size_t>(i)] ? -1.0 : 1.0;
  return SubUnitary::unchecked(Matrix(d.asDiagonal()));
}

SubUnitary random_sign_diag(int k, RngSeed seed) { return sign_diag(random_sign_bits(k, seed)); }

SubUnitary random_sign_hadamard(int k, RngSeed seed) { return SignedHadamard::random(k, seed).dense_power(1); }

SubUnitary random_unitary(int k, RngSeed seed) {
  check_k(k, "random_unitary");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << k);
  Rng rng(seed);
  Matrix g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) g(r, c) = Complex(rng.normal(), rng.normal());
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  return SubUnitary::unchecked(std::move(q));
}

SignedHadamard::SignedHadamard(int k, std::vector<std::uint8_t> phi) : k_(k), phi_(std::move(phi)) {
  check_k(k, "SignedHadamard");
  if (phi_.size() != (std::size_t{1} << k)) throw DomainError("SignedHadamard: sign pattern must have 2^k entries");
}

void SignedHadamard::apply_power(std::span<double> v, int power) const {
  if (v.size() != phi_.size()) throw DomainError("SignedHadamard::apply_power: length mismatch");
  if (power < 0) throw DomainError("SignedHadamard::apply_power: negative power");
  const double scale = std::pow(2.0, -0.5 * k_);
  for (int step = 0; step < power; ++step) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (phi_[i]) v[i] = -v[i];
    }
    fwht(v);
    for (double &x : v) x *= scale;
  }
}

RealVector SignedHadamard::power_column(std::uint64_t b0, int power) const {
  RealVector col = RealVector::Zero(static_cast<Eigen::Index>(phi_.size()));
  col(static_cast<Eigen::Index>(b0)) = 1.0;
  apply_power(std::span<double>(col.data(), static_cast<std::size_t>(col.size())), power);
  return col;
}

SubUnitary SignedHadamard::dense_power(int power) const {
  const auto dim = static_cast<Eigen::Index>(phi_.size());
  Matrix u(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) u.col(c) = power_column(static_cast<std::uint64_t>(c), power).cast<Complex>();
  return SubUnitary::unchecked(std::move(u));
}

namespace {

// i^phase X^x Z^z on k qubits.
struct PauliWord {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int phase = 0;
};

PauliWord multiply(const PauliWord &a, const PauliWord &b) {
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  const int sign_swaps = bits::popcount(a.z & b.x);
  return {a.x ^ b.x, a.z ^ b.z, (a.phase + b.phase + 2 * sign_swaps) & 3};
}

PauliWord majorana(int mu) {
  const int qubit = mu / 2;
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  if (mu % 2 == 0) return {bit, 0, 0};  // X
  return {bit, bit, 1};                  // Y = i X Z
}

Complex i_power(int e) {
  switch (e & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::size_t syk_term_count(int k) {
  const std::size_t m = 2 * static_cast<std::size_t>(k);
  return m * (m - 1) * (m - 2) * (m - 3) / 24;
}

}  // namespace

SubHamiltonian pauli_syk(int k, RngSeed seed) {
  if (k < 2) throw DomainError("pauli_syk: need k >= 2 (at least four Majoranas)");
  check_k(k, "pauli_syk");
  Rng rng(seed);
  std::vector<double> couplings(syk_term_count(k));
  for (double &j : couplings) j = rng.normal();
  return pauli_syk(k, couplings);
}

SubHamiltonian pauli_syk(int k, const std::vector<double> &couplings) {
  if (k < 2) throw DomainError("pauli_syk: need k >= 2 (at least four Majoranas)");
  check_k(k, "pauli_syk");
  if (couplings.size() != syk_term_count(k)) throw DomainError("pauli_syk: wrong number of couplings");

  const int n_maj = 2 * k;
  const auto dim = static_cast<std::uint64_t>(1) << k;
  Matrix h = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::size_t term = 0;
  for (int a = 0; a < n_maj; ++a) {
    for (int b = a + 1; b < n_maj; ++b) {
      for (int c = b + 1; c < n_maj; ++c) {
        for (int d = c + 1; d < n_maj; ++d, ++term) {
          const PauliWord w = multiply(multiply(majorana(a), majorana(b)), multiply(majorana(c), majorana(d)));
          const int eta = (a / 2 == b / 2) + (b / 2 == c / 2) + (c / 2 == d / 2);
          const Complex coeff = couplings[term] * i_power(w.phase + eta);
          for (std::uint64_t v = 0; v < dim; ++v) {
            const double z_sign = bits::parity(w.z & v) ? -1.0 : 1.0;
            h(static_cast<Eigen::Index>(v ^ w.x), static_cast<Eigen::Index>(v)) += coeff * z_sign;
          }
        }
      }
    }
  }

  SubHamiltonian raw(std::move(h));
  const RealVector &ev = raw.eigenvalues();
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  if (scale == 0.0) return raw;
  return SubHamiltonian::from_spectrum(ev / scale, raw.eigenvectors());
}

SubHamiltonian parent_hamiltonian(const SubUnitary &u) {
  const UnitaryEigen eig = unitary_eigen(u.matrix());
  RealVector values(eig.phases.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double theta = eig.phases(i);
    values(i) = theta >= std::numbers::pi ? 0.5 : -theta / (2.0 * std::numbers::pi);
  }
  return SubHamiltonian::from_spectrum(std::move(values), eig.vectors);
}

SubUnitary unitary_power(const SubUnitary &u, double t) {
  if (t >= 0.0 && t == std::floor(t) && t < 1e9) {
    auto exponent = static_cast<std::uint64_t>(t);
    Matrix result = Matrix::Identity(u.matrix().rows(), u.matrix().cols());
    Matrix base = u.matrix();
    while (exponent > 0) {
      if (exponent & 1) result = result * base;
      exponent >>= 1;
      if (exponent > 0) base = base * base;
    }
    return SubUnitary::unchecked(std::move(result));
  }
  const UnitaryEigen eig = unitary_eigen(u.matrix());
  Vector d(eig.phases.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::exp(kI * (eig.phases(i) * t));
  return SubUnitary::unchecked(spectral_compose(eig.vectors, d));
}

SubUnitary evolve(const SubHamiltonian &h, double t) {
  const RealVector &values = h.eigenvalues();
  Vector d(values.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::exp(-kI * (values(i) * t));
  return SubUnitary::unchecked(spectral_compose(h.eigenvectors(), d));
}

ElementMagnitudeStats element_magnitude_stats(const Matrix &u, double epsilon) {
  ElementMagnitudeStats out;
  const double dim = static_cast<double>(u.rows());
  out.threshold = std::pow(dim, -epsilon);
  const Eigen::MatrixXd sq = u.cwiseAbs2();
  out.max_sq = sq.maxCoeff();
  out.mean_sq = sq.mean();
  for (Eigen::Index i = 0; i < sq.size(); ++i) {
    if (sq.data()[i] >= out.threshold) ++out.exceed_count;
  }
  out.exceed_fraction = static_cast<double>(out.exceed_count) / static_cast<double>(sq.size());
  return out;
}

}  // namespace rsed
