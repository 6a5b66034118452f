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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "oracle_values.hpp"
#include "rsed/errors.hpp"
#include "rsed/linalg.hpp"
#include "rsed/subsystem.hpp"

namespace rsed {
namespace {

Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

TEST(SubUnitary, Validation) {
  EXPECT_THROW(SubUnitary(Matrix::Ones(2, 2)), ValidationError);
  EXPECT_THROW(SubUnitary(identity(3)), ValidationError);
  EXPECT_THROW(SubUnitary(Matrix::Identity(2, 4)), ValidationError);
  EXPECT_THROW(SubUnitary(identity(8192)), CapacityError);
  const SubUnitary u(identity(8));
  EXPECT_EQ(u.k(), 3);
  EXPECT_EQ(u.dim(), 8u);
}

TEST(SubHamiltonian, ReconstructsAndRejects) {
  Matrix m = fixtures::fixed_hamiltonian(3);
  const SubHamiltonian h(m);
  const Matrix back = h.eigenvectors() * h.eigenvalues().cast<Complex>().asDiagonal() * h.eigenvectors().adjoint();
  EXPECT_LE(max_abs(back - m), 1e-8);
  for (Eigen::Index i = 1; i < h.eigenvalues().size(); ++i) EXPECT_LE(h.eigenvalues()(i - 1), h.eigenvalues()(i));
  m(0, 1) += 0.1;
  EXPECT_THROW(SubHamiltonian{m}, ValidationError);
}

TEST(HadamardLayer, Entries) {
  const auto h1 = hadamard_layer(1);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(h1(0, 0).real(), r, 1e-15);
  EXPECT_NEAR(h1(1, 1).real(), -r, 1e-15);
  EXPECT_NEAR(hadamard_layer(2)(3, 3).real(), 0.5, 1e-15);
  for (int k = 1; k <= 6; ++k) {
    const auto h = hadamard_layer(k);
    EXPECT_LE(max_abs(h.matrix() * h.matrix() - identity(h.matrix().rows())), 1e-12);
  }
  EXPECT_THROW(hadamard_layer(0), DomainError);
}

TEST(SignDiag, Properties) {
  EXPECT_LE(max_abs(sign_diag(std::vector<std::uint8_t>(8, 0)).matrix() - identity(8)), 0.0);
  const auto p = random_sign_diag(5, RngSeed{3});
  EXPECT_LE(max_abs(p.matrix() * p.matrix() - identity(32)), 0.0);
  EXPECT_EQ(random_sign_bits(5, RngSeed{3}), random_sign_bits(5, RngSeed{3}));
  EXPECT_EQ(random_sign_hadamard(4, RngSeed{3}).matrix(), (hadamard_layer(4) * random_sign_diag(4, RngSeed{3})).matrix());
}

TEST(RandomUnitary, IsUnitaryAndSeeded) {
  const auto u = random_unitary(5, RngSeed{17});
  EXPECT_LE(unitarity_error(u.matrix()), 1e-12);
  EXPECT_EQ(u.matrix(), random_unitary(5, RngSeed{17}).matrix());
  EXPECT_GT(max_abs(u.matrix() - random_unitary(5, RngSeed{18}).matrix()), 0.1);
}

TEST(SignedHadamard, MatchesDense) {
  const auto sh = SignedHadamard::random(6, RngSeed{5});
  const SubUnitary u1 = hadamard_layer(6) * sign_diag(sh.signs());
  for (int power : {0, 1, 2, 3, 4}) {
    EXPECT_LE(max_abs(sh.dense_power(power).matrix() - unitary_power(u1, power).matrix()), 1e-12) << power;
    const RealVector col = sh.power_column(9, power);
    EXPECT_LE(max_abs(Matrix(col.cast<Complex>()) - Matrix(unitary_power(u1, power).matrix().col(9))), 1e-12);
  }
  std::vector<double> v(63);
  EXPECT_THROW(sh.apply_power(v, 1), DomainError);
}

TEST(PauliSyk, TwoQubitSingleTerm) {
  const auto h = pauli_syk(2, std::vector<double>{1.0});
  const auto &ev = h.eigenvalues();
  EXPECT_NEAR(ev(0), -1.0, 1e-12);
  EXPECT_NEAR(ev(1), -1.0, 1e-12);
  EXPECT_NEAR(ev(2), 1.0, 1e-12);
  EXPECT_NEAR(ev(3), 1.0, 1e-12);
  // Diagonal, proportional to Z0 Z1.
  const Matrix &m = h.matrix();
  EXPECT_NEAR(std::abs(m(0, 0) + m(1, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(m(0, 0) - m(3, 3)), 0.0, 1e-12);
  EXPECT_THROW(pauli_syk(1, RngSeed{1}), DomainError);
  EXPECT_THROW(pauli_syk(3, std::vector<double>{1.0}), DomainError);
}

TEST(PauliSyk, FrozenSpectrum) {
  std::vector<double> j(15);
  for (std::size_t m = 0; m < j.size(); ++m) j[m] = std::sin(static_cast<double>(m) + 1.0);
  const auto h = pauli_syk(3, j);
  EXPECT_LE(hermiticity_error(h.matrix()), 1e-12);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(h.eigenvalues()(i), oracle::kSykFixedK3[i], 1e-12) << i;
}

TEST(PauliSyk, NormalizedAcrossSeeds) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto h = pauli_syk(5, RngSeed{100, s});
    const auto &ev = h.eigenvalues();
    EXPECT_LE(hermiticity_error(h.matrix()), 1e-10);
    EXPECT_NEAR(std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))), 1.0, 1e-12);
    EXPECT_GE(ev(0), -1.0 - 1e-12);
  }
}

TEST(ParentHamiltonian, Examples) {
  EXPECT_LE(max_abs(parent_hamiltonian(SubUnitary(identity(4))).matrix()), 1e-12);
  Matrix z = identity(2);
  z(1, 1) = -1.0;
  const auto h = parent_hamiltonian(SubUnitary(z));
  EXPECT_NEAR(h.eigenvalues()(0), 0.0, 1e-12);
  EXPECT_NEAR(h.eigenvalues()(1), 0.5, 1e-12);
}

TEST(ParentHamiltonian, RoundTripAndFrozen) {
  const auto u = random_sign_hadamard(4, RngSeed{12});
  EXPECT_LE(max_abs(evolve(parent_hamiltonian(u), 2.0 * std::numbers::pi).matrix() - u.matrix()), 1e-8);
  const auto h = parent_hamiltonian(fixtures::fixed_unitary(2));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(h.eigenvalues()(i), oracle::kParentFixedK2[i], 1e-10);
  EXPECT_THROW(parent_hamiltonian(SubUnitary::unchecked(Matrix::Ones(2, 2))), ValidationError);
}

TEST(UnitaryPower, Paths) {
  const auto u = fixtures::fixed_unitary(3);
  EXPECT_LE(max_abs(unitary_power(u, 0).matrix() - identity(8)), 1e-15);
  EXPECT_LE(max_abs(unitary_power(u, 1).matrix() - u.matrix()), 1e-15);
  for (int k = 1; k <= 6; ++k) {
    const auto h = hadamard_layer(k);
    // Negative exponents take the eigenphase path.
    EXPECT_LE(max_abs(unitary_power(h, -2.0).matrix() - identity(h.matrix().rows())), 1e-9);
    const auto half = unitary_power(h, 0.5);
    EXPECT_LE(max_abs((half * half * half * half).matrix() - identity(h.matrix().rows())), 1e-9);
    EXPECT_LE(max_abs(unitary_power(h, 2).matrix() - identity(h.matrix().rows())), 1e-12);
  }
  // Integer and eigen paths agree: compare u^t with (u^{t/2})^2 through a fractional exponent.
  for (int k = 2; k <= 6; ++k) {
    const auto w = random_sign_hadamard(k, RngSeed{7, static_cast<std::uint64_t>(k)});
    for (int t : {2, 3, 4}) {
      const auto half = unitary_power(w, 0.5 * t);
      EXPECT_LE(max_abs((half * half).matrix() - unitary_power(w, t).matrix()), 1e-8);
      EXPECT_LE(unitarity_error(half.matrix()), 1e-9);
    }
  }
}

TEST(Evolve, ExamplesAndGroupLaw) {
  const auto h = pauli_syk(4, RngSeed{2});
  EXPECT_LE(max_abs(evolve(h, 0.0).matrix() - identity(16)), 1e-12);
  Matrix z = identity(2);
  z(1, 1) = -1.0;
  EXPECT_LE(max_abs(evolve(SubHamiltonian(z), std::numbers::pi).matrix() + identity(2)), 1e-12);
  EXPECT_LE(max_abs((evolve(h, 0.3) * evolve(h, 1.1)).matrix() - evolve(h, 1.4).matrix()), 1e-8);
  EXPECT_LE(unitarity_error(evolve(h, 7.0).matrix()), 1e-9);
}

TEST(Evolve, SykMatrixElementsAreSpread) {
  const auto h = pauli_syk(6, RngSeed{4});
  const auto u = evolve(h, 3.0);
  const auto stats = element_magnitude_stats(u.matrix(), 0.5);
  EXPECT_NEAR(stats.mean_sq, 1.0 / 64.0, 1e-12);
  EXPECT_LE(stats.max_sq, 64.0 * stats.mean_sq);
}

TEST(ElementStats, Examples) {
  const auto h = element_magnitude_stats(hadamard_layer(5).matrix(), 0.5);
  EXPECT_NEAR(h.max_sq, 1.0 / 32.0, 1e-15);
  EXPECT_NEAR(h.mean_sq, 1.0 / 32.0, 1e-15);
  const auto i = element_magnitude_stats(identity(32), 0.5);
  EXPECT_EQ(i.max_sq, 1.0);
  EXPECT_NEAR(i.mean_sq, 1.0 / 32.0, 1e-15);
  EXPECT_EQ(i.exceed_count, 32u);
}

TEST(ElementStats, SignedHadamardFourthPowerTail) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto u = SignedHadamard::random(8, RngSeed{300, s}).dense_power(4);
    EXPECT_LT(element_magnitude_stats(u.matrix(), 0.5).exceed_fraction, 1e-3);
  }
}

}  // namespace
}  // namespace rsed

namespace rsed {
namespace {

double reconstruction_error(const Matrix &m) {
  const auto eig = unitary_eigen(m);
  Vector d(eig.phases.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::exp(Complex(0.0, eig.phases(i)));
  return std::max(max_abs(spectral_compose(eig.vectors, d) - m), unitarity_error(eig.vectors));
}

TEST(UnitaryEigen, ReconstructsDegenerateAndGeneric) {
  EXPECT_LE(reconstruction_error(hadamard_layer(6).matrix()), 1e-12);
  EXPECT_LE(reconstruction_error(random_unitary(6, RngSeed{31}).matrix()), 1e-12);
  EXPECT_LE(reconstruction_error(random_sign_hadamard(7, RngSeed{32}).matrix()), 1e-12);
  EXPECT_LE(reconstruction_error(Matrix::Identity(8, 8)), 1e-15);
}

TEST(UnitaryEigen, RejectsNonNormal) {
  Matrix jordan = Matrix::Identity(2, 2);
  jordan(0, 1) = 1.0;
  EXPECT_THROW(unitary_eigen(jordan), ValidationError);
  EXPECT_THROW(unitary_eigen(Matrix::Ones(2, 2)), ValidationError);
}

}  // namespace
}  // namespace rsed
