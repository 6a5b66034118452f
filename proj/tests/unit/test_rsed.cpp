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

#include "fixtures.hpp"
#include "rsed/errors.hpp"
#include "rsed/rsed.hpp"

namespace rsed {
namespace {

double distance(const StateVector &a, const StateVector &b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

TEST(Apply, IdentitySubLeavesStateUnchanged) {
  const SystemShape s(8, 3);
  const auto op = make_random_rsed(s, RngSeed{1}, SubUnitary(Matrix::Identity(8, 8)));
  const auto psi = fixtures::random_state(s, RngSeed{2});
  EXPECT_LE(distance(apply(op, psi), psi), 1e-15);
}

TEST(Apply, SingleBlockHadamard) {
  const SystemShape s(2, 1);
  const RsedOperator op(std::make_shared<const SubsetPermutation>(SubsetPermutation::identity(s)),
                        std::make_shared<const SignFunction>(SignFunction::zero(s)), hadamard_layer(1));
  const auto out = apply(op, StateVector::basis(s, 0));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(out.amplitudes()(0).real(), r, 1e-15);
  EXPECT_NEAR(out.amplitudes()(1).real(), r, 1e-15);
  EXPECT_EQ(out.amplitudes()(2), Complex(0.0));
  EXPECT_EQ(out.amplitudes()(3), Complex(0.0));
}

TEST(Apply, AdjointUndoes) {
  const SystemShape s(10, 5);
  for (auto backend : {PermutationBackend::kExplicitTable, PermutationBackend::kFeistel}) {
    const auto op = make_random_rsed(s, RngSeed{3}, random_unitary(5, RngSeed{4}), backend, SignBackend::kKeyedPrf);
    const auto psi = fixtures::random_state(s, RngSeed{5});
    const auto out = apply(op, psi);
    EXPECT_NEAR(out.norm(), 1.0, 1e-10);
    EXPECT_LE(distance(apply(op.adjoint(), out), psi), 1e-10);
  }
  EXPECT_THROW(apply(make_random_rsed(SystemShape(9, 5), RngSeed{1}, hadamard_layer(5)), fixtures::random_state(s, RngSeed{1})),
               DomainError);
}

TEST(Apply, MatchesDenseMatrix) {
  for (std::uint64_t r = 0; r < 20; ++r) {
    const int n = 3 + static_cast<int>(r % 8);
    const int k = 1 + static_cast<int>(r % static_cast<std::uint64_t>(n));
    const SystemShape s(n, k);
    const auto op = make_random_rsed(s, RngSeed{10, r}, random_unitary(k, RngSeed{11, r}));
    const auto psi = fixtures::random_state(s, RngSeed{12, r});
    const Vector dense = dense_matrix(op) * psi.amplitudes();
    EXPECT_LE((apply(op, psi).amplitudes() - dense).cwiseAbs().maxCoeff(), 1e-10) << n << "," << k;
  }
}

TEST(ApplyPower, Semigroup) {
  const SystemShape s(8, 4);
  const auto op = make_random_rsed(s, RngSeed{6}, random_sign_hadamard(4, RngSeed{7}));
  const auto psi = fixtures::random_state(s, RngSeed{8});
  EXPECT_LE(distance(apply_power(op, 0.0, psi), psi), 1e-12);
  EXPECT_LE(distance(apply_power(op, 1.0, psi), apply(op, psi)), 1e-12);
  EXPECT_LE(distance(apply_power(op, 2.0, psi), apply(op, apply(op, psi))), 1e-9);
  EXPECT_LE(distance(apply_power(op, 1.5, apply_power(op, 0.5, psi)), apply(op, apply(op, psi))), 1e-9);
}

TEST(EvolveBasisState, IdentityAndFlatRows) {
  const SystemShape s(8, 4);
  const auto id = make_random_rsed(s, RngSeed{1}, SubUnitary(Matrix::Identity(16, 16)));
  const auto one = evolve_basis_state(id, 77);
  ASSERT_EQ(one.size(), 16u);
  double mass = 0.0;
  for (const auto &e : one) {
    if (e.index == 77) EXPECT_NEAR(std::abs(e.amplitude - 1.0), 0.0, 1e-15);
    else EXPECT_EQ(std::abs(e.amplitude), 0.0);
    mass += std::norm(e.amplitude);
  }
  EXPECT_NEAR(mass, 1.0, 1e-15);

  const auto h = make_random_rsed(s, RngSeed{2}, hadamard_layer(4));
  for (const auto &e : evolve_basis_state(h, 200)) EXPECT_NEAR(std::abs(e.amplitude), 0.25, 1e-15);
  EXPECT_THROW(evolve_basis_state(h, 256), DomainError);
}

TEST(EvolveBasisState, MatchesDenseColumns) {
  const SystemShape s(8, 4);
  const auto op = make_random_rsed(s, RngSeed{3}, random_sign_hadamard(4, RngSeed{4}));
  const Matrix u = dense_matrix(op);
  Rng rng(RngSeed{5});
  for (int r = 0; r < 50; ++r) {
    const BasisIndex x = rng.below(256);
    Vector col = Vector::Zero(256);
    for (const auto &e : evolve_basis_state(op, x)) col(static_cast<Eigen::Index>(e.index)) += e.amplitude;
    EXPECT_LE((col - u.col(static_cast<Eigen::Index>(x))).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(DenseMatrix, UnitaryAndIdentity) {
  const SystemShape s(8, 4);
  const auto id = make_random_rsed(s, RngSeed{1}, SubUnitary(Matrix::Identity(16, 16)));
  EXPECT_LE(max_abs(dense_matrix(id) - Matrix::Identity(256, 256)), 1e-15);
  const auto op = make_random_rsed(s, RngSeed{2}, random_unitary(4, RngSeed{3}));
  EXPECT_LE(unitarity_error(dense_matrix(op)), 1e-9);
  EXPECT_THROW(dense_matrix(make_random_rsed(SystemShape(11, 3), RngSeed{1}, hadamard_layer(3))), CapacityError);
}

TEST(DenseMatrix, FixedTablesFactorize) {
  // P F (I (x) u) F P^dagger with the fixture tables written out by hand.
  const auto u = fixtures::fixed_unitary(2);
  const auto op = fixtures::fixed_op(u);
  const auto bits = fixtures::fixed_sign_bits(4);
  Matrix p = Matrix::Zero(16, 16), f = Matrix::Zero(16, 16);
  for (int x = 0; x < 16; ++x) {
    p(fixtures::kPermN4[static_cast<std::size_t>(x)], x) = 1.0;
    f(x, x) = bits[static_cast<std::size_t>(x)] ? -1.0 : 1.0;
  }
  const Matrix block = kron(Matrix::Identity(4, 4), u.matrix());
  EXPECT_LE(max_abs(dense_matrix(op) - p * f * block * f * p.adjoint()), 1e-14);
}

TEST(PauliString, ParseAndPrint) {
  EXPECT_EQ(PauliString::parse("X0 Z3").to_string(), "X0 Z3");
  EXPECT_EQ(PauliString::parse("Z3X0").to_string(), "X0 Z3");
  EXPECT_EQ(PauliString::parse("I").factors().size(), 0u);
  EXPECT_EQ(PauliString::parse("Y2").max_site(), 2);
  EXPECT_THROW(PauliString::parse("X0 X0"), DomainError);
  EXPECT_THROW(PauliString::parse("Q1"), DomainError);
  EXPECT_THROW(PauliString::parse("X"), DomainError);
}

TEST(ApplyPauli, BasisActions) {
  const SystemShape s(1, 1);
  const auto z = PauliString::single(PauliAxis::kZ, 0);
  const auto x = PauliString::single(PauliAxis::kX, 0);
  const auto y = PauliString::single(PauliAxis::kY, 0);
  EXPECT_EQ(apply_pauli(z, StateVector::basis(s, 0)).amplitudes()(0), Complex(1.0));
  EXPECT_EQ(apply_pauli(z, StateVector::basis(s, 1)).amplitudes()(1), Complex(-1.0));
  EXPECT_EQ(apply_pauli(x, StateVector::basis(s, 0)).amplitudes()(1), Complex(1.0));
  // Y|0> = i|1>, Y|1> = -i|0>.
  EXPECT_EQ(apply_pauli(y, StateVector::basis(s, 0)).amplitudes()(1), Complex(0.0, 1.0));
  EXPECT_EQ(apply_pauli(y, StateVector::basis(s, 1)).amplitudes()(0), Complex(0.0, -1.0));
  EXPECT_THROW(apply_pauli(PauliString::single(PauliAxis::kZ, 1), StateVector::basis(s, 0)), DomainError);
}

TEST(ApplyPauli, InvolutionAndMatrix) {
  const SystemShape s(6, 3);
  const auto psi = fixtures::random_state(s, RngSeed{9});
  for (const char *text : {"X0 Z1", "Y2 Y5", "X1 Y3 Z4"}) {
    const auto p = PauliString::parse(text);
    EXPECT_LE(distance(apply_pauli(p, apply_pauli(p, psi)), psi), 1e-15) << text;
    const Matrix m = pauli_matrix(p, 6);
    EXPECT_LE(max_abs(m * m - Matrix::Identity(64, 64)), 0.0);
    EXPECT_LE(hermiticity_error(m), 0.0);
    EXPECT_LE((m * psi.amplitudes() - apply_pauli(p, psi).amplitudes()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

}  // namespace
}  // namespace rsed
