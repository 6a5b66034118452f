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
#include "rsed/gates.hpp"
#include "rsed/prs.hpp"

namespace rsed {
namespace {

constexpr double kLn2 = std::numbers::ln2;

TEST(DensityMatrix, ValidatesStructure) {
  EXPECT_THROW(DensityMatrix(4, {2, 1}, Matrix::Identity(2, 2) / 2.0), DomainError);
  EXPECT_THROW(DensityMatrix(4, {1, 7}, Matrix::Identity(2, 2) / 2.0), DomainError);
  EXPECT_THROW(DensityMatrix(4, {1}, Matrix::Identity(2, 2)), DomainError);
  EXPECT_THROW(DensityMatrix::dense(Matrix::Identity(2, 2)).validate(), ValidationError);
  const DensityMatrix rho(8, {1, 5}, Matrix::Identity(2, 2) / 2.0);
  EXPECT_NO_THROW(rho.validate());
  const Matrix d = rho.to_dense();
  EXPECT_EQ(d(5, 5), Complex(0.5));
  EXPECT_EQ(d(0, 0), Complex(0.0));
}

TEST(SubsetPhaseState, PlusStateAndSupport) {
  const SystemShape full(4, 4);
  const auto plus = subset_phase_state(SubsetPermutation::identity(full), SignFunction::zero(full), 0);
  for (Eigen::Index x = 0; x < 16; ++x) EXPECT_NEAR(plus.amplitudes()(x).real(), 0.25, 1e-15);

  const SystemShape s(9, 4);
  const auto psi = subset_phase_state(sample_permutation(s, RngSeed{1}), sample_sign_function(s, RngSeed{2}), 7);
  int support = 0;
  for (Eigen::Index x = 0; x < psi.amplitudes().size(); ++x) support += std::abs(psi.amplitudes()(x)) > 0.0;
  EXPECT_EQ(support, 16);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-14);
  EXPECT_THROW(subset_phase_state(sample_permutation(s, RngSeed{1}), SignFunction::zero(s), 32), DomainError);
}

TEST(Coherence, Examples) {
  const SystemShape s(5, 2);
  EXPECT_EQ(coherence_rel_entropy(StateVector::basis(s, 0)), 0.0);
  const auto plus = subset_phase_state(SubsetPermutation::identity(SystemShape(5, 5)), SignFunction::zero(SystemShape(5, 5)), 0);
  EXPECT_NEAR(coherence_rel_entropy(plus), 5 * kLn2, 1e-12);
  EXPECT_NEAR(coherence_rel_entropy(plus, EntropyUnit::kBits), 5.0, 1e-12);
  const auto psi = subset_phase_state(sample_permutation(s, RngSeed{3}), sample_sign_function(s, RngSeed{4}), 5);
  EXPECT_NEAR(coherence_rel_entropy(psi), 2 * kLn2, 1e-12);
  // Mixed-state path agrees with the pure-state path.
  EXPECT_NEAR(coherence_rel_entropy(DensityMatrix::pure(psi)), 2 * kLn2, 1e-9);
}

TEST(Coherence, FrozenOracle) {
  Vector v(4);
  v << 1.0, Complex(0.0, 2.0), -1.0, 0.5;
  const StateVector psi(SystemShape(2, 1), v / v.norm());
  EXPECT_NEAR(coherence_rel_entropy(psi), oracle::kCoherenceFixed, 1e-14);
  EXPECT_NEAR(coherence_rel_entropy(DensityMatrix::pure(psi)), oracle::kCoherenceFixed, 1e-9);
  EXPECT_THROW(coherence_rel_entropy(StateVector(SystemShape(2, 1), v)), ValidationError);
}

TEST(Coherence, MaximallyMixedHasNone) {
  EXPECT_NEAR(coherence_rel_entropy(DensityMatrix::dense(Matrix::Identity(8, 8) / 8.0)), 0.0, 1e-12);
}

TEST(Hybrid3, SmallCases) {
  const SystemShape one(1, 1);
  const auto rho = hybrid3_state(SubsetPermutation::identity(one), 0, 1);
  EXPECT_LE(max_abs(rho.to_dense() - Matrix::Identity(2, 2) / 2.0), 1e-15);

  const SystemShape s(4, 2);
  const auto sigma = hybrid3_state(sample_permutation(s, RngSeed{5}), 1, 2);
  EXPECT_NO_THROW(sigma.validate());
  EXPECT_NEAR(sigma.trace().real(), 1.0, 1e-12);
  // binom(4,2) = 6 distinct-pair types, each contributing a rank-one projector.
  const auto eig = hermitian_eigen(sigma.block());
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) rank += eig.values(i) > 1e-12;
  EXPECT_EQ(rank, 6);
  EXPECT_THROW(hybrid3_state(sample_permutation(s, RngSeed{5}), 1, 5), DomainError);
  EXPECT_THROW(hybrid3_state(sample_permutation(SystemShape(9, 3), RngSeed{5}), 1, 2), CapacityError);
}

TEST(Hybrid3, EnsembleConvergence) {
  const SystemShape s(6, 4);
  const auto p = std::make_shared<const SubsetPermutation>(sample_permutation(s, RngSeed{6}));
  const BasisIndex x = p->permute(join(0, 1, s));
  std::vector<SparseState> states;
  for (std::uint64_t r = 0; r < 200; ++r) {
    const RsedOperator op(p, std::make_shared<const SignFunction>(sample_sign_function(s, RngSeed{7, r})),
                          hadamard_layer(4));
    states.push_back(evolve_basis_state(op, x));
  }
  const auto mix = tcopy_mixture(states, 6, 2);
  EXPECT_NO_THROW(mix.validate());
  EXPECT_LE(trace_distance(mix, hybrid3_state(*p, 1, 2)), 8.0 * 4.0 / 16.0);
}

TEST(SymProjector, Examples) {
  EXPECT_LE(max_abs(sym_projector_state(5, 1).to_dense() - Matrix::Identity(5, 5) / 5.0), 1e-15);
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  const Matrix triplet = (Matrix::Identity(4, 4) + swap) / 2.0 / 3.0;
  EXPECT_LE(max_abs(sym_projector_state(2, 2).to_dense() - triplet), 1e-15);
  for (auto [d, t] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {4, 2}, {3, 4}}) {
    const auto rho = sym_projector_state(d, t);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    // rho = Pi / D so rho^2 = rho / D with D = binom(d + t - 1, t).
    const double dim = std::tgamma(static_cast<double>(d + t)) / std::tgamma(static_cast<double>(t) + 1.0) /
                       std::tgamma(static_cast<double>(d));
    EXPECT_LE(max_abs(rho.block() * rho.block() * dim - rho.block()), 1e-12) << d << "," << t;
  }
  EXPECT_THROW(sym_projector_state(2, 13), CapacityError);
}

TEST(SymProjector, OnSubsetBasis) {
  const std::vector<BasisIndex> basis{3, 9, 12};
  const auto rho = sym_projector_state(basis, 4, 2);
  EXPECT_EQ(rho.dim(), 256u);
  EXPECT_EQ(rho.support().size(), 9u);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_THROW(sym_projector_state(std::vector<BasisIndex>{3, 3}, 4, 2), DomainError);
}

TEST(TraceDistance, Properties) {
  const auto zero = DensityMatrix::pure(StateVector::basis(SystemShape(1, 1), 0));
  const auto one = DensityMatrix::pure(StateVector::basis(SystemShape(1, 1), 1));
  EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-15);

  Matrix r1(3, 3), r2(3, 3);
  r1 << 0.5, Complex(0.1, 0.2), 0.0, Complex(0.1, -0.2), 0.3, 0.05, 0.0, 0.05, 0.2;
  r2 << 0.2, 0.0, Complex(0.0, 0.1), 0.0, 0.5, 0.0, Complex(0.0, -0.1), 0.0, 0.3;
  EXPECT_NEAR(trace_distance(DensityMatrix::dense(r1), DensityMatrix::dense(r2)), oracle::kTraceDistanceFixed, 1e-14);

  const SystemShape s(3, 2);
  for (std::uint64_t r = 0; r < 100; ++r) {
    const auto a = DensityMatrix::pure(fixtures::random_state(s, RngSeed{8, 3 * r}));
    const auto b = DensityMatrix::pure(fixtures::random_state(s, RngSeed{8, 3 * r + 1}));
    const auto c = DensityMatrix::pure(fixtures::random_state(s, RngSeed{8, 3 * r + 2}));
    const double ab = trace_distance(a, b);
    EXPECT_NEAR(ab, trace_distance(b, a), 1e-14);
    EXPECT_LE(ab, trace_distance(a, c) + trace_distance(c, b) + 1e-12);
    EXPECT_LE(ab, 1.0 + 1e-12);
  }
  EXPECT_THROW(trace_distance(zero, DensityMatrix::dense(Matrix::Identity(4, 4) / 4.0)), DomainError);
}

TEST(TraceDistance, DisjointSupports) {
  const DensityMatrix a(64, {1, 2}, Matrix::Identity(2, 2) / 2.0);
  const DensityMatrix b(64, {40}, Matrix::Identity(1, 1));
  EXPECT_NEAR(trace_distance(a, b), 1.0, 1e-15);
}

TEST(DesignVariance, Examples) {
  const auto flat = design_variance_condition(hadamard_layer(4).matrix(), 2, 3);
  EXPECT_NEAR(flat.value, 0.0, 1e-24);
  EXPECT_FALSE(flat.degenerate);
  EXPECT_EQ(flat.tuples, 120u);
  const auto peak = design_variance_condition(Matrix::Identity(8, 8), 2, 0);
  EXPECT_TRUE(peak.degenerate);
  EXPECT_NEAR(design_variance_condition(fixtures::fixed_unitary(3).matrix(), 2, 1).value, oracle::kDesignVarianceFixed,
              1e-10);
  EXPECT_THROW(design_variance_condition(Matrix::Identity(128, 128), 2, 0), CapacityError);
  EXPECT_THROW(design_variance_condition(Matrix::Identity(8, 8), 2, 8), DomainError);
}

TEST(DesignVariance, SignedHadamardPowerIsNotFlat) {
  // Entries of (H P)^4 at K = 64 are close to Gaussian, so the variance is O(1).
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto u = SignedHadamard::random(6, RngSeed{9, s}).dense_power(4);
    const auto v = design_variance_condition(u.matrix(), 2, 0);
    EXPECT_FALSE(v.degenerate);
    EXPECT_GT(v.value, 1.0 / 8.0);
  }
}

TEST(ElementCheck, Examples) {
  EXPECT_TRUE(element_condition_check(hadamard_layer(6).matrix(), 0.9).passed);
  const auto id = element_condition_check(Matrix::Identity(16, 16), 0.1);
  EXPECT_FALSE(id.passed);
  EXPECT_NEAR(id.exceed_fraction, 1.0 / 16.0, 1e-15);
}

TEST(ElementCheck, SignedHadamardFourthPower) {
  int strict = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto u = SignedHadamard::random(8, RngSeed{10, s}).dense_power(4).matrix();
    const auto half = element_condition_check(u, 0.5);
    EXPECT_LT(half.exceed_fraction, 1e-3);
    strict += half.passed;
    EXPECT_TRUE(element_condition_check(u, 0.25).passed);
  }
  EXPECT_LT(strict, 99);
}

TEST(Layers, EmptyPatternIsIdentity) {
  const SystemShape s(4, 2);
  const auto psi = fixtures::random_state(s, RngSeed{11});
  EXPECT_EQ(append_layer(psi, TLayer{}).amplitudes(), psi.amplitudes());
  EXPECT_EQ(append_layer(psi, HadamardLayer{}).amplitudes(), psi.amplitudes());
  EXPECT_THROW(append_layer(psi, HadamardLayer{{4}}), DomainError);
}

TEST(Layers, CliffordIsSeededAndNormPreserving) {
  const SystemShape s(5, 2);
  const auto psi = fixtures::random_state(s, RngSeed{12});
  const RandomCliffordLayer layer{99, 40};
  const auto gates = layer_gates(layer, 5);
  EXPECT_EQ(gates.size(), 40u);
  EXPECT_EQ(gates, layer_gates(layer, 5));
  for (const auto &g : gates) EXPECT_TRUE(g.kind == GateKind::kH || g.kind == GateKind::kS || g.kind == GateKind::kCX);
  EXPECT_EQ(layer_gates(RandomCliffordLayer{1, 0}, 5).size(), 15u);
  EXPECT_NEAR(append_layer(psi, layer).norm(), 1.0, 1e-12);
}

TEST(Layers, HadamardEnhancesCoherence) {
  const SystemShape s(10, 5);
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[static_cast<std::size_t>(i)] = i;
  int enhanced = 0;
  for (std::uint64_t r = 0; r < 100; ++r) {
    const auto psi = subset_phase_state(sample_permutation(s, RngSeed{13, r}), sample_sign_function(s, RngSeed{14, r}),
                                        r % 32);
    enhanced += coherence_rel_entropy(append_layer(psi, HadamardLayer{all})) >= 2.5 * kLn2;
  }
  EXPECT_GE(enhanced, 95);
}

TEST(Entanglement, FrozenOracleAndProducts) {
  Vector v = Vector::Zero(8);
  v(0) = 1.0;
  v(3) = 2.0;
  v(5) = Complex(0.0, -1.0);
  v(6) = 1.0;
  const StateVector psi(SystemShape(3, 1), v / v.norm());
  const std::vector<int> a{0};
  EXPECT_NEAR(entanglement_entropy(psi, a), oracle::kEntanglementFixed, 1e-12);
  EXPECT_NEAR(entanglement_entropy(StateVector::basis(SystemShape(3, 1), 5), a), 0.0, 1e-15);
  EXPECT_THROW(entanglement_entropy(psi, std::vector<int>{0, 0}), DomainError);
}

}  // namespace
}  // namespace rsed
