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
#include <variant>
#include <vector>

#include "rsed/gates.hpp"
#include "rsed/linalg.hpp"
#include "rsed/randomness.hpp"
#include "rsed/rsed.hpp"

namespace rsed {

/// Density matrix on a 2^m-dimensional space stored on a sorted support:
/// entries outside support x support are zero.
class DensityMatrix {
 public:
  static constexpr std::uint64_t kMaxBlockDim = 4096;

  DensityMatrix(std::uint64_t dim, std::vector<BasisIndex> support, Matrix block);
  /// Full-support matrix.
  static DensityMatrix dense(Matrix m);
  static DensityMatrix pure(const StateVector &psi);
  static DensityMatrix pure(std::uint64_t dim, const SparseState &psi);

  std::uint64_t dim() const noexcept { return dim_; }
  const std::vector<BasisIndex> &support() const noexcept { return support_; }
  const Matrix &block() const noexcept { return block_; }
  Complex trace() const { return block_.trace(); }
  /// Expanded dim x dim matrix; dim <= kMaxBlockDim.
  Matrix to_dense() const;

  /// Throws ValidationError unless Hermitian (1e-10), unit trace (tol) and
  /// PSD (min eigenvalue >= -tol).
  void validate(double tol = 1e-9) const;

 private:
  std::uint64_t dim_;
  std::vector<BasisIndex> support_;
  Matrix block_;
};

StateVector subset_phase_state(const SubsetPermutation &p, const SignFunction &f, std::uint64_t a);

enum class EntropyUnit { kNats, kBits };

double coherence_rel_entropy(const StateVector &psi, EntropyUnit unit = EntropyUnit::kNats);
double coherence_rel_entropy(const DensityMatrix &rho, EntropyUnit unit = EntropyUnit::kNats);

/// Largest n * t accepted by the t-copy constructions.
inline constexpr int kMaxCopyQubits = 16;

/// Uniform mixture of symmetrized distinct-index t-tuples over the subset
/// {p(join(b, a))}; copy c of the register occupies bits [c n, (c + 1) n).
DensityMatrix hybrid3_state(const SubsetPermutation &p, std::uint64_t a, int t);

/// Average of |psi_s><psi_s|^{(x)t} over the given n-qubit sparse states.
DensityMatrix tcopy_mixture(std::span<const SparseState> states, int n, int t);

/// Pi_sym / tr Pi_sym for t copies of a d-dimensional space.
DensityMatrix sym_projector_state(std::uint64_t d, int t);
/// Same, with the d-dimensional space spanned by the n-qubit basis states `basis`.
DensityMatrix sym_projector_state(std::span<const BasisIndex> basis, int n, int t);

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

struct DesignVariance {
  double value = 0.0;
  /// Set when the sample mean of X is zero; value is then +infinity.
  bool degenerate = false;
  std::uint64_t tuples = 0;
};
DesignVariance design_variance_condition(const Matrix &u, int t, std::uint64_t b_star);

struct ElementCheck {
  double exceed_fraction = 0.0;
  bool passed = false;
  ElementMagnitudeStats stats;
};
ElementCheck element_condition_check(const Matrix &u, double epsilon);

struct RandomCliffordLayer {
  std::uint64_t seed = 0;
  /// Number of gates; 0 selects 3n.
  int length = 0;
};
struct TLayer {
  std::vector<int> sites;
};
struct HadamardLayer {
  std::vector<int> sites;
};
using Layer = std::variant<RandomCliffordLayer, TLayer, HadamardLayer>;

std::vector<Gate> layer_gates(const Layer &layer, int n);
StateVector append_layer(const StateVector &psi, const Layer &layer);

/// Von Neumann entropy (nats) of the reduced state on `sites_a`.
double entanglement_entropy(const StateVector &psi, std::span<const int> sites_a);

}  // namespace rsed
