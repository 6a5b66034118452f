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

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsed/bitcore.hpp"
#include "rsed/linalg.hpp"
#include "rsed/randomness.hpp"
#include "rsed/subsystem.hpp"

namespace rsed {

/// U = sum_a O_a u O_a^dagger with O_a|b> = (-1)^{f(join(b,a))} |p(join(b,a))>.
/// Immutable; permutation and sign function are shared between copies.
class RsedOperator {
 public:
  static constexpr int kMaxDenseQubits = 10;

  RsedOperator(std::shared_ptr<const SubsetPermutation> perm, std::shared_ptr<const SignFunction> sign,
               SubUnitary sub);

  const SystemShape &shape() const noexcept { return perm_->shape(); }
  const SubsetPermutation &perm() const noexcept { return *perm_; }
  const SignFunction &sign() const noexcept { return *sign_; }
  const SubUnitary &sub() const noexcept { return sub_; }
  const std::shared_ptr<const SubsetPermutation> &perm_ptr() const noexcept { return perm_; }
  const std::shared_ptr<const SignFunction> &sign_ptr() const noexcept { return sign_; }

  /// Same (p, f) with a different block matrix.
  RsedOperator with_sub(SubUnitary sub) const;
  RsedOperator adjoint() const;

 private:
  std::shared_ptr<const SubsetPermutation> perm_;
  std::shared_ptr<const SignFunction> sign_;
  SubUnitary sub_;
};

/// Convenience: sample p and f from one seed (streams 1 and 2 of `seed`).
RsedOperator make_random_rsed(const SystemShape &shape, RngSeed seed, SubUnitary sub,
                              PermutationBackend perm_backend = PermutationBackend::kAuto,
                              SignBackend sign_backend = SignBackend::kAuto);

class StateVector {
 public:
  explicit StateVector(const SystemShape &shape);
  StateVector(const SystemShape &shape, Vector amplitudes);

  static StateVector basis(const SystemShape &shape, BasisIndex x);

  const SystemShape &shape() const noexcept { return shape_; }
  const Vector &amplitudes() const noexcept { return amps_; }
  Vector &amplitudes() noexcept { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  SystemShape shape_;
  Vector amps_;
};

struct SparseEntry {
  BasisIndex index;
  Complex amplitude;
};
using SparseState = std::vector<SparseEntry>;

enum class PauliAxis { kX, kY, kZ };

struct PauliFactor {
  int site;
  PauliAxis axis;
  friend bool operator==(const PauliFactor &, const PauliFactor &) = default;
};

class PauliString {
 public:
  PauliString() = default;
  /// Sites must be distinct and non-negative.
  explicit PauliString(std::vector<PauliFactor> factors);

  /// Parses "X0 Z3", "X0Z3" or "I" (identity).
  static PauliString parse(std::string_view text);
  static PauliString single(PauliAxis axis, int site) { return PauliString({{site, axis}}); }

  const std::vector<PauliFactor> &factors() const noexcept { return factors_; }
  int max_site() const noexcept;
  std::string to_string() const;

  // Symplectic form: the operator is i^phase X^x Z^z.
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  int phase() const noexcept { return phase_; }

 private:
  std::vector<PauliFactor> factors_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// In-place blockwise application; `amps` has length 2^n.
void apply_inplace(const RsedOperator &op, std::span<Complex> amps);
StateVector apply(const RsedOperator &op, const StateVector &psi);
/// apply with u replaced by unitary_power(u, t).
StateVector apply_power(const RsedOperator &op, double t, const StateVector &psi);

SparseState evolve_basis_state(const RsedOperator &op, BasisIndex x);

/// Dense N x N matrix, n <= 10.
Matrix dense_matrix(const RsedOperator &op);

void apply_pauli_inplace(const PauliString &s, std::span<Complex> amps, int n);
StateVector apply_pauli(const PauliString &s, const StateVector &psi);
/// Dense 2^n x 2^n matrix of a Pauli string, n <= 12.
Matrix pauli_matrix(const PauliString &s, int n);

}  // namespace rsed
