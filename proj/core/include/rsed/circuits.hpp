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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsed/gates.hpp"
#include "rsed/randomness.hpp"
#include "rsed/rsed.hpp"
#include "rsed/subsystem.hpp"

namespace rsed {

enum class OpKind {
  kGate,
  /// Basis permutation |x> -> |p(x)> (forward) or |p^{-1}(x)> (inverse).
  kPerm,
  /// Diagonal (-1)^{f(x)}.
  kPhaseF,
  /// Registered sub-unitary on the low k qubits.
  kSubU,
  /// One Feistel round of a registered permutation.
  kRound,
};

enum class PermDirection { kForward, kInverse };

struct CircuitOp {
  OpKind kind = OpKind::kGate;
  Gate gate{GateKind::kH};
  std::string ref;
  PermDirection direction = PermDirection::kForward;
  int round = 0;

  friend bool operator==(const CircuitOp &, const CircuitOp &) = default;
};

class GateCircuit {
 public:
  explicit GateCircuit(int n);

  int n() const noexcept { return n_; }
  const std::vector<CircuitOp> &ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

  void add_gate(const Gate &g);
  void add_perm(PermDirection direction, std::string name);
  void add_phase_f(std::string name);
  void add_sub_unitary(std::string name);
  void add_round(std::string perm_name, int round);

  /// Count per mnemonic ("H", "CX", "PERM", "PHASE_F", ...).
  std::map<std::string, int> gate_counts() const;

  friend bool operator==(const GateCircuit &, const GateCircuit &) = default;

 private:
  void add(CircuitOp op);

  int n_;
  std::vector<CircuitOp> ops_;
};

/// Named randomness objects and sub-unitaries referenced by PERM, ROUND,
/// PHASE_F and SUBU ops.
class Registry {
 public:
  void add_permutation(const std::string &name, std::shared_ptr<const SubsetPermutation> p);
  void add_sign(const std::string &name, std::shared_ptr<const SignFunction> f);
  void add_sub_unitary(const std::string &name, SubUnitary u);

  const SubsetPermutation &permutation(const std::string &name) const;
  const SignFunction &sign(const std::string &name) const;
  const SubUnitary &sub_unitary(const std::string &name) const;

 private:
  std::map<std::string, std::shared_ptr<const SubsetPermutation>> perms_;
  std::map<std::string, std::shared_ptr<const SignFunction>> signs_;
  std::map<std::string, SubUnitary> subs_;
};

/// Throws DomainError on any reference that does not resolve or whose shape
/// does not fit the circuit.
void check_references(const GateCircuit &c, const Registry &registry);

StateVector simulate_circuit(const GateCircuit &c, const Registry &registry, const StateVector &psi);
void simulate_circuit_inplace(const GateCircuit &c, const Registry &registry, std::span<Complex> amps);
/// Dense unitary, n <= 10.
Matrix simulate_circuit_dense(const GateCircuit &c, const Registry &registry);

struct USpec {
  enum class Kind { kIdentity, kHadamard, kRandomSignHadamard, kExplicit };
  Kind kind = Kind::kHadamard;
  std::uint64_t seed = 0;                 ///< sign pattern seed for kRandomSignHadamard
  std::optional<SubUnitary> matrix;       ///< kExplicit only

  static USpec identity() { return {Kind::kIdentity, 0, std::nullopt}; }
  static USpec hadamard() { return {Kind::kHadamard, 0, std::nullopt}; }
  static USpec random_sign_hadamard(std::uint64_t seed) { return {Kind::kRandomSignHadamard, seed, std::nullopt}; }
  static USpec explicit_matrix(SubUnitary u) { return {Kind::kExplicit, 0, std::move(u)}; }

  std::string name() const;
  SubUnitary materialize(int k) const;
};

struct SynthesisOptions {
  PermutationBackend perm_backend = PermutationBackend::kAuto;
  SignBackend sign_backend = SignBackend::kAuto;
  int feistel_rounds = FeistelNetwork::kDefaultRounds;
};

struct SynthesizedCircuit {
  GateCircuit circuit;
  Registry registry;
  /// The operator the circuit realizes.
  RsedOperator op;
};

/// PERM inv, PHASE_F, [u on the low k qubits], PHASE_F, PERM fwd.
SynthesizedCircuit synthesize_rsed_circuit(const SystemShape &shape, const USpec &u, std::uint64_t perm_seed,
                                           std::uint64_t sign_seed, const SynthesisOptions &options = {});

/// Replaces every PERM backed by a Feistel network with its ROUND sequence.
GateCircuit expand_feistel_rounds(const GateCircuit &c, const Registry &registry);

/// "RSEDCIRC 1 n=<n>" followed by one op per line.
std::string serialize(const GateCircuit &c);
/// Accepts '#' comments and blank lines; throws ParseError with the line number.
GateCircuit parse_circuit(std::string_view text);

struct CircuitManifest {
  int n = 0;
  int k = 0;
  std::string u_spec = "hadamard";
  std::uint64_t u_seed = 0;
  std::uint64_t perm_seed = 0;
  std::uint64_t sign_seed = 0;
  std::string perm_backend = "auto";
  std::string sign_backend = "auto";
  int feistel_rounds = FeistelNetwork::kDefaultRounds;
  std::map<std::string, int> gate_counts;
};

CircuitManifest make_manifest(const SystemShape &shape, const USpec &u, std::uint64_t perm_seed,
                              std::uint64_t sign_seed, const SynthesisOptions &options, const GateCircuit &c);
std::string manifest_to_json(const CircuitManifest &m);
CircuitManifest manifest_from_json(std::string_view text);
/// Regenerates the circuit recorded by a manifest (explicit u specs are not
/// reproducible from a manifest and are rejected).
SynthesizedCircuit regenerate(const CircuitManifest &m);

}  // namespace rsed
