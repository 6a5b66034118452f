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

#include "rsed/circuits.hpp"

#include <string>

#include "rsed/errors.hpp"

namespace rsed {

GateCircuit::GateCircuit(int n) : n_(n) {
  if (n < 1 || n > SystemShape::kMaxQubits) throw DomainError("GateCircuit: n=" + std::to_string(n) + " out of range");
}

void GateCircuit::add(CircuitOp op) {
  if (op.kind == OpKind::kGate) validate_gate(op.gate, n_);
  if (op.kind != OpKind::kGate && op.ref.empty()) throw DomainError("GateCircuit: empty reference name");
  if (op.kind == OpKind::kRound && op.round < 0) throw DomainError("GateCircuit: negative round index");
  ops_.push_back(std::move(op));
}

void GateCircuit::add_gate(const Gate &g) { add({OpKind::kGate, g, {}, PermDirection::kForward, 0}); }

void GateCircuit::add_perm(PermDirection direction, std::string name) {
  add({OpKind::kPerm, Gate{GateKind::kH}, std::move(name), direction, 0});
}

void GateCircuit::add_phase_f(std::string name) {
  add({OpKind::kPhaseF, Gate{GateKind::kH}, std::move(name), PermDirection::kForward, 0});
}

void GateCircuit::add_sub_unitary(std::string name) {
  add({OpKind::kSubU, Gate{GateKind::kH}, std::move(name), PermDirection::kForward, 0});
}

void GateCircuit::add_round(std::string perm_name, int round) {
  add({OpKind::kRound, Gate{GateKind::kH}, std::move(perm_name), PermDirection::kForward, round});
}

std::map<std::string, int> GateCircuit::gate_counts() const {
  std::map<std::string, int> counts;
  for (const auto &op : ops_) {
    switch (op.kind) {
      case OpKind::kGate: ++counts[std::string(gate_mnemonic(op.gate.kind))]; break;
      case OpKind::kPerm: ++counts["PERM"]; break;
      case OpKind::kPhaseF: ++counts["PHASE_F"]; break;
      case OpKind::kSubU: ++counts["SUBU"]; break;
      case OpKind::kRound: ++counts["ROUND"]; break;
    }
  }
  return counts;
}

void Registry::add_permutation(const std::string &name, std::shared_ptr<const SubsetPermutation> p) {
  if (!p) throw DomainError("Registry: null permutation '" + name + "'");
  perms_[name] = std::move(p);
}

void Registry::add_sign(const std::string &name, std::shared_ptr<const SignFunction> f) {
  if (!f) throw DomainError("Registry: null sign function '" + name + "'");
  signs_[name] = std::move(f);
}

void Registry::add_sub_unitary(const std::string &name, SubUnitary u) { subs_.insert_or_assign(name, std::move(u)); }

const SubsetPermutation &Registry::permutation(const std::string &name) const {
  const auto it = perms_.find(name);
  if (it == perms_.end()) throw DomainError("unresolved permutation reference '" + name + "'");
  return *it->second;
}

const SignFunction &Registry::sign(const std::string &name) const {
  const auto it = signs_.find(name);
  if (it == signs_.end()) throw DomainError("unresolved sign function reference '" + name + "'");
  return *it->second;
}

const SubUnitary &Registry::sub_unitary(const std::string &name) const {
  const auto it = subs_.find(name);
  if (it == subs_.end()) throw DomainError("unresolved sub-unitary reference '" + name + "'");
  return it->second;
}

void check_references(const GateCircuit &c, const Registry &registry) {
  for (const auto &op : c.ops()) {
    switch (op.kind) {
      case OpKind::kGate: break;
      case OpKind::kPerm:
      case OpKind::kRound: {
        const SubsetPermutation &p = registry.permutation(op.ref);
        if (p.shape().n() != c.n()) throw DomainError("permutation '" + op.ref + "' has the wrong register width");
        if (op.kind == OpKind::kRound) {
          if (!p.network()) throw DomainError("ROUND needs a Feistel-backed permutation: '" + op.ref + "'");
          if (op.round >= p.network()->rounds()) throw DomainError("ROUND index out of range for '" + op.ref + "'");
        }
        break;
      }
      case OpKind::kPhaseF:
        if (registry.sign(op.ref).shape().n() != c.n()) {
          throw DomainError("sign function '" + op.ref + "' has the wrong register width");
        }
        break;
      case OpKind::kSubU:
        if (registry.sub_unitary(op.ref).k() > c.n()) throw DomainError("sub-unitary '" + op.ref + "' is too wide");
        break;
    }
  }
}

void simulate_circuit_inplace(const GateCircuit &c, const Registry &registry, std::span<Complex> amps) {
  if (amps.size() != (std::size_t{1} << c.n())) throw DomainError("simulate_circuit: state length does not match 2^n");
  check_references(c, registry);
  std::vector<Complex> scratch(amps.size());
  for (const auto &op : c.ops()) {
    switch (op.kind) {
      case OpKind::kGate: apply_gate(op.gate, amps); break;
      case OpKind::kPerm: {
        const SubsetPermutation &p = registry.permutation(op.ref);
        const bool fwd = op.direction == PermDirection::kForward;
        for (BasisIndex x = 0; x < amps.size(); ++x) scratch[fwd ? p.forward(x) : p.backward(x)] = amps[x];
        std::copy(scratch.begin(), scratch.end(), amps.begin());
        break;
      }
      case OpKind::kRound: {
        const FeistelNetwork &net = *registry.permutation(op.ref).network();
        for (BasisIndex x = 0; x < amps.size(); ++x) scratch[net.round(x, op.round)] = amps[x];
        std::copy(scratch.begin(), scratch.end(), amps.begin());
        break;
      }
      case OpKind::kPhaseF: {
        const SignFunction &f = registry.sign(op.ref);
        for (BasisIndex x = 0; x < amps.size(); ++x) {
          if (f.bit(x)) amps[x] = -amps[x];
        }
        break;
      }
      case OpKind::kSubU: {
        const Matrix &u = registry.sub_unitary(op.ref).matrix();
        const auto dim = u.rows();
        Vector block(dim);
        for (std::size_t base = 0; base < amps.size(); base += static_cast<std::size_t>(dim)) {
          for (Eigen::Index b = 0; b < dim; ++b) block(b) = amps[base + static_cast<std::size_t>(b)];
          const Vector out = u * block;
          for (Eigen::Index b = 0; b < dim; ++b) amps[base + static_cast<std::size_t>(b)] = out(b);
        }
        break;
      }
    }
  }
}

StateVector simulate_circuit(const GateCircuit &c, const Registry &registry, const StateVector &psi) {
  if (psi.shape().n() != c.n()) throw DomainError("simulate_circuit: state width does not match circuit");
  StateVector out = psi;
  simulate_circuit_inplace(
      c, registry, std::span<Complex>(out.amplitudes().data(), static_cast<std::size_t>(out.amplitudes().size())));
  return out;
}

Matrix simulate_circuit_dense(const GateCircuit &c, const Registry &registry) {
  if (c.n() > RsedOperator::kMaxDenseQubits) throw CapacityError("simulate_circuit_dense: n exceeds 10");
  const auto dim = static_cast<Eigen::Index>(1) << c.n();
  Matrix m = Matrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    simulate_circuit_inplace(c, registry, std::span<Complex>(m.col(col).data(), static_cast<std::size_t>(dim)));
  }
  return m;
}

std::string USpec::name() const {
  switch (kind) {
    case Kind::kIdentity: return "identity";
    case Kind::kHadamard: return "hadamard";
    case Kind::kRandomSignHadamard: return "random_sign_hadamard";
    case Kind::kExplicit: return "explicit";
  }
  return "?";
}

SubUnitary USpec::materialize(int k) const {
  switch (kind) {
    case Kind::kIdentity: {
      const auto dim = static_cast<Eigen::Index>(1) << k;
      return SubUnitary::unchecked(Matrix::Identity(dim, dim));
    }
    case Kind::kHadamard: return hadamard_layer(k);
    case Kind::kRandomSignHadamard: return rsed::random_sign_hadamard(k, RngSeed{seed});
    case Kind::kExplicit:
      if (!matrix || matrix->k() != k) throw DomainError("USpec: explicit matrix missing or of the wrong size");
      return *matrix;
  }
  throw DomainError("USpec: unknown kind");
}

SynthesizedCircuit synthesize_rsed_circuit(const SystemShape &shape, const USpec &u, std::uint64_t perm_seed,
                                           std::uint64_t sign_seed, const SynthesisOptions &options) {
  const int k = shape.k();
  auto perm = std::make_shared<const SubsetPermutation>(
      sample_permutation(shape, RngSeed{perm_seed}, options.perm_backend, options.feistel_rounds));
  auto sign = std::make_shared<const SignFunction>(sample_sign_function(shape, RngSeed{sign_seed}, options.sign_backend));
  SubUnitary sub = u.materialize(k);

  Registry registry;
  registry.add_permutation("p", perm);
  registry.add_sign("f", sign);
  GateCircuit c(shape.n());
  c.add_perm(PermDirection::kInverse, "p");
  c.add_phase_f("f");
  switch (u.kind) {
    case USpec::Kind::kIdentity: break;
    case USpec::Kind::kRandomSignHadamard:
      registry.add_sign("phi", std::make_shared<const SignFunction>(
                                   SignFunction::from_table(shape, random_sign_bits(k, RngSeed{u.seed}))));
      c.add_phase_f("phi");
      [[fallthrough]];
    case USpec::Kind::kHadamard:
      for (int q = 0; q < k; ++q) c.add_gate({GateKind::kH, {q, 0, 0}});
      break;
    case USpec::Kind::kExplicit:
      registry.add_sub_unitary("u", sub);
      c.add_sub_unitary("u");
      break;
  }
  c.add_phase_f("f");
  c.add_perm(PermDirection::kForward, "p");
  return {std::move(c), std::move(registry), RsedOperator(std::move(perm), std::move(sign), std::move(sub))};
}

GateCircuit expand_feistel_rounds(const GateCircuit &c, const Registry &registry) {
  GateCircuit out(c.n());
  for (const auto &op : c.ops()) {
    if (op.kind == OpKind::kPerm) {
      const SubsetPermutation &p = registry.permutation(op.ref);
      if (p.network()) {
        const int rounds = p.network()->rounds();
        for (int i = 0; i < rounds; ++i) {
          out.add_round(op.ref, op.direction == PermDirection::kForward ? i : rounds - 1 - i);
        }
        continue;
      }
    }
    switch (op.kind) {
      case OpKind::kGate: out.add_gate(op.gate); break;
      case OpKind::kPerm: out.add_perm(op.direction, op.ref); break;
      case OpKind::kPhaseF: out.add_phase_f(op.ref); break;
      case OpKind::kSubU: out.add_sub_unitary(op.ref); break;
      case OpKind::kRound: out.add_round(op.ref, op.round); break;
    }
  }
  return out;
}

}  // namespace rsed
