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

#include "rsed/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rsed/errors.hpp"

namespace rsed {

int gate_arity(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kCX: return 2;
    case GateKind::kCCX: return 3;
    default: return 1;
  }
}

std::string_view gate_mnemonic(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kS: return "S";
    case GateKind::kT: return "T";
    case GateKind::kCX: return "CX";
    case GateKind::kCCX: return "CCX";
  }
  return "?";
}

std::optional<GateKind> gate_from_mnemonic(std::string_view name) noexcept {
  for (GateKind k : {GateKind::kH, GateKind::kX, GateKind::kS, GateKind::kT, GateKind::kCX, GateKind::kCCX}) {
    if (gate_mnemonic(k) == name) return k;
  }
  return std::nullopt;
}

void validate_gate(const Gate &g, int n) {
  const int arity = gate_arity(g.kind);
  for (int i = 0; i < arity; ++i) {
    if (g.q[i] < 0 || g.q[i] >= n) {
      throw DomainError(std::string(gate_mnemonic(g.kind)) + ": qubit " + std::to_string(g.q[i]) + " outside [0, " +
                        std::to_string(n) + ")");
    }
    for (int j = 0; j < i; ++j) {
      if (g.q[i] == g.q[j]) throw DomainError(std::string(gate_mnemonic(g.kind)) + ": repeated qubit");
    }
  }
}

void apply_gate(const Gate &g, std::span<Complex> amps) {
  const std::size_t dim = amps.size();
  const int target = g.q[gate_arity(g.kind) - 1];
  const std::size_t tbit = std::size_t{1} << target;
  switch (g.kind) {
    case GateKind::kH: {
      const double r = std::numbers::sqrt2 / 2.0;
      for (std::size_t v = 0; v < dim; ++v) {
        if (v & tbit) continue;
        const Complex a0 = amps[v];
        const Complex a1 = amps[v | tbit];
        amps[v] = r * (a0 + a1);
        amps[v | tbit] = r * (a0 - a1);
      }
      break;
    }
    case GateKind::kX:
      for (std::size_t v = 0; v < dim; ++v) {
        if (!(v & tbit)) std::swap(amps[v], amps[v | tbit]);
      }
      break;
    case GateKind::kS:
    case GateKind::kT: {
      const Complex phase = g.kind == GateKind::kS ? Complex(0.0, 1.0) : std::polar(1.0, std::numbers::pi / 4.0);
      for (std::size_t v = 0; v < dim; ++v) {
        if (v & tbit) amps[v] *= phase;
      }
      break;
    }
    case GateKind::kCX:
    case GateKind::kCCX: {
      std::size_t cmask = std::size_t{1} << g.q[0];
      if (g.kind == GateKind::kCCX) cmask |= std::size_t{1} << g.q[1];
      for (std::size_t v = 0; v < dim; ++v) {
        if ((v & cmask) == cmask && !(v & tbit)) std::swap(amps[v], amps[v | tbit]);
      }
      break;
    }
  }
}

Matrix gate_sequence_matrix(std::span<const Gate> gates, int n) {
  if (n < 1 || n > 10) throw CapacityError("gate_sequence_matrix: n outside [1, 10]");
  for (const Gate &g : gates) validate_gate(g, n);
  const auto dim = static_cast<Eigen::Index>(1) << n;
  Matrix m = Matrix::Identity(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    std::span<Complex> col(m.col(c).data(), static_cast<std::size_t>(dim));
    for (const Gate &g : gates) apply_gate(g, col);
  }
  return m;
}

}  // namespace rsed
