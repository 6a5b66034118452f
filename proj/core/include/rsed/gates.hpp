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

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "rsed/linalg.hpp"

namespace rsed {

enum class GateKind { kH, kX, kS, kT, kCX, kCCX };

/// Elementary gate; for CX the control is q[0], for CCX the controls are
/// q[0] and q[1]. The target is always the last used slot.
struct Gate {
  GateKind kind;
  std::array<int, 3> q{0, 0, 0};
  friend bool operator==(const Gate &, const Gate &) = default;
};

int gate_arity(GateKind kind) noexcept;
std::string_view gate_mnemonic(GateKind kind) noexcept;
std::optional<GateKind> gate_from_mnemonic(std::string_view name) noexcept;

/// Checks qubit range and distinctness; throws DomainError.
void validate_gate(const Gate &g, int n);

/// In-place action on a 2^n amplitude array.
void apply_gate(const Gate &g, std::span<Complex> amps);

/// Dense matrix of a gate sequence applied left to right; n <= 10.
Matrix gate_sequence_matrix(std::span<const Gate> gates, int n);

}  // namespace rsed
