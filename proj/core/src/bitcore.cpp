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

#include "rsed/bitcore.hpp"

#include <string>

#include "rsed/errors.hpp"

namespace rsed {

SystemShape::SystemShape(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxQubits) {
    throw DomainError("SystemShape: n=" + std::to_string(n) + " outside [1, 30]");
  }
  if (k < 1 || k > n) {
    throw DomainError("SystemShape: k=" + std::to_string(k) + " outside [1, n=" + std::to_string(n) + "]");
  }
}

SubsystemSplit split(BasisIndex x, const SystemShape &shape) {
  if (x >= shape.full_dim()) {
    throw DomainError("split: basis index " + std::to_string(x) + " >= 2^" + std::to_string(shape.n()));
  }
  return {x & (shape.sub_dim() - 1), x >> shape.k()};
}

BasisIndex join(std::uint64_t b, std::uint64_t a, const SystemShape &shape) {
  if (b >= shape.sub_dim()) {
    throw DomainError("join: subsystem index " + std::to_string(b) + " >= 2^" + std::to_string(shape.k()));
  }
  if (a >= shape.seed_count()) {
    throw DomainError("join: seed " + std::to_string(a) + " >= 2^" + std::to_string(shape.seed_bits()));
  }
  return bits::join(b, a, shape.k());
}

namespace {

void check_site(BasisIndex x, int j, const SystemShape &shape, const char *op) {
  if (j < 0 || j >= shape.n()) {
    throw DomainError(std::string(op) + ": site " + std::to_string(j) + " outside [0, " + std::to_string(shape.n()) + ")");
  }
  if (x >= shape.full_dim()) {
    throw DomainError(std::string(op) + ": basis index " + std::to_string(x) + " out of range");
  }
}

}  // namespace

BasisIndex flip_bit(BasisIndex x, int j, const SystemShape &shape) {
  check_site(x, j, shape, "flip_bit");
  return bits::flip(x, j);
}

int get_bit(BasisIndex x, int j, const SystemShape &shape) {
  check_site(x, j, shape, "get_bit");
  return bits::get(x, j);
}

}  // namespace rsed
