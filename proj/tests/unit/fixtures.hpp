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

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "rsed/rsed.hpp"
#include "rsed/subsystem.hpp"

namespace fixtures {

inline rsed::Matrix fixed_hamiltonian(int k) {
  const auto dim = static_cast<Eigen::Index>(1) << k;
  rsed::Matrix a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double rr = static_cast<double>(r), cc = static_cast<double>(c);
      a(r, c) = rsed::Complex(std::cos(0.7 * rr + 1.3 * cc), std::sin(0.4 * rr - 0.9 * cc));
    }
  }
  return (a + a.adjoint()) / 2.0;
}

inline rsed::SubUnitary fixed_unitary(int k, double t = 1.0) {
  return rsed::evolve(rsed::SubHamiltonian(fixed_hamiltonian(k)), t);
}

inline const std::vector<std::uint32_t> kPermN4{3, 14, 7, 0, 9, 12, 5, 10, 1, 15, 6, 11, 2, 8, 13, 4};

inline std::vector<std::uint8_t> fixed_sign_bits(int n) {
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < bits.size(); ++x) bits[x] = static_cast<std::uint8_t>(((x * x + 3 * x) >> 2) & 1);
  return bits;
}

/// n = 4, k = 2 operator with explicit tables.
inline rsed::RsedOperator fixed_op(rsed::SubUnitary u) {
  const rsed::SystemShape shape(4, 2);
  return rsed::RsedOperator(
      std::make_shared<const rsed::SubsetPermutation>(rsed::SubsetPermutation::from_table(shape, kPermN4)),
      std::make_shared<const rsed::SignFunction>(rsed::SignFunction::from_table(shape, fixed_sign_bits(4))),
      std::move(u));
}

inline rsed::StateVector random_state(const rsed::SystemShape &shape, rsed::RngSeed seed) {
  rsed::Rng rng(seed);
  rsed::Vector v(static_cast<Eigen::Index>(shape.full_dim()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rsed::Complex(rng.normal(), rng.normal());
  return rsed::StateVector(shape, v / v.norm());
}

}  // namespace fixtures
