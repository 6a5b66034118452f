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
#include <utility>

namespace rsed {

/// The (n, k) split of the register: n total qubits, of which the low k bits
/// of every basis index form the embedded subsystem b and the high n - k bits
/// form the seed a.
class SystemShape {
 public:
  static constexpr int kMaxQubits = 30;

  SystemShape(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int seed_bits() const noexcept { return n_ - k_; }

  std::uint64_t full_dim() const noexcept { return std::uint64_t{1} << n_; }
  std::uint64_t sub_dim() const noexcept { return std::uint64_t{1} << k_; }
  std::uint64_t seed_count() const noexcept { return std::uint64_t{1} << (n_ - k_); }

  friend bool operator==(const SystemShape &, const SystemShape &) = default;

 private:
  int n_;
  int k_;
};

using BasisIndex = std::uint64_t;

struct SubsystemSplit {
  std::uint64_t b;  ///< subsystem index, low k bits
  std::uint64_t a;  ///< seed, high n - k bits
  friend bool operator==(const SubsystemSplit &, const SubsystemSplit &) = default;
};

SubsystemSplit split(BasisIndex x, const SystemShape &shape);
BasisIndex join(std::uint64_t b, std::uint64_t a, const SystemShape &shape);

// Site j carries bit weight 2^j.
BasisIndex flip_bit(BasisIndex x, int j, const SystemShape &shape);
int get_bit(BasisIndex x, int j, const SystemShape &shape);

namespace bits {

// Unchecked variants for inner loops; callers guarantee ranges.
inline constexpr std::uint64_t join(std::uint64_t b, std::uint64_t a, int k) noexcept { return (a << k) | b; }
inline constexpr int get(std::uint64_t x, int j) noexcept { return static_cast<int>((x >> j) & 1u); }
inline constexpr std::uint64_t flip(std::uint64_t x, int j) noexcept { return x ^ (std::uint64_t{1} << j); }
inline constexpr int parity(std::uint64_t x) noexcept { return __builtin_parityll(x); }
inline constexpr int popcount(std::uint64_t x) noexcept { return __builtin_popcountll(x); }

}  // namespace bits

}  // namespace rsed
