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
#include <cstdint>

namespace rsed {

/// 64-bit seed plus a stream (domain separator). Two objects drawn from the
/// same seed but different streams are independent.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// A child seed for a named sub-purpose, e.g. realization r of an ensemble.
  RngSeed derive(std::uint64_t child) const noexcept;

  friend bool operator==(const RngSeed &, const RngSeed &) = default;
};

/// splitmix64 finalizer; a strong stateless 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** with all draws defined here (no <random> distributions), so a
/// given RngSeed yields the same sequence on every platform.
class Rng {
 public:
  explicit Rng(RngSeed seed) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform integer in [0, bound); bound > 0. Unbiased by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;
  int bit() noexcept { return static_cast<int>(next_u64() >> 63); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Standard normal via Box-Muller (both variates used).
  double normal() noexcept;

 private:
  std::array<std::uint64_t, 4> s_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rsed
