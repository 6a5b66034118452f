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
#include <vector>

namespace rsed {

/// Keyed Luby-Rackoff network over n-bit integers.
///
/// The index is split into a high half of ceil(n/2) bits and a low half of
/// floor(n/2) bits. Even rounds xor a keyed function of the low half into the
/// high half, odd rounds xor a keyed function of the high half into the low
/// half; with equal halves this is the classic swap-free formulation, with
/// unequal halves (odd n) it is the alternating unbalanced network. Each round
/// is an involution, so decryption replays the rounds in reverse order.
///
/// The round function is a keyed 64-bit mixer, not a cryptographic PRF.
class FeistelNetwork {
 public:
  static constexpr int kDefaultRounds = 4;

  FeistelNetwork(int bits, std::uint64_t key, int rounds = kDefaultRounds);

  int bits() const noexcept { return bits_; }
  int rounds() const noexcept { return static_cast<int>(round_keys_.size()); }
  std::uint64_t key() const noexcept { return key_; }

  std::uint64_t encrypt(std::uint64_t x) const noexcept {
    for (int r = 0; r < rounds(); ++r) x = round(x, r);
    return x;
  }

  std::uint64_t decrypt(std::uint64_t y) const noexcept {
    for (int r = rounds() - 1; r >= 0; --r) y = round(y, r);
    return y;
  }

  /// One round; self-inverse.
  std::uint64_t round(std::uint64_t x, int r) const noexcept;

  /// Width in bits of the half that round r modifies.
  int target_width(int r) const noexcept { return (r % 2 == 0) ? high_bits_ : low_bits_; }

 private:
  std::uint64_t round_function(int r, std::uint64_t v) const noexcept;

  int bits_;
  int high_bits_;
  int low_bits_;
  std::uint64_t key_;
  std::vector<std::uint64_t> round_keys_;
};

}  // namespace rsed
