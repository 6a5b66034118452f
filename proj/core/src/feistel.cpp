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

#include "rsed/feistel.hpp"

#include <string>

#include "rsed/errors.hpp"
#include "rsed/rng.hpp"

namespace rsed {

namespace {

constexpr std::uint64_t low_mask(int width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

FeistelNetwork::FeistelNetwork(int bits, std::uint64_t key, int rounds)
    : bits_(bits), high_bits_((bits + 1) / 2), low_bits_(bits / 2), key_(key) {
  if (bits < 1 || bits > 62) throw DomainError("FeistelNetwork: bits=" + std::to_string(bits) + " outside [1, 62]");
  if (rounds < 1) throw DomainError("FeistelNetwork: need at least one round");
  round_keys_.reserve(rounds);
  std::uint64_t state = key;
  for (int r = 0; r < rounds; ++r) {
    state = mix64(state ^ (0xa0761d6478bd642fULL * static_cast<std::uint64_t>(r + 1)));
    round_keys_.push_back(state);
  }
}

std::uint64_t FeistelNetwork::round_function(int r, std::uint64_t v) const noexcept {
  return mix64(round_keys_[r] ^ mix64(v ^ 0xe7037ed1a0b428dbULL));
}

std::uint64_t FeistelNetwork::round(std::uint64_t x, int r) const noexcept {
  const std::uint64_t low = x & low_mask(low_bits_);
  const std::uint64_t high = x >> low_bits_;
  if (r % 2 == 0) {
    const std::uint64_t new_high = high ^ (round_function(r, low) & low_mask(high_bits_));
    return (new_high << low_bits_) | low;
  }
  const std::uint64_t new_low = low ^ (round_function(r, high) & low_mask(low_bits_));
  return (high << low_bits_) | new_low;
}

}  // namespace rsed
