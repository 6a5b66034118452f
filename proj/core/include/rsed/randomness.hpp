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
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "rsed/bitcore.hpp"
#include "rsed/feistel.hpp"
#include "rsed/rng.hpp"

namespace rsed {

enum class PermutationBackend {
  kIdentity,
  kExplicitTable,
  kFeistel,
  /// ExplicitTable for n <= 16, Feistel above.
  kAuto,
};

/// The seeded bijection p on [0, 2^n) that scatters every seed block
/// {join(b, a) : b} to a random subset of basis states.
class SubsetPermutation {
 public:
  static constexpr int kMaxTableQubits = 24;
  static constexpr int kAutoTableQubits = 16;

  static SubsetPermutation identity(const SystemShape &shape);
  /// Validates that `forward` is a bijection on [0, 2^n).
  static SubsetPermutation from_table(const SystemShape &shape, std::vector<std::uint32_t> forward);
  static SubsetPermutation feistel(const SystemShape &shape, std::uint64_t key,
                                   int rounds = FeistelNetwork::kDefaultRounds);

  const SystemShape &shape() const noexcept { return shape_; }
  PermutationBackend backend() const noexcept { return backend_; }
  /// Forward table (ExplicitTable backend only; empty otherwise).
  std::span<const std::uint32_t> table() const noexcept { return forward_; }
  const std::optional<FeistelNetwork> &network() const noexcept { return network_; }

  BasisIndex permute(BasisIndex x) const;
  BasisIndex invert(BasisIndex y) const;

  // Unchecked fast paths.
  BasisIndex forward(BasisIndex x) const noexcept {
    switch (backend_) {
      case PermutationBackend::kExplicitTable: return forward_[x];
      case PermutationBackend::kFeistel: return network_->encrypt(x);
      default: return x;
    }
  }
  BasisIndex backward(BasisIndex y) const noexcept {
    switch (backend_) {
      case PermutationBackend::kExplicitTable: return inverse_[y];
      case PermutationBackend::kFeistel: return network_->decrypt(y);
      default: return y;
    }
  }

 private:
  SubsetPermutation(SystemShape shape, PermutationBackend backend) : shape_(shape), backend_(backend) {}

  SystemShape shape_;
  PermutationBackend backend_;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
  std::optional<FeistelNetwork> network_;
};

/// Draws p. ExplicitTable is a Fisher-Yates shuffle of the identity table:
/// for i = N-1 down to 1, swap entries i and Rng::below(i + 1).
SubsetPermutation sample_permutation(const SystemShape &shape, RngSeed seed,
                                     PermutationBackend backend = PermutationBackend::kAuto,
                                     int feistel_rounds = FeistelNetwork::kDefaultRounds);

enum class SignBackend {
  kZero,
  kExplicitTable,
  kKeyedPrf,
  kAuto,
};

/// The sign bit f(x) of the subset-phase isometries.
class SignFunction {
 public:
  static SignFunction zero(const SystemShape &shape);
  /// bits.size() must be a power of two 2^m with m <= n; f(x) = bits[x mod 2^m].
  /// With m < n this lifts a function of the low m bits to the full register.
  static SignFunction from_table(const SystemShape &shape, std::vector<std::uint8_t> bits);
  static SignFunction keyed(const SystemShape &shape, std::uint64_t key);

  const SystemShape &shape() const noexcept { return shape_; }
  SignBackend backend() const noexcept { return backend_; }
  std::span<const std::uint8_t> table() const noexcept { return bits_; }
  std::uint64_t key() const noexcept { return key_; }

  int sign(BasisIndex x) const;

  int bit(BasisIndex x) const noexcept {
    switch (backend_) {
      case SignBackend::kExplicitTable: return bits_[x & mask_];
      case SignBackend::kKeyedPrf: return static_cast<int>(mix64(key_ ^ mix64(x + 0x2545f4914f6cdd1dULL)) >> 63);
      default: return 0;
    }
  }
  /// (-1)^f(x) as a double.
  double factor(BasisIndex x) const noexcept { return bit(x) ? -1.0 : 1.0; }

 private:
  SignFunction(SystemShape shape, SignBackend backend) : shape_(shape), backend_(backend) {}

  SystemShape shape_;
  SignBackend backend_;
  std::vector<std::uint8_t> bits_;
  std::uint64_t mask_ = 0;
  std::uint64_t key_ = 0;
};

SignFunction sample_sign_function(const SystemShape &shape, RngSeed seed, SignBackend backend = SignBackend::kAuto);

/// (x_j, y_j): the split of p^{-1}(p(join(b, a)) xor 2^j), i.e. the block
/// coordinates of the state that a bit flip at site j maps (b, a) onto.
SubsystemSplit bitflip_partner(const SubsetPermutation &p, std::uint64_t b, std::uint64_t a, int j);

struct FixedPointCount {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  bool exact = false;
};

/// sum over (b, a) of [a == y_j(b, a)]: how many states keep their seed under a
/// conjugated bit flip. samples == 0 requests exact enumeration (n <= 20);
/// otherwise uniform Monte-Carlo over (b, a).
FixedPointCount count_seed_fixed_points(const SubsetPermutation &p, int j, std::uint64_t samples = 0,
                                        RngSeed seed = {});

/// Binary sidecar: "RSEDPERM1", u32 n, u32 k, then 2^n u32 forward entries, all
/// little-endian. Only ExplicitTable permutations can be written.
void write_permutation(std::ostream &out, const SubsetPermutation &p);
SubsetPermutation read_permutation(std::istream &in);

}  // namespace rsed
