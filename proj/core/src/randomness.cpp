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

#include "rsed/randomness.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "rsed/errors.hpp"

namespace rsed {

namespace {

void check_index(BasisIndex x, const SystemShape &shape, const char *op) {
  if (x >= shape.full_dim()) {
    throw DomainError(std::string(op) + ": index " + std::to_string(x) + " >= 2^" + std::to_string(shape.n()));
  }
}

PermutationBackend resolve(PermutationBackend backend, const SystemShape &shape) {
  if (backend != PermutationBackend::kAuto) return backend;
  return shape.n() <= SubsetPermutation::kAutoTableQubits ? PermutationBackend::kExplicitTable
                                                          : PermutationBackend::kFeistel;
}

}  // namespace

SubsetPermutation SubsetPermutation::identity(const SystemShape &shape) {
  return SubsetPermutation(shape, PermutationBackend::kIdentity);
}

SubsetPermutation SubsetPermutation::from_table(const SystemShape &shape, std::vector<std::uint32_t> forward) {
  if (shape.n() > kMaxTableQubits) {
    throw CapacityError("explicit permutation table needs n <= 24, got n=" + std::to_string(shape.n()));
  }
  const std::uint64_t size = shape.full_dim();
  if (forward.size() != size) {
    throw ValidationError("permutation table has " + std::to_string(forward.size()) + " entries, expected " +
                          std::to_string(size));
  }
  std::vector<std::uint32_t> inverse(size, 0);
  std::vector<std::uint8_t> seen(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    const std::uint32_t y = forward[x];
    if (y >= size || seen[y]) throw ValidationError("permutation table is not a bijection at entry " + std::to_string(x));
    seen[y] = 1;
    inverse[y] = static_cast<std::uint32_t>(x);
  }
  SubsetPermutation p(shape, PermutationBackend::kExplicitTable);
  p.forward_ = std::move(forward);
  p.inverse_ = std::move(inverse);
  return p;
}

SubsetPermutation SubsetPermutation::feistel(const SystemShape &shape, std::uint64_t key, int rounds) {
  SubsetPermutation p(shape, PermutationBackend::kFeistel);
  p.network_.emplace(shape.n(), key, rounds);
  return p;
}

BasisIndex SubsetPermutation::permute(BasisIndex x) const {
  check_index(x, shape_, "permute");
  return forward(x);
}

BasisIndex SubsetPermutation::invert(BasisIndex y) const {
  check_index(y, shape_, "invert");
  return backward(y);
}

SubsetPermutation sample_permutation(const SystemShape &shape, RngSeed seed, PermutationBackend backend,
                                     int feistel_rounds) {
  switch (resolve(backend, shape)) {
    case PermutationBackend::kIdentity:
      return SubsetPermutation::identity(shape);
    case PermutationBackend::kExplicitTable: {
      if (shape.n() > SubsetPermutation::kMaxTableQubits) {
        throw CapacityError("ExplicitTable permutation needs n <= 24, got n=" + std::to_string(shape.n()));
      }
      std::vector<std::uint32_t> table(shape.full_dim());
      std::iota(table.begin(), table.end(), 0u);
      Rng rng(seed);
      for (std::uint64_t i = table.size() - 1; i > 0; --i) {
        std::swap(table[i], table[rng.below(i + 1)]);
      }
      return SubsetPermutation::from_table(shape, std::move(table));
    }
    case PermutationBackend::kFeistel:
    default:
      return SubsetPermutation::feistel(shape, Rng(seed).next_u64(), feistel_rounds);
  }
}

SignFunction SignFunction::zero(const SystemShape &shape) { return SignFunction(shape, SignBackend::kZero); }

SignFunction SignFunction::from_table(const SystemShape &shape, std::vector<std::uint8_t> bits) {
  const std::uint64_t size = bits.size();
  if (size == 0 || (size & (size - 1)) != 0 || size > shape.full_dim()) {
    throw ValidationError("sign table size must be a power of two not exceeding 2^n, got " + std::to_string(size));
  }
  for (auto &v : bits) {
    if (v > 1) throw ValidationError("sign table entries must be 0 or 1");
  }
  SignFunction f(shape, SignBackend::kExplicitTable);
  f.bits_ = std::move(bits);
  f.mask_ = size - 1;
  return f;
}

SignFunction SignFunction::keyed(const SystemShape &shape, std::uint64_t key) {
  SignFunction f(shape, SignBackend::kKeyedPrf);
  f.key_ = key;
  return f;
}

int SignFunction::sign(BasisIndex x) const {
  check_index(x, shape_, "sign");
  return bit(x);
}

SignFunction sample_sign_function(const SystemShape &shape, RngSeed seed, SignBackend backend) {
  if (backend == SignBackend::kAuto) {
    backend = shape.n() <= SubsetPermutation::kAutoTableQubits ? SignBackend::kExplicitTable : SignBackend::kKeyedPrf;
  }
  Rng rng(seed);
  switch (backend) {
    case SignBackend::kZero:
      return SignFunction::zero(shape);
    case SignBackend::kExplicitTable: {
      if (shape.n() > SubsetPermutation::kMaxTableQubits) {
        throw CapacityError("ExplicitTable sign function needs n <= 24, got n=" + std::to_string(shape.n()));
      }
      std::vector<std::uint8_t> bits(shape.full_dim());
      for (auto &v : bits) v = static_cast<std::uint8_t>(rng.bit());
      return SignFunction::from_table(shape, std::move(bits));
    }
    case SignBackend::kKeyedPrf:
    default:
      return SignFunction::keyed(shape, rng.next_u64());
  }
}

SubsystemSplit bitflip_partner(const SubsetPermutation &p, std::uint64_t b, std::uint64_t a, int j) {
  const SystemShape &shape = p.shape();
  const BasisIndex x = join(b, a, shape);
  const BasisIndex flipped = flip_bit(p.forward(x), j, shape);
  return split(p.backward(flipped), shape);
}

FixedPointCount count_seed_fixed_points(const SubsetPermutation &p, int j, std::uint64_t samples, RngSeed seed) {
  const SystemShape &shape = p.shape();
  if (j < 0 || j >= shape.n()) throw DomainError("count_seed_fixed_points: site " + std::to_string(j) + " out of range");
  const int k = shape.k();
  auto keeps_seed = [&](BasisIndex x) {
    const BasisIndex partner = p.backward(bits::flip(p.forward(x), j));
    return (partner >> k) == (x >> k);
  };

  FixedPointCount out;
  if (samples == 0) {
    if (shape.n() > 20) throw CapacityError("exact fixed-point count needs n <= 20, got n=" + std::to_string(shape.n()));
    std::uint64_t count = 0;
    for (BasisIndex x = 0; x < shape.full_dim(); ++x) count += keeps_seed(x) ? 1 : 0;
    out.estimate = static_cast<double>(count);
    out.samples = shape.full_dim();
    out.exact = true;
    return out;
  }

  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) hits += keeps_seed(rng.below(shape.full_dim())) ? 1 : 0;
  const double n_states = static_cast<double>(shape.full_dim());
  const double q = static_cast<double>(hits) / static_cast<double>(samples);
  out.estimate = n_states * q;
  out.std_error = samples > 1 ? n_states * std::sqrt(q * (1.0 - q) / static_cast<double>(samples - 1)) : 0.0;
  out.samples = samples;
  return out;
}

}  // namespace rsed
