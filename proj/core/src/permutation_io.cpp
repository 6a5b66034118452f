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

#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "rsed/errors.hpp"
#include "rsed/randomness.hpp"

namespace rsed {

namespace {

constexpr std::array<char, 9> kMagic = {'R', 'S', 'E', 'D', 'P', 'E', 'R', 'M', '1'};

void put_u32(std::ostream &out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream &in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char *>(bytes), 4)) throw ValidationError("permutation sidecar truncated");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace

void write_permutation(std::ostream &out, const SubsetPermutation &p) {
  if (p.backend() != PermutationBackend::kExplicitTable) {
    throw ValidationError("only ExplicitTable permutations have a sidecar representation");
  }
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, static_cast<std::uint32_t>(p.shape().n()));
  put_u32(out, static_cast<std::uint32_t>(p.shape().k()));
  for (std::uint32_t v : p.table()) put_u32(out, v);
  if (!out) throw ValidationError("failed writing permutation sidecar");
}

SubsetPermutation read_permutation(std::istream &in) {
  std::array<char, 9> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw ValidationError("not an RSEDPERM1 sidecar (bad magic)");
  }
  const auto n = static_cast<int>(get_u32(in));
  const auto k = static_cast<int>(get_u32(in));
  if (n > SubsetPermutation::kMaxTableQubits) throw CapacityError("sidecar declares n=" + std::to_string(n));
  const SystemShape shape(n, k);
  std::vector<std::uint32_t> table(shape.full_dim());
  for (auto &v : table) v = get_u32(in);
  return SubsetPermutation::from_table(shape, std::move(table));
}

}  // namespace rsed
