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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "rsed/errors.hpp"
#include "rsed/feistel.hpp"
#include "rsed/randomness.hpp"

namespace rsed {
namespace {

void expect_bijection(const SubsetPermutation &p) {
  const std::uint64_t dim = p.shape().full_dim();
  std::vector<bool> seen(dim, false);
  for (BasisIndex x = 0; x < dim; ++x) {
    const BasisIndex y = p.permute(x);
    ASSERT_LT(y, dim);
    ASSERT_FALSE(seen[y]) << "collision at " << x;
    seen[y] = true;
    ASSERT_EQ(p.invert(y), x);
  }
}

TEST(Feistel, BijectiveForEveryWidth) {
  for (int bits = 1; bits <= 12; ++bits) {
    for (int rounds : {1, 3, 4, 7}) {
      const FeistelNetwork net(bits, 0x1234u + static_cast<std::uint64_t>(bits), rounds);
      std::vector<bool> seen(std::size_t{1} << bits, false);
      for (std::uint64_t x = 0; x < seen.size(); ++x) {
        const auto y = net.encrypt(x);
        ASSERT_LT(y, seen.size());
        ASSERT_FALSE(seen[y]);
        seen[y] = true;
        ASSERT_EQ(net.decrypt(y), x);
      }
    }
  }
}

TEST(Feistel, RoundIsSelfInverse) {
  const FeistelNetwork net(9, 77);
  for (std::uint64_t x = 0; x < 512; ++x) {
    for (int r = 0; r < net.rounds(); ++r) EXPECT_EQ(net.round(net.round(x, r), r), x);
  }
  EXPECT_EQ(net.target_width(0) + net.target_width(1), 9);
}

TEST(SamplePermutation, DeterministicTables) {
  const SystemShape s(8, 3);
  const auto a = sample_permutation(s, RngSeed{9}, PermutationBackend::kExplicitTable);
  const auto b = sample_permutation(s, RngSeed{9}, PermutationBackend::kExplicitTable);
  ASSERT_EQ(a.table().size(), 256u);
  EXPECT_TRUE(std::equal(a.table().begin(), a.table().end(), b.table().begin()));
  expect_bijection(a);
}

TEST(SamplePermutation, FeistelBackend) {
  const SystemShape s(8, 4);
  const auto p = sample_permutation(s, RngSeed{3}, PermutationBackend::kFeistel, 4);
  EXPECT_EQ(p.backend(), PermutationBackend::kFeistel);
  expect_bijection(p);
  int moved = 0;
  for (BasisIndex x = 0; x < 256; ++x) moved += p.permute(x) != x;
  EXPECT_GT(moved, 0);
}

TEST(SamplePermutation, AutoBackendAndCapacity) {
  EXPECT_EQ(sample_permutation(SystemShape(16, 4), RngSeed{1}).backend(), PermutationBackend::kExplicitTable);
  EXPECT_EQ(sample_permutation(SystemShape(17, 4), RngSeed{1}).backend(), PermutationBackend::kFeistel);
  EXPECT_THROW(sample_permutation(SystemShape(25, 4), RngSeed{1}, PermutationBackend::kExplicitTable), CapacityError);
  expect_bijection(sample_permutation(SystemShape(10, 5), RngSeed{4}));
}

TEST(SubsetPermutation, IdentityAndRange) {
  const auto p = SubsetPermutation::identity(SystemShape(2, 1));
  for (BasisIndex x = 0; x < 4; ++x) EXPECT_EQ(p.permute(x), x);
  EXPECT_THROW(p.permute(4), DomainError);
  EXPECT_THROW(p.invert(4), DomainError);
}

TEST(SubsetPermutation, FromTableValidates) {
  const SystemShape s(2, 1);
  EXPECT_THROW(SubsetPermutation::from_table(s, {0, 1, 1, 3}), ValidationError);
  EXPECT_THROW(SubsetPermutation::from_table(s, {0, 1, 2}), ValidationError);
  const auto p = SubsetPermutation::from_table(s, {2, 0, 3, 1});
  EXPECT_EQ(p.invert(3), 2u);
}

TEST(SignFunction, ZeroAndDeterministic) {
  const SystemShape s(6, 2);
  const auto z = SignFunction::zero(s);
  for (BasisIndex x = 0; x < 64; ++x) EXPECT_EQ(z.sign(x), 0);
  const auto f = sample_sign_function(s, RngSeed{8}, SignBackend::kKeyedPrf);
  const int first = f.sign(17);
  for (int r = 0; r < 10000; ++r) ASSERT_EQ(f.sign(17), first);
  EXPECT_THROW(f.sign(64), DomainError);
}

TEST(SignFunction, KeyedBackendIsBalanced) {
  const SystemShape s(12, 4);
  for (std::uint64_t key : {1u, 99u, 12345u}) {
    const auto f = sample_sign_function(s, RngSeed{key}, SignBackend::kKeyedPrf);
    double ones = 0;
    for (BasisIndex x = 0; x < s.full_dim(); ++x) ones += f.sign(x);
    const double mean = ones / static_cast<double>(s.full_dim());
    EXPECT_GE(mean, 0.45);
    EXPECT_LE(mean, 0.55);
  }
}

TEST(SignFunction, TableLiftsLowBits) {
  const SystemShape s(4, 2);
  const auto f = SignFunction::from_table(s, {0, 1});
  for (BasisIndex x = 0; x < 16; ++x) EXPECT_EQ(f.sign(x), static_cast<int>(x & 1));
  EXPECT_THROW(SignFunction::from_table(s, {0, 1, 0}), ValidationError);
  EXPECT_THROW(SignFunction::from_table(s, {0, 2}), ValidationError);
}

TEST(BitflipPartner, IdentityPermutation) {
  const SystemShape s(6, 3);
  const auto p = SubsetPermutation::identity(s);
  EXPECT_EQ(bitflip_partner(p, 5, 2, 1), (SubsystemSplit{5 ^ 2, 2}));
  EXPECT_EQ(bitflip_partner(p, 5, 2, 4), (SubsystemSplit{5, 2 ^ 2}));
}

TEST(BitflipPartner, DefiningIdentity) {
  const SystemShape s(10, 4);
  const auto p = sample_permutation(s, RngSeed{21});
  Rng rng(RngSeed{22});
  for (int r = 0; r < 1000; ++r) {
    const auto b = rng.below(s.sub_dim()), a = rng.below(s.seed_count());
    const int j = static_cast<int>(rng.below(10));
    const auto [xb, ya] = bitflip_partner(p, b, a, j);
    EXPECT_EQ(p.permute(join(xb, ya, s)), p.permute(join(b, a, s)) ^ (BasisIndex{1} << j));
  }
  EXPECT_THROW(bitflip_partner(p, 0, 0, 10), DomainError);
}

TEST(FixedPoints, IdentityPermutation) {
  const SystemShape s(8, 3);
  const auto p = SubsetPermutation::identity(s);
  const auto inside = count_seed_fixed_points(p, 1);
  EXPECT_TRUE(inside.exact);
  EXPECT_EQ(inside.estimate, 256.0);
  EXPECT_EQ(count_seed_fixed_points(p, 5).estimate, 0.0);
}

TEST(FixedPoints, RandomPermutationConcentratesNearK) {
  const SystemShape s(14, 6);
  const double bound = std::pow(2.0, 1.5 * 6);
  int within = 0;
  double sum = 0, sum2 = 0;
  const int trials = 200;
  for (int r = 0; r < trials; ++r) {
    const auto p = sample_permutation(s, RngSeed{500, static_cast<std::uint64_t>(r)});
    const double c = count_seed_fixed_points(p, 3).estimate;
    within += c <= bound;
    sum += c;
    sum2 += c * c;
  }
  EXPECT_GE(within, 99 * trials / 100);
  const double mean = sum / trials;
  const double se = std::sqrt((sum2 / trials - mean * mean) / (trials - 1));
  EXPECT_LE(std::abs(mean - 64.0), 3.0 * se) << "mean " << mean << " se " << se;
  // Exact expectation: each partner is uniform over the other N - 1 states.
  const double expected = 16384.0 * 63.0 / 16383.0;
  EXPECT_LE(std::abs(mean - expected), 3.0 * se);
}

TEST(FixedPoints, MonteCarloIsConsistent) {
  const SystemShape s(12, 5);
  const auto p = sample_permutation(s, RngSeed{31});
  const auto exact = count_seed_fixed_points(p, 7);
  const auto mc = count_seed_fixed_points(p, 7, 20000, RngSeed{32});
  EXPECT_FALSE(mc.exact);
  EXPECT_GT(mc.std_error, 0.0);
  EXPECT_LE(std::abs(mc.estimate - exact.estimate), 4.0 * mc.std_error);
}

TEST(PermutationIo, RoundTrip) {
  const SystemShape s(9, 4);
  const auto p = sample_permutation(s, RngSeed{40}, PermutationBackend::kExplicitTable);
  std::stringstream buf;
  write_permutation(buf, p);
  EXPECT_EQ(buf.str().substr(0, 9), "RSEDPERM1");
  const auto q = read_permutation(buf);
  EXPECT_EQ(q.shape(), s);
  EXPECT_TRUE(std::equal(p.table().begin(), p.table().end(), q.table().begin()));

  std::stringstream bad("RSEDPERM0xxxxxxxx");
  EXPECT_THROW(read_permutation(bad), ValidationError);
  std::stringstream feistel;
  EXPECT_THROW(write_permutation(feistel, SubsetPermutation::feistel(s, 1)), ValidationError);
}

}  // namespace
}  // namespace rsed
