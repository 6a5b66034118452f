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

#include <benchmark/benchmark.h>

#include <vector>

#include "rsed/linalg.hpp"
#include "rsed/otoc.hpp"
#include "rsed/rsed.hpp"
#include "rsed/subsystem.hpp"

namespace {

using namespace rsed;

RsedOperator signed_hadamard_op(int n, int k) {
  return make_random_rsed(SystemShape(n, k), RngSeed{1}, SignedHadamard::random(k, RngSeed{2}).dense_power(1));
}

void BM_Apply(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = signed_hadamard_op(n, 6);
  Vector psi = StateVector::basis(op.shape(), 0).amplitudes();
  for (auto _ : state) {
    apply_inplace(op, std::span<Complex>(psi.data(), static_cast<std::size_t>(psi.size())));
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * psi.size());
}
BENCHMARK(BM_Apply)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_OtocZzExact(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = signed_hadamard_op(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(otoc_zz_exact(op, 0, n - 1));
}
BENCHMARK(BM_OtocZzExact)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FAverageDense(benchmark::State &state) {
  const int k = static_cast<int>(state.range(0));
  const auto u = SignedHadamard::random(k, RngSeed{3}).dense_power(1);
  for (auto _ : state) benchmark::DoNotOptimize(otoc_zz_f_average(u));
}
BENCHMARK(BM_FAverageDense)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SignedHadamardPower(benchmark::State &state) {
  const int k = static_cast<int>(state.range(0));
  const auto sh = SignedHadamard::random(k, RngSeed{4});
  for (auto _ : state) benchmark::DoNotOptimize(otoc_zz_f_average(sh, 4));
}
BENCHMARK(BM_SignedHadamardPower)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_Fwht(benchmark::State &state) {
  std::vector<double> v(std::size_t{1} << state.range(0), 1.0);
  for (auto _ : state) {
    fwht(std::span<double>(v));
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(v.size()));
}
BENCHMARK(BM_Fwht)->Arg(10)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
