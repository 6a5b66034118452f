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
#include <string>

#include "rsed/linalg.hpp"
#include "rsed/rsed.hpp"
#include "rsed/subsystem.hpp"

namespace rsed {

struct OtocEstimate {
  Complex value{0.0, 0.0};
  double std_error = 0.0;
  double t = 0.0;
  int n = 0;
  int k = 0;
  std::string sites;
  std::string estimator;
  std::uint64_t seed_count = 0;
};

/// Largest n - k for exhaustive seed enumeration.
inline constexpr int kMaxExactSeedBits = 20;

/// Per-seed ZZ trace tr(D_i u D_j u^dagger D_i u D_j u^dagger) / K for seed a.
double zz_seed_trace(const RsedOperator &op, int i, int j, std::uint64_t a);

OtocEstimate otoc_zz_exact(const RsedOperator &op, int i, int j);
/// Uniform sample of `num_seeds` distinct seeds. Requests covering every seed
/// fall back to the exhaustive path and reproduce otoc_zz_exact bitwise.
OtocEstimate otoc_zz_sampled(const RsedOperator &op, int i, int j, std::uint64_t num_seeds, RngSeed seed);

/// Random-(p, f) average 2^{-k} sum |u_{bb'}|^4.
double otoc_zz_f_average(const Matrix &u);
double otoc_zz_f_average(const SubUnitary &u);
/// Same quantity for u = (H^{(x)k} P)^power, streamed column by column.
double otoc_zz_f_average(const SignedHadamard &u, int power);

/// 8/2^{n+k} - 6/2^{n+2k} + 1/2^{n+3k}.
double otoc_zz_f_variance_hadamard(int n, int k);

enum class OtocMode { kExact, kStochastic };

struct OtocOptions {
  OtocMode mode = OtocMode::kExact;
  int probes = 256;
  RngSeed seed{};
};

/// 2^{-n} tr(V U W U^dagger V U W U^dagger).
OtocEstimate otoc_pauli(const RsedOperator &op, const PauliString &v, const PauliString &w,
                        const OtocOptions &options = {});
/// Dense form for arbitrary N x N matrices.
Complex otoc_dense(const Matrix &u, const Matrix &v, const Matrix &w);

/// 1 - Re O.
double poisson_bracket(const OtocEstimate &o);

enum class ThermalMode { kExact, kLeading };

/// Four-point value tr(rho_beta V(t) W V(t) W) (exact) or the leading-order
/// approximation; poisson_bracket of the result gives C_VW at inverse
/// temperature beta. `op.sub()` is taken to be evolve(h_sub, t).
OtocEstimate otoc_finite_temperature(const RsedOperator &op, const SubHamiltonian &h_sub, double beta,
                                     const PauliString &v, const PauliString &w, ThermalMode mode);

/// Coefficient c with E_f[C_ZZ(t)] = c t^2 + O(t^4).
double early_time_slope(const SubHamiltonian &h);

}  // namespace rsed
