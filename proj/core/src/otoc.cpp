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

#include "rsed/otoc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_set>
#include <vector>

#include "rsed/errors.hpp"
#include "rsed/parallel.hpp"

namespace rsed {

namespace {

void check_zz_sites(const SystemShape &shape, int i, int j) {
  if (i < 0 || j < 0 || i >= shape.n() || j >= shape.n()) throw DomainError("ZZ OTOC: site out of range");
  if (i == j) throw DomainError("ZZ OTOC: sites must differ");
}

std::string zz_label(int i, int j) { return "Z" + std::to_string(i) + ",Z" + std::to_string(j); }

double seed_average(const RsedOperator &op, int i, int j, std::span<const std::uint64_t> seeds) {
  std::vector<double> values(seeds.size());
  parallel_for(0, seeds.size(), [&](std::uint64_t s) { values[s] = zz_seed_trace(op, i, j, seeds[s]); });
  return pairwise_sum(values) / static_cast<double>(values.size());
}

}  // namespace

double zz_seed_trace(const RsedOperator &op, int i, int j, std::uint64_t a) {
  const SystemShape &shape = op.shape();
  const auto dim = static_cast<Eigen::Index>(shape.sub_dim());
  const int k = shape.k();
  RealVector di(dim), dj(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const BasisIndex y = op.perm().forward(bits::join(static_cast<std::uint64_t>(b), a, k));
    di(b) = bits::get(y, i) ? -1.0 : 1.0;
    dj(b) = bits::get(y, j) ? -1.0 : 1.0;
  }
  const Matrix &u = op.sub().matrix();
  // W = u D_j u^dagger is Hermitian, so tr(D_i W D_i W) = sum_xy di_x di_y |W_xy|^2.
  const Matrix w = (u * dj.cast<Complex>().asDiagonal()) * u.adjoint();
  const RealMatrix w2 = w.cwiseAbs2();
  const double trace = di.dot(w2 * di);
  return trace / static_cast<double>(dim);
}

OtocEstimate otoc_zz_exact(const RsedOperator &op, int i, int j) {
  const SystemShape &shape = op.shape();
  check_zz_sites(shape, i, j);
  if (shape.seed_bits() > kMaxExactSeedBits) {
    throw CapacityError("otoc_zz_exact: 2^" + std::to_string(shape.seed_bits()) + " seeds exceed the exact cap");
  }
  std::vector<std::uint64_t> seeds(shape.seed_count());
  for (std::uint64_t a = 0; a < seeds.size(); ++a) seeds[a] = a;
  OtocEstimate out;
  out.value = seed_average(op, i, j, seeds);
  out.n = shape.n();
  out.k = shape.k();
  out.sites = zz_label(i, j);
  out.estimator = "zz_exact";
  out.seed_count = seeds.size();
  return out;
}

OtocEstimate otoc_zz_sampled(const RsedOperator &op, int i, int j, std::uint64_t num_seeds, RngSeed seed) {
  const SystemShape &shape = op.shape();
  check_zz_sites(shape, i, j);
  if (num_seeds < 2) throw DomainError("otoc_zz_sampled: need at least 2 seeds");
  const std::uint64_t population = shape.seed_count();
  if (num_seeds >= population) {
    OtocEstimate out = otoc_zz_exact(op, i, j);
    out.estimator = "zz_sampled_exhaustive";
    return out;
  }

  // Floyd's algorithm: num_seeds distinct seeds without replacement.
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(num_seeds * 2);
  for (std::uint64_t r = population - num_seeds; r < population; ++r) {
    const std::uint64_t v = rng.below(r + 1);
    if (!chosen.insert(v).second) chosen.insert(r);
  }
  std::vector<std::uint64_t> seeds(chosen.begin(), chosen.end());
  std::sort(seeds.begin(), seeds.end());

  std::vector<double> values(seeds.size());
  parallel_for(0, seeds.size(), [&](std::uint64_t s) { values[s] = zz_seed_trace(op, i, j, seeds[s]); });
  const double m = static_cast<double>(values.size());
  const double mean = pairwise_sum(values) / m;
  std::vector<double> dev(values.size());
  for (std::size_t s = 0; s < values.size(); ++s) dev[s] = (values[s] - mean) * (values[s] - mean);
  const double var = pairwise_sum(dev) / (m - 1.0);
  const double fpc = std::sqrt(static_cast<double>(population - num_seeds) / static_cast<double>(population - 1));

  OtocEstimate out;
  out.value = mean;
  out.std_error = std::sqrt(var / m) * fpc;
  out.n = shape.n();
  out.k = shape.k();
  out.sites = zz_label(i, j);
  out.estimator = "zz_sampled";
  out.seed_count = seeds.size();
  return out;
}

double otoc_zz_f_average(const Matrix &u) {
  if (u.rows() != u.cols() || u.rows() == 0) throw DomainError("otoc_zz_f_average: expected a square matrix");
  return u.cwiseAbs2().cwiseAbs2().sum() / static_cast<double>(u.rows());
}

double otoc_zz_f_average(const SubUnitary &u) { return otoc_zz_f_average(u.matrix()); }

double otoc_zz_f_average(const SignedHadamard &u, int power) {
  const std::uint64_t dim = u.dim();
  std::vector<double> per_column(dim);
  parallel_for(0, dim, [&](std::uint64_t b0) {
    const RealVector col = u.power_column(b0, power);
    per_column[b0] = col.array().square().square().sum();
  });
  return pairwise_sum(per_column) / static_cast<double>(dim);
}

double otoc_zz_f_variance_hadamard(int n, int k) {
  if (k < 1 || n < 1 || k > n) throw DomainError("otoc_zz_f_variance_hadamard: need 1 <= k <= n");
  return 8.0 * std::ldexp(1.0, -(n + k)) - 6.0 * std::ldexp(1.0, -(n + 2 * k)) + std::ldexp(1.0, -(n + 3 * k));
}

Complex otoc_dense(const Matrix &u, const Matrix &v, const Matrix &w) {
  const Matrix wt = u * w * u.adjoint();
  const Matrix a = v * wt;
  // tr(A A) = sum_xy A_xy A_yx
  const Complex trace = (a.array() * a.transpose().array()).sum();
  return trace / static_cast<double>(u.rows());
}

OtocEstimate otoc_pauli(const RsedOperator &op, const PauliString &v, const PauliString &w,
                        const OtocOptions &options) {
  const SystemShape &shape = op.shape();
  const int n = shape.n();
  if (v.max_site() >= n || w.max_site() >= n) throw DomainError("otoc_pauli: Pauli string acts outside the register");

  OtocEstimate out;
  out.n = n;
  out.k = shape.k();
  out.sites = v.to_string() + "," + w.to_string();
  out.seed_count = shape.seed_count();

  if (options.mode == OtocMode::kExact) {
    if (n > RsedOperator::kMaxDenseQubits) throw CapacityError("otoc_pauli: exact mode needs n <= 10");
    out.value = otoc_dense(dense_matrix(op), pauli_matrix(v, n), pauli_matrix(w, n));
    out.estimator = "pauli_exact";
    return out;
  }

  if (options.probes < 2) throw DomainError("otoc_pauli: need at least 2 probes");
  const RsedOperator op_dag = op.adjoint();
  const auto dim = static_cast<std::size_t>(shape.full_dim());
  const auto probes = static_cast<std::uint64_t>(options.probes);
  std::vector<double> re(probes), im(probes);
  parallel_for(0, probes, [&](std::uint64_t r) {
    Rng rng(options.seed.derive(r));
    std::vector<Complex> phi(dim);
    for (auto &z : phi) z = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    std::vector<Complex> psi = phi;
    std::span<Complex> s(psi);
    for (int rep = 0; rep < 2; ++rep) {
      apply_inplace(op_dag, s);
      apply_pauli_inplace(w, s, n);
      apply_inplace(op, s);
      apply_pauli_inplace(v, s, n);
    }
    Complex overlap = 0.0;
    for (std::size_t x = 0; x < dim; ++x) overlap += std::conj(phi[x]) * psi[x];
    overlap /= static_cast<double>(dim);
    re[r] = overlap.real();
    im[r] = overlap.imag();
  });
  const double m = static_cast<double>(probes);
  const double mean_re = pairwise_sum(re) / m;
  const double mean_im = pairwise_sum(im) / m;
  std::vector<double> dev(probes);
  for (std::uint64_t r = 0; r < probes; ++r) {
    dev[r] = (re[r] - mean_re) * (re[r] - mean_re) + (im[r] - mean_im) * (im[r] - mean_im);
  }
  out.value = Complex(mean_re, mean_im);
  out.std_error = std::sqrt(pairwise_sum(dev) / (m - 1.0) / m);
  out.estimator = "pauli_stochastic";
  return out;
}

double poisson_bracket(const OtocEstimate &o) { return 1.0 - o.value.real(); }

OtocEstimate otoc_finite_temperature(const RsedOperator &op, const SubHamiltonian &h_sub, double beta,
                                     const PauliString &v, const PauliString &w, ThermalMode mode) {
  if (!(beta >= 0.0)) throw DomainError("otoc_finite_temperature: beta must be >= 0");
  const SystemShape &shape = op.shape();
  if (h_sub.k() != shape.k()) throw DomainError("otoc_finite_temperature: Hamiltonian size does not match k");

  // Block Gibbs state e^{-beta h} / tr e^{-beta h}; shift by the ground energy for stability.
  const RealVector &e = h_sub.eigenvalues();
  const double e0 = e.minCoeff();
  Vector boltzmann(e.size());
  for (Eigen::Index m = 0; m < e.size(); ++m) boltzmann(m) = std::exp(-beta * (e(m) - e0));
  const double z_sub = boltzmann.real().sum();
  const Matrix rho_sub = spectral_compose(h_sub.eigenvectors(), boltzmann / z_sub);

  OtocEstimate out;
  out.n = shape.n();
  out.k = shape.k();
  out.sites = v.to_string() + "," + w.to_string();
  out.seed_count = shape.seed_count();

  if (mode == ThermalMode::kExact) {
    const int n = shape.n();
    if (n > RsedOperator::kMaxDenseQubits) throw CapacityError("otoc_finite_temperature: exact mode needs n <= 10");
    if (v.max_site() >= n || w.max_site() >= n) throw DomainError("otoc_finite_temperature: site out of range");
    // sum_a O_a rho_sub O_a^dagger / A is the embedded Gibbs state.
    const Matrix rho = dense_matrix(op.with_sub(SubUnitary::unchecked(rho_sub))) /
                       static_cast<double>(shape.seed_count());
    const Matrix u = dense_matrix(op);
    const Matrix wm = pauli_matrix(w, n);
    const Matrix vt = u.adjoint() * pauli_matrix(v, n) * u;
    const Matrix m = vt * wm;
    out.value = (rho * m * m).trace();
    out.estimator = "thermal_exact";
    return out;
  }

  const double big_n = static_cast<double>(shape.full_dim());
  const double off_diag = (rho_sub.sum() - rho_sub.trace()).real();
  const double prefactor = 1.0 + off_diag / (big_n - 1.0);
  const Matrix &u = op.sub().matrix();
  const Matrix cube = u.cwiseProduct(u).cwiseProduct(u.conjugate());
  const double core = (cube * u.adjoint()).sum().real() / static_cast<double>(shape.sub_dim());
  out.value = prefactor * core;
  out.estimator = "thermal_leading";
  return out;
}

double early_time_slope(const SubHamiltonian &h) {
  const Matrix &m = h.matrix();
  const Matrix h2 = m * m;
  const Matrix diag_h2 = Matrix(h2.diagonal().asDiagonal());
  const Matrix diag_abs = Matrix(m.cwiseAbs2().diagonal().cast<Complex>().asDiagonal());
  const Matrix diag_h = Matrix(m.diagonal().asDiagonal());
  const Complex trace = (3.0 * diag_h2 + h2 - 2.0 * diag_abs - 2.0 * diag_h * m).trace();
  return 0.5 * trace.real() / static_cast<double>(h.dim());
}

}  // namespace rsed
