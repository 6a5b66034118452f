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

#include "rsed/prs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>

#include "rsed/errors.hpp"
#include "rsed/rng.hpp"

namespace rsed {

namespace {

void check_block_dim(std::size_t d, const char *what) {
  if (d > DensityMatrix::kMaxBlockDim) {
    throw CapacityError(std::string(what) + ": support of " + std::to_string(d) + " exceeds the block cap of " +
                        std::to_string(DensityMatrix::kMaxBlockDim));
  }
}

double von_neumann(const Matrix &m) {
  const HermitianEigen eig = hermitian_eigen(m);
  std::vector<double> p(static_cast<std::size_t>(eig.values.size()));
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) p[static_cast<std::size_t>(i)] = std::max(0.0, eig.values(i));
  return shannon_entropy(p);
}

double to_unit(double nats, EntropyUnit unit) { return unit == EntropyUnit::kBits ? nats / std::numbers::ln2 : nats; }

double binomial(std::uint64_t n, std::uint64_t r) {
  double out = 1.0;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
  return out;
}

double factorial(int t) {
  double out = 1.0;
  for (int i = 2; i <= t; ++i) out *= i;
  return out;
}

void check_copies(int n, int t, const char *what) {
  if (t < 1) throw DomainError(std::string(what) + ": need t >= 1");
  if (n * t > kMaxCopyQubits) {
    throw CapacityError(std::string(what) + ": n*t = " + std::to_string(n * t) + " exceeds " +
                        std::to_string(kMaxCopyQubits));
  }
}

// Sorts (index, payload) rows by index and returns the permutation.
std::vector<std::size_t> order_by(const std::vector<BasisIndex> &keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return keys[l] < keys[r]; });
  return order;
}

}  // namespace

DensityMatrix::DensityMatrix(std::uint64_t dim, std::vector<BasisIndex> support, Matrix block)
    : dim_(dim), support_(std::move(support)), block_(std::move(block)) {
  if (dim_ == 0) throw DomainError("DensityMatrix: dimension must be positive");
  check_block_dim(support_.size(), "DensityMatrix");
  if (block_.rows() != block_.cols() || static_cast<std::size_t>(block_.rows()) != support_.size()) {
    throw DomainError("DensityMatrix: block size does not match support");
  }
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] >= dim_) throw DomainError("DensityMatrix: support index out of range");
    if (i > 0 && support_[i] <= support_[i - 1]) throw DomainError("DensityMatrix: support must be strictly increasing");
  }
}

DensityMatrix DensityMatrix::dense(Matrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DomainError("DensityMatrix::dense: expected a square matrix");
  check_block_dim(static_cast<std::size_t>(m.rows()), "DensityMatrix::dense");
  std::vector<BasisIndex> support(static_cast<std::size_t>(m.rows()));
  std::iota(support.begin(), support.end(), BasisIndex{0});
  const auto dim = static_cast<std::uint64_t>(m.rows());
  return DensityMatrix(dim, std::move(support), std::move(m));
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
  const Vector &v = psi.amplitudes();
  return dense(v * v.adjoint());
}

DensityMatrix DensityMatrix::pure(std::uint64_t dim, const SparseState &psi) {
  std::vector<BasisIndex> support;
  support.reserve(psi.size());
  for (const auto &e : psi) support.push_back(e.index);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(support.size()));
  for (const auto &e : psi) {
    const auto pos = std::lower_bound(support.begin(), support.end(), e.index) - support.begin();
    v(pos) += e.amplitude;
  }
  return DensityMatrix(dim, std::move(support), v * v.adjoint());
}

Matrix DensityMatrix::to_dense() const {
  check_block_dim(dim_, "DensityMatrix::to_dense");
  const auto d = static_cast<Eigen::Index>(dim_);
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < support_.size(); ++i) {
    for (std::size_t j = 0; j < support_.size(); ++j) {
      m(static_cast<Eigen::Index>(support_[i]), static_cast<Eigen::Index>(support_[j])) =
          block_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return m;
}

void DensityMatrix::validate(double tol) const {
  const double herm = hermiticity_error(block_);
  if (herm > 1e-10) throw ValidationError("DensityMatrix: not Hermitian (" + std::to_string(herm) + ")");
  const Complex tr = block_.trace();
  if (std::abs(tr - 1.0) > tol) throw ValidationError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  const double min_eig = hermitian_eigen(block_).values.minCoeff();
  if (min_eig < -tol) throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
}

StateVector subset_phase_state(const SubsetPermutation &p, const SignFunction &f, std::uint64_t a) {
  const SystemShape &shape = p.shape();
  if (a >= shape.seed_count()) throw DomainError("subset_phase_state: seed out of range");
  StateVector psi(shape);
  const double amp = std::pow(2.0, -0.5 * shape.k());
  for (std::uint64_t b = 0; b < shape.sub_dim(); ++b) {
    const BasisIndex x = bits::join(b, a, shape.k());
    psi.amplitudes()(static_cast<Eigen::Index>(p.forward(x))) = amp * f.factor(x);
  }
  return psi;
}

double coherence_rel_entropy(const StateVector &psi, EntropyUnit unit) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-9) throw ValidationError("coherence_rel_entropy: state is not normalized");
  const RealVector probs = psi.amplitudes().cwiseAbs2();
  // S(rho) = 0 for a pure state.
  return to_unit(shannon_entropy(std::span<const double>(probs.data(), static_cast<std::size_t>(probs.size()))), unit);
}

double coherence_rel_entropy(const DensityMatrix &rho, EntropyUnit unit) {
  rho.validate();
  const RealVector diag = rho.block().diagonal().real().cwiseMax(0.0);
  const double s_diag = shannon_entropy(std::span<const double>(diag.data(), static_cast<std::size_t>(diag.size())));
  return to_unit(std::max(0.0, s_diag - von_neumann(rho.block())), unit);
}

DensityMatrix hybrid3_state(const SubsetPermutation &p, std::uint64_t a, int t) {
  const SystemShape &shape = p.shape();
  const int n = shape.n();
  if (a >= shape.seed_count()) throw DomainError("hybrid3_state: seed out of range");
  const std::uint64_t kdim = shape.sub_dim();
  if (t >= 1 && static_cast<std::uint64_t>(t) > kdim) throw DomainError("hybrid3_state: t exceeds the subset size");
  check_copies(n, t, "hybrid3_state");

  std::vector<BasisIndex> pos(kdim);
  for (std::uint64_t b = 0; b < kdim; ++b) pos[b] = p.forward(bits::join(b, a, shape.k()));

  // All ordered tuples of distinct subset elements, tagged by their set.
  std::vector<BasisIndex> index;
  std::vector<std::uint64_t> set_key;
  std::vector<std::uint64_t> tuple(static_cast<std::size_t>(t), 0);
  auto recurse = [&](auto &&self, int c) -> void {
    if (c == t) {
      BasisIndex idx = 0;
      for (int i = 0; i < t; ++i) idx |= pos[tuple[static_cast<std::size_t>(i)]] << (i * n);
      std::vector<std::uint64_t> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      std::uint64_t key = 0;
      for (auto s : sorted) key = key * kdim + s;
      index.push_back(idx);
      set_key.push_back(key);
      return;
    }
    for (std::uint64_t b = 0; b < kdim; ++b) {
      if (std::find(tuple.begin(), tuple.begin() + c, b) != tuple.begin() + c) continue;
      tuple[static_cast<std::size_t>(c)] = b;
      self(self, c + 1);
    }
  };
  recurse(recurse, 0);
  check_block_dim(index.size(), "hybrid3_state");

  const auto order = order_by(index);
  const double w = 1.0 / (binomial(kdim, static_cast<std::uint64_t>(t)) * factorial(t));
  const auto m = static_cast<Eigen::Index>(index.size());
  Matrix block = Matrix::Zero(m, m);
  std::vector<BasisIndex> support(index.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    support[static_cast<std::size_t>(i)] = index[order[static_cast<std::size_t>(i)]];
    for (Eigen::Index j = 0; j < m; ++j) {
      if (set_key[order[static_cast<std::size_t>(i)]] == set_key[order[static_cast<std::size_t>(j)]]) block(i, j) = w;
    }
  }
  return DensityMatrix(std::uint64_t{1} << (n * t), std::move(support), std::move(block));
}

DensityMatrix tcopy_mixture(std::span<const SparseState> states, int n, int t) {
  check_copies(n, t, "tcopy_mixture");
  if (states.empty()) throw DomainError("tcopy_mixture: no states");

  std::vector<SparseState> tensors;
  tensors.reserve(states.size());
  std::vector<BasisIndex> support;
  for (const SparseState &s : states) {
    SparseState cur{{0, Complex(1.0, 0.0)}};
    for (int c = 0; c < t; ++c) {
      SparseState next;
      next.reserve(cur.size() * s.size());
      for (const auto &l : cur) {
        for (const auto &e : s) next.push_back({l.index | (e.index << (c * n)), l.amplitude * e.amplitude});
      }
      cur = std::move(next);
    }
    for (const auto &e : cur) support.push_back(e.index);
    tensors.push_back(std::move(cur));
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  check_block_dim(support.size(), "tcopy_mixture");

  const auto m = static_cast<Eigen::Index>(support.size());
  Matrix block = Matrix::Zero(m, m);
  Vector v(m);
  for (const SparseState &s : tensors) {
    v.setZero();
    for (const auto &e : s) v(std::lower_bound(support.begin(), support.end(), e.index) - support.begin()) += e.amplitude;
    block.noalias() += v * v.adjoint();
  }
  block /= static_cast<double>(tensors.size());
  return DensityMatrix(std::uint64_t{1} << (n * t), std::move(support), std::move(block));
}

namespace {

// Pi_sym / tr over t copies of span{|basis_0>, ..., |basis_{d-1}>}; `place`
// maps a digit tuple to its index in the full space.
template <typename Place>
DensityMatrix build_sym(std::uint64_t d, int t, std::uint64_t full_dim, Place place) {
  std::uint64_t count = 1;
  for (int c = 0; c < t; ++c) {
    count *= d;
    check_block_dim(count, "sym_projector_state");
  }
  std::vector<std::vector<std::uint64_t>> digits(count, std::vector<std::uint64_t>(static_cast<std::size_t>(t)));
  std::vector<BasisIndex> index(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    std::uint64_t v = r;
    for (int c = 0; c < t; ++c) {
      digits[r][static_cast<std::size_t>(c)] = v % d;
      v /= d;
    }
    index[r] = place(digits[r]);
  }
  const auto order = order_by(index);
  std::vector<std::size_t> rank(count);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  auto digits_to_row = [&](const std::vector<std::uint64_t> &dg) {
    std::uint64_t r = 0;
    for (int c = t - 1; c >= 0; --c) r = r * d + dg[static_cast<std::size_t>(c)];
    return r;
  };

  const double w = 1.0 / (factorial(t) * binomial(d + static_cast<std::uint64_t>(t) - 1, static_cast<std::uint64_t>(t)));
  const auto m = static_cast<Eigen::Index>(count);
  Matrix block = Matrix::Zero(m, m);
  std::vector<int> sigma(static_cast<std::size_t>(t));
  std::vector<std::uint64_t> permuted(static_cast<std::size_t>(t));
  for (std::uint64_t r = 0; r < count; ++r) {
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      for (int c = 0; c < t; ++c) {
        permuted[static_cast<std::size_t>(c)] = digits[r][static_cast<std::size_t>(sigma[static_cast<std::size_t>(c)])];
      }
      block(static_cast<Eigen::Index>(rank[digits_to_row(permuted)]), static_cast<Eigen::Index>(rank[r])) += w;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  std::vector<BasisIndex> support(count);
  for (std::size_t i = 0; i < count; ++i) support[i] = index[order[i]];
  return DensityMatrix(full_dim, std::move(support), std::move(block));
}

}  // namespace

DensityMatrix sym_projector_state(std::uint64_t d, int t) {
  if (d < 1 || t < 1) throw DomainError("sym_projector_state: need d >= 1 and t >= 1");
  std::uint64_t full = 1;
  for (int c = 0; c < t; ++c) {
    full *= d;
    check_block_dim(full, "sym_projector_state");
  }
  return build_sym(d, t, full, [&](const std::vector<std::uint64_t> &dg) {
    BasisIndex idx = 0;
    for (int c = t - 1; c >= 0; --c) idx = idx * d + dg[static_cast<std::size_t>(c)];
    return idx;
  });
}

DensityMatrix sym_projector_state(std::span<const BasisIndex> basis, int n, int t) {
  check_copies(n, t, "sym_projector_state");
  if (basis.empty()) throw DomainError("sym_projector_state: empty basis");
  std::vector<BasisIndex> sorted(basis.begin(), basis.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("sym_projector_state: repeated basis state");
  }
  if (sorted.back() >= (BasisIndex{1} << n)) throw DomainError("sym_projector_state: basis state out of range");
  return build_sym(basis.size(), t, std::uint64_t{1} << (n * t), [&](const std::vector<std::uint64_t> &dg) {
    BasisIndex idx = 0;
    for (int c = 0; c < t; ++c) idx |= basis[dg[static_cast<std::size_t>(c)]] << (c * n);
    return idx;
  });
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
  if (rho.dim() != sigma.dim()) throw DomainError("trace_distance: dimension mismatch");
  std::vector<BasisIndex> merged;
  std::set_union(rho.support().begin(), rho.support().end(), sigma.support().begin(), sigma.support().end(),
                 std::back_inserter(merged));
  if (merged.size() > 2 * DensityMatrix::kMaxBlockDim) throw CapacityError("trace_distance: merged support too large");
  const auto m = static_cast<Eigen::Index>(merged.size());
  Matrix diff = Matrix::Zero(m, m);
  auto accumulate = [&](const DensityMatrix &d, double weight) {
    std::vector<Eigen::Index> at(d.support().size());
    for (std::size_t i = 0; i < at.size(); ++i) {
      at[i] = std::lower_bound(merged.begin(), merged.end(), d.support()[i]) - merged.begin();
    }
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = 0; j < at.size(); ++j) {
        diff(at[i], at[j]) += weight * d.block()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  };
  accumulate(rho, 1.0);
  accumulate(sigma, -1.0);
  const HermitianEigen eig = hermitian_eigen((diff + diff.adjoint()) * 0.5);
  return 0.5 * eig.values.cwiseAbs().sum();
}

DesignVariance design_variance_condition(const Matrix &u, int t, std::uint64_t b_star) {
  const auto kdim = static_cast<std::uint64_t>(u.rows());
  if (u.rows() != u.cols()) throw DomainError("design_variance_condition: expected a square matrix");
  if (kdim > 64 || t > 3) throw CapacityError("design_variance_condition: needs K <= 64 and t <= 3");
  if (t < 1 || static_cast<std::uint64_t>(t) > kdim) throw DomainError("design_variance_condition: t outside [1, K]");
  if (b_star >= kdim) throw DomainError("design_variance_condition: b* out of range");

  std::vector<double> col(kdim);
  for (std::uint64_t b = 0; b < kdim; ++b) col[b] = std::norm(u(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b_star)));
  std::vector<double> x;
  std::vector<std::uint64_t> tuple(static_cast<std::size_t>(t));
  auto recurse = [&](auto &&self, int c, std::uint64_t from) -> void {
    if (c == t) {
      double prod = 1.0;
      for (auto b : tuple) prod *= col[b];
      x.push_back(prod);
      return;
    }
    for (std::uint64_t b = from; b < kdim; ++b) {
      tuple[static_cast<std::size_t>(c)] = b;
      self(self, c + 1, b + 1);
    }
  };
  recurse(recurse, 0, 0);

  DesignVariance out;
  out.tuples = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  if (mean == 0.0) {
    out.degenerate = true;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  double acc = 0.0;
  for (double v : x) acc += (v / mean - 1.0) * (v / mean - 1.0);
  out.value = acc / static_cast<double>(x.size());
  return out;
}

ElementCheck element_condition_check(const Matrix &u, double epsilon) {
  ElementCheck out;
  out.stats = element_magnitude_stats(u, epsilon);
  out.exceed_fraction = out.stats.exceed_fraction;
  out.passed = out.stats.exceed_count == 0;
  return out;
}

namespace {

void check_pattern(const std::vector<int> &sites, int n) {
  for (int s : sites) {
    if (s < 0 || s >= n) throw DomainError("layer pattern site " + std::to_string(s) + " outside the register");
  }
}

}  // namespace

std::vector<Gate> layer_gates(const Layer &layer, int n) {
  std::vector<Gate> gates;
  if (const auto *c = std::get_if<RandomCliffordLayer>(&layer)) {
    const int length = c->length > 0 ? c->length : 3 * n;
    Rng rng(RngSeed{c->seed, 0x436c6966ULL});
    const std::uint64_t kinds = n >= 2 ? 3 : 2;
    const auto un = static_cast<std::uint64_t>(n);
    for (int i = 0; i < length; ++i) {
      switch (rng.below(kinds)) {
        case 0: gates.push_back({GateKind::kH, {static_cast<int>(rng.below(un)), 0, 0}}); break;
        case 1: gates.push_back({GateKind::kS, {static_cast<int>(rng.below(un)), 0, 0}}); break;
        default: {
          const auto control = static_cast<int>(rng.below(un));
          auto target = static_cast<int>(rng.below(un - 1));
          if (target >= control) ++target;
          gates.push_back({GateKind::kCX, {control, target, 0}});
        }
      }
    }
  } else if (const auto *tl = std::get_if<TLayer>(&layer)) {
    check_pattern(tl->sites, n);
    for (int s : tl->sites) gates.push_back({GateKind::kT, {s, 0, 0}});
  } else {
    const auto &hl = std::get<HadamardLayer>(layer);
    check_pattern(hl.sites, n);
    for (int s : hl.sites) gates.push_back({GateKind::kH, {s, 0, 0}});
  }
  return gates;
}

StateVector append_layer(const StateVector &psi, const Layer &layer) {
  StateVector out = psi;
  std::span<Complex> amps(out.amplitudes().data(), static_cast<std::size_t>(out.amplitudes().size()));
  for (const Gate &g : layer_gates(layer, psi.shape().n())) apply_gate(g, amps);
  return out;
}

double entanglement_entropy(const StateVector &psi, std::span<const int> sites_a) {
  const int n = psi.shape().n();
  std::vector<int> a_sites(sites_a.begin(), sites_a.end());
  std::sort(a_sites.begin(), a_sites.end());
  if (std::adjacent_find(a_sites.begin(), a_sites.end()) != a_sites.end()) {
    throw DomainError("entanglement_entropy: repeated site in partition");
  }
  for (int s : a_sites) {
    if (s < 0 || s >= n) throw DomainError("entanglement_entropy: site outside the register");
  }
  std::vector<int> b_sites;
  for (int s = 0; s < n; ++s) {
    if (!std::binary_search(a_sites.begin(), a_sites.end(), s)) b_sites.push_back(s);
  }
  if (a_sites.size() > b_sites.size()) std::swap(a_sites, b_sites);
  if (a_sites.empty()) return 0.0;
  if (a_sites.size() > 12) throw CapacityError("entanglement_entropy: reduced state too large");

  const auto da = static_cast<Eigen::Index>(1) << a_sites.size();
  const auto db = static_cast<Eigen::Index>(1) << b_sites.size();
  Matrix m(da, db);
  const Vector &amps = psi.amplitudes();
  for (Eigen::Index x = 0; x < amps.size(); ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    Eigen::Index ia = 0, ib = 0;
    for (std::size_t i = 0; i < a_sites.size(); ++i) ia |= static_cast<Eigen::Index>(bits::get(ux, a_sites[i])) << i;
    for (std::size_t i = 0; i < b_sites.size(); ++i) ib |= static_cast<Eigen::Index>(bits::get(ux, b_sites[i])) << i;
    m(ia, ib) = amps(x);
  }
  return von_neumann(m * m.adjoint());
}

}  // namespace rsed
