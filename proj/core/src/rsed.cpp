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

#include "rsed/rsed.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "rsed/errors.hpp"
#include "rsed/parallel.hpp"

namespace rsed {

RsedOperator::RsedOperator(std::shared_ptr<const SubsetPermutation> perm, std::shared_ptr<const SignFunction> sign,
                           SubUnitary sub)
    : perm_(std::move(perm)), sign_(std::move(sign)), sub_(std::move(sub)) {
  if (!perm_ || !sign_) throw DomainError("RsedOperator: null permutation or sign function");
  if (!(perm_->shape() == sign_->shape())) throw DomainError("RsedOperator: permutation and sign shapes differ");
  if (sub_.k() != perm_->shape().k()) {
    throw DomainError("RsedOperator: sub-unitary acts on " + std::to_string(sub_.k()) + " qubits, shape has k=" +
                      std::to_string(perm_->shape().k()));
  }
}

RsedOperator RsedOperator::with_sub(SubUnitary sub) const { return RsedOperator(perm_, sign_, std::move(sub)); }

RsedOperator RsedOperator::adjoint() const { return with_sub(sub_.adjoint()); }

RsedOperator make_random_rsed(const SystemShape &shape, RngSeed seed, SubUnitary sub, PermutationBackend perm_backend,
                              SignBackend sign_backend) {
  auto perm = std::make_shared<const SubsetPermutation>(sample_permutation(shape, seed.derive(1), perm_backend));
  auto sign = std::make_shared<const SignFunction>(sample_sign_function(shape, seed.derive(2), sign_backend));
  return RsedOperator(std::move(perm), std::move(sign), std::move(sub));
}

StateVector::StateVector(const SystemShape &shape)
    : shape_(shape), amps_(Vector::Zero(static_cast<Eigen::Index>(shape.full_dim()))) {}

StateVector::StateVector(const SystemShape &shape, Vector amplitudes) : shape_(shape), amps_(std::move(amplitudes)) {
  if (static_cast<std::uint64_t>(amps_.size()) != shape.full_dim()) {
    throw DomainError("StateVector: expected " + std::to_string(shape.full_dim()) + " amplitudes");
  }
}

StateVector StateVector::basis(const SystemShape &shape, BasisIndex x) {
  if (x >= shape.full_dim()) throw DomainError("StateVector::basis: index out of range");
  StateVector s(shape);
  s.amps_(static_cast<Eigen::Index>(x)) = 1.0;
  return s;
}

PauliString::PauliString(std::vector<PauliFactor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), [](const auto &l, const auto &r) { return l.site < r.site; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int site = factors_[i].site;
    if (site < 0 || site >= 63) throw DomainError("PauliString: site out of range");
    if (i > 0 && factors_[i - 1].site == site) throw DomainError("PauliString: repeated site " + std::to_string(site));
    const std::uint64_t bit = std::uint64_t{1} << site;
    switch (factors_[i].axis) {
      case PauliAxis::kX: x_ |= bit; break;
      case PauliAxis::kZ: z_ |= bit; break;
      case PauliAxis::kY:
        x_ |= bit;
        z_ |= bit;
        phase_ = (phase_ + 1) & 3;
        break;
    }
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<PauliFactor> factors;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  skip();
  if (text.substr(pos) == "I") return {};
  while (pos < text.size()) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    PauliAxis axis;
    if (c == 'X') axis = PauliAxis::kX;
    else if (c == 'Y') axis = PauliAxis::kY;
    else if (c == 'Z') axis = PauliAxis::kZ;
    else throw DomainError("PauliString::parse: unexpected character '" + std::string(1, text[pos]) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw DomainError("PauliString::parse: missing site index");
    factors.push_back({std::stoi(std::string(text.substr(start, pos - start))), axis});
    skip();
  }
  return PauliString(std::move(factors));
}

int PauliString::max_site() const noexcept { return factors_.empty() ? -1 : factors_.back().site; }

std::string PauliString::to_string() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (const auto &f : factors_) {
    if (!out.empty()) out += ' ';
    out += f.axis == PauliAxis::kX ? 'X' : f.axis == PauliAxis::kY ? 'Y' : 'Z';
    out += std::to_string(f.site);
  }
  return out;
}

namespace {

void check_length(const SystemShape &shape, std::size_t size) {
  if (size != shape.full_dim()) throw DomainError("state length does not match 2^n");
}

}  // namespace

void apply_inplace(const RsedOperator &op, std::span<Complex> amps) {
  const SystemShape &shape = op.shape();
  check_length(shape, amps.size());
  const int k = shape.k();
  const auto dim = static_cast<Eigen::Index>(shape.sub_dim());
  const std::uint64_t seeds = shape.seed_count();
  const Matrix &u = op.sub().matrix();
  const SubsetPermutation &p = op.perm();
  const SignFunction &f = op.sign();

  // Seeds are grouped so that each task reuses its scratch buffers.
  const std::uint64_t tasks = std::min<std::uint64_t>(seeds, 64 * static_cast<std::uint64_t>(thread_count()));
  const std::uint64_t per_task = (seeds + tasks - 1) / tasks;
  parallel_for(0, tasks, [&](std::uint64_t task) {
    Vector in(dim), out(dim);
    std::vector<BasisIndex> where(static_cast<std::size_t>(dim));
    std::vector<double> factor(static_cast<std::size_t>(dim));
    const std::uint64_t lo = task * per_task;
    const std::uint64_t hi = std::min(seeds, lo + per_task);
    for (std::uint64_t a = lo; a < hi; ++a) {
      for (Eigen::Index b = 0; b < dim; ++b) {
        const BasisIndex x = bits::join(static_cast<std::uint64_t>(b), a, k);
        const auto ub = static_cast<std::size_t>(b);
        where[ub] = p.forward(x);
        factor[ub] = f.factor(x);
        in(b) = amps[where[ub]] * factor[ub];
      }
      out.noalias() = u * in;
      for (Eigen::Index b = 0; b < dim; ++b) {
        const auto ub = static_cast<std::size_t>(b);
        amps[where[ub]] = out(b) * factor[ub];
      }
    }
  });
}

StateVector apply(const RsedOperator &op, const StateVector &psi) {
  if (!(psi.shape() == op.shape())) throw DomainError("apply: state and operator shapes differ");
  StateVector out = psi;
  apply_inplace(op, std::span<Complex>(out.amplitudes().data(), static_cast<std::size_t>(out.amplitudes().size())));
  return out;
}

StateVector apply_power(const RsedOperator &op, double t, const StateVector &psi) {
  return apply(op.with_sub(unitary_power(op.sub(), t)), psi);
}

SparseState evolve_basis_state(const RsedOperator &op, BasisIndex x) {
  const SystemShape &shape = op.shape();
  if (x >= shape.full_dim()) throw DomainError("evolve_basis_state: index out of range");
  const int k = shape.k();
  const BasisIndex pre = op.perm().backward(x);
  const std::uint64_t b = pre & (shape.sub_dim() - 1);
  const std::uint64_t a = pre >> k;
  const double in_sign = op.sign().factor(pre);
  const Matrix &u = op.sub().matrix();

  SparseState out;
  out.reserve(shape.sub_dim());
  for (std::uint64_t b2 = 0; b2 < shape.sub_dim(); ++b2) {
    const BasisIndex y = bits::join(b2, a, k);
    out.push_back({op.perm().forward(y),
                   u(static_cast<Eigen::Index>(b2), static_cast<Eigen::Index>(b)) * (in_sign * op.sign().factor(y))});
  }
  return out;
}

Matrix dense_matrix(const RsedOperator &op) {
  const SystemShape &shape = op.shape();
  if (shape.n() > RsedOperator::kMaxDenseQubits) {
    throw CapacityError("dense_matrix: n=" + std::to_string(shape.n()) + " exceeds the dense cap of 10");
  }
  const auto dim = static_cast<Eigen::Index>(shape.full_dim());
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (const auto &e : evolve_basis_state(op, static_cast<BasisIndex>(x))) {
      m(static_cast<Eigen::Index>(e.index), x) = e.amplitude;
    }
  }
  return m;
}

namespace {

Complex i_power(int e) {
  switch (e & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_sites(const PauliString &s, int n) {
  if (s.max_site() >= n) {
    throw DomainError("Pauli string " + s.to_string() + " acts outside " + std::to_string(n) + " qubits");
  }
}

}  // namespace

void apply_pauli_inplace(const PauliString &s, std::span<Complex> amps, int n) {
  check_sites(s, n);
  if (amps.size() != (std::size_t{1} << n)) throw DomainError("apply_pauli: state length does not match 2^n");
  const std::uint64_t xm = s.x_mask();
  const std::uint64_t zm = s.z_mask();
  const Complex phase = i_power(s.phase());
  auto signed_amp = [&](std::uint64_t v) { return bits::parity(zm & v) ? -amps[v] : amps[v]; };
  if (xm == 0) {
    for (std::uint64_t v = 0; v < amps.size(); ++v) amps[v] = phase * signed_amp(v);
    return;
  }
  // Pair up v and v ^ x, visiting each pair once from its smaller member.
  const int top = 63 - std::countl_zero(xm);
  for (std::uint64_t v = 0; v < amps.size(); ++v) {
    if (bits::get(v, top)) continue;
    const std::uint64_t w = v ^ xm;
    const Complex new_w = phase * signed_amp(v);
    const Complex new_v = phase * signed_amp(w);
    amps[w] = new_w;
    amps[v] = new_v;
  }
}

StateVector apply_pauli(const PauliString &s, const StateVector &psi) {
  StateVector out = psi;
  apply_pauli_inplace(s, std::span<Complex>(out.amplitudes().data(), static_cast<std::size_t>(out.amplitudes().size())),
                      psi.shape().n());
  return out;
}

Matrix pauli_matrix(const PauliString &s, int n) {
  if (n < 1 || n > 12) throw CapacityError("pauli_matrix: n outside [1, 12]");
  check_sites(s, n);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  Matrix m = Matrix::Zero(dim, dim);
  const Complex phase = i_power(s.phase());
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(dim); ++v) {
    m(static_cast<Eigen::Index>(v ^ s.x_mask()), static_cast<Eigen::Index>(v)) =
        bits::parity(s.z_mask() & v) ? -phase : phase;
  }
  return m;
}

}  // namespace rsed
