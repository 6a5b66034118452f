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

#include "rsed/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <string>

#include "rsed/errors.hpp"

namespace rsed {

Histogram histogram(std::span<const double> samples, double lo, double hi, int bins) {
  if (bins < 1 || !(hi > lo)) throw DomainError("histogram: need bins >= 1 and hi > lo");
  Histogram h;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  h.density.assign(static_cast<std::size_t>(bins), 0.0);
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) h.edges[static_cast<std::size_t>(i)] = lo + width * i;
  if (samples.empty()) return h;
  for (double s : samples) {
    if (s < lo || s > hi) continue;
    auto bin = static_cast<std::size_t>((s - lo) / width);
    if (bin >= h.density.size()) bin = h.density.size() - 1;
    h.density[bin] += 1.0;
  }
  for (double &d : h.density) d /= static_cast<double>(samples.size()) * width;
  return h;
}

void write_histogram_csv(std::ostream &out, const Histogram &h) {
  out << "bin_left,bin_right,density\n";
  for (std::size_t i = 0; i < h.density.size(); ++i) {
    out << h.edges[i] << ',' << h.edges[i + 1] << ',' << h.density[i] << '\n';
  }
}

SpectrumReport level_spacing_stats(std::span<const double> evals, bool exclude_degenerate, double tolerance, int bins,
                                   double max_spacing) {
  if (evals.size() < 3) throw DomainError("level_spacing_stats: need at least 3 eigenvalues");
  SpectrumReport r;
  r.eigenvalues.assign(evals.begin(), evals.end());
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  const double range = r.eigenvalues.back() - r.eigenvalues.front();
  r.tolerance = tolerance >= 0.0 ? tolerance : 1e-10 * range;

  std::vector<double> gaps;
  gaps.reserve(r.eigenvalues.size() - 1);
  std::size_t zero = 0;
  int run = 1;
  for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) {
    const double g = r.eigenvalues[i] - r.eigenvalues[i - 1];
    const bool degenerate = g <= r.tolerance;
    if (degenerate) {
      ++zero;
      r.degeneracy_multiplicity = std::max(r.degeneracy_multiplicity, ++run);
    } else {
      run = 1;
    }
    if (!(exclude_degenerate && degenerate)) gaps.push_back(g);
  }
  r.zero_gap_fraction = static_cast<double>(zero) / static_cast<double>(r.eigenvalues.size() - 1);

  double mean = 0.0;
  for (double g : gaps) mean += g;
  if (!gaps.empty()) mean /= static_cast<double>(gaps.size());
  if (mean > 0.0) {
    for (double &g : gaps) g /= mean;
  }
  r.spacings = std::move(gaps);
  r.histogram = histogram(r.spacings, 0.0, max_spacing, bins);
  return r;
}

double wigner_dyson_pdf(double s, WignerDyson ensemble) {
  if (!(s >= 0.0)) throw DomainError("wigner_dyson_pdf: s must be >= 0");
  constexpr double pi = std::numbers::pi;
  if (ensemble == WignerDyson::kGoe) return 0.5 * pi * s * std::exp(-0.25 * pi * s * s);
  return 32.0 / (pi * pi) * s * s * std::exp(-4.0 * s * s / pi);
}

double wigner_dyson_cdf(double s, WignerDyson ensemble) {
  if (!(s >= 0.0)) throw DomainError("wigner_dyson_cdf: s must be >= 0");
  constexpr double pi = std::numbers::pi;
  if (ensemble == WignerDyson::kGoe) return 1.0 - std::exp(-0.25 * pi * s * s);
  return std::erf(2.0 * s / std::sqrt(pi)) - 4.0 * s / pi * std::exp(-4.0 * s * s / pi);
}

double ks_distance(std::span<const double> samples, WignerDyson ensemble) {
  if (samples.empty()) throw DomainError("ks_distance: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = wigner_dyson_cdf(std::max(0.0, sorted[i]), ensemble);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / m - f), std::abs(f - static_cast<double>(i) / m)});
  }
  return d;
}

double spectral_form_factor(std::span<const double> evals, double beta, double t) {
  if (!(beta >= 0.0)) throw DomainError("spectral_form_factor: beta must be >= 0");
  std::complex<double> z = 0.0;
  for (double e : evals) z += std::exp(std::complex<double>(-beta * e, -t * e));
  return std::norm(z);
}

double spectral_form_factor(const SubHamiltonian &h, double beta, double t) {
  const RealVector &e = h.eigenvalues();
  return spectral_form_factor(std::span<const double>(e.data(), static_cast<std::size_t>(e.size())), beta, t);
}

double rsed_sff(const SystemShape &shape, const SubHamiltonian &h, double beta, double t) {
  if (h.k() != shape.k()) throw DomainError("rsed_sff: Hamiltonian size does not match k");
  return std::ldexp(spectral_form_factor(h, beta, t), 2 * shape.seed_bits());
}

std::vector<double> embed_spectrum(const SystemShape &shape, std::span<const double> evals_sub) {
  if (evals_sub.size() != shape.sub_dim()) {
    throw DomainError("embed_spectrum: expected " + std::to_string(shape.sub_dim()) + " eigenvalues");
  }
  std::vector<double> out;
  out.reserve(shape.full_dim());
  for (double e : evals_sub) out.insert(out.end(), shape.seed_count(), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rsed
