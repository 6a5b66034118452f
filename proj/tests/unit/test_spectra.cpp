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

#include "fixtures.hpp"
#include "oracle_values.hpp"
#include "rsed/errors.hpp"
#include "rsed/rsed.hpp"
#include "rsed/spectra.hpp"

namespace rsed {
namespace {

// Composite Simpson on [0, hi].
template <class F>
double integrate(F f, double hi, int intervals = 20000) {
  const double h = hi / intervals;
  double acc = f(0.0) + f(hi);
  for (int i = 1; i < intervals; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

TEST(LevelSpacing, EquallySpaced) {
  const std::vector<double> e{3.0, 0.0, 2.0, 1.0};
  const auto r = level_spacing_stats(e, false);
  ASSERT_EQ(r.spacings.size(), 3u);
  for (double s : r.spacings) EXPECT_NEAR(s, 1.0, 1e-15);
  EXPECT_EQ(r.eigenvalues, (std::vector<double>{0.0, 1.0, 2.0, 3.0}));
  EXPECT_THROW(level_spacing_stats(std::vector<double>{0.0, 1.0}, false), DomainError);
}

TEST(LevelSpacing, EmbeddedSpectrumZeroGaps) {
  const SystemShape s(9, 4);
  std::vector<double> ev(16);
  for (int i = 0; i < 16; ++i) ev[i] = i + 0.3 * std::sin(1.7 * i);
  const auto full = embed_spectrum(s, ev);
  const auto r = level_spacing_stats(full, false);
  const double n = 512.0, k = 16.0;
  EXPECT_NEAR(r.zero_gap_fraction, (n - k) / (n - 1.0), 1e-12);
  EXPECT_NEAR(r.zero_gap_fraction, 1.0 - std::ldexp(1.0, 4 - 9), 0.01);
  EXPECT_EQ(r.degeneracy_multiplicity, 32);

  const auto kept = level_spacing_stats(full, true);
  ASSERT_EQ(kept.spacings.size(), 15u);
  double mean = 0.0;
  for (double x : kept.spacings) mean += x;
  EXPECT_NEAR(mean / 15.0, 1.0, 1e-6);
}

TEST(LevelSpacing, HadamardParentIsTwoLevel) {
  const auto h = parent_hamiltonian(hadamard_layer(6));
  const auto &ev = h.eigenvalues();
  const auto r = level_spacing_stats(std::span<const double>(ev.data(), 64), false, 1e-8);
  EXPECT_NEAR(r.eigenvalues.front(), 0.0, 1e-9);
  EXPECT_NEAR(r.eigenvalues.back(), 0.5, 1e-9);
  int jumps = 0;
  for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) jumps += r.eigenvalues[i] - r.eigenvalues[i - 1] > 1e-6;
  EXPECT_EQ(jumps, 1);
  EXPECT_NEAR(r.zero_gap_fraction, 62.0 / 63.0, 1e-12);
}

TEST(WignerDyson, PdfNormalizationAndMean) {
  for (auto e : {WignerDyson::kGoe, WignerDyson::kGue}) {
    EXPECT_EQ(wigner_dyson_pdf(0.0, e), 0.0);
    EXPECT_NEAR(integrate([e](double s) { return wigner_dyson_pdf(s, e); }, 12.0), 1.0, 1e-6);
    EXPECT_NEAR(integrate([e](double s) { return s * wigner_dyson_pdf(s, e); }, 12.0), 1.0, 1e-6);
  }
  EXPECT_THROW(wigner_dyson_pdf(-0.1, WignerDyson::kGoe), DomainError);
}

TEST(WignerDyson, FrozenCdf) {
  const double s[] = {0.5, 1.0, 2.0};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(wigner_dyson_cdf(s[i], WignerDyson::kGoe), oracle::kGoeCdf[i], 1e-14);
    EXPECT_NEAR(wigner_dyson_cdf(s[i], WignerDyson::kGue), oracle::kGueCdf[i], 1e-14);
  }
  const std::vector<double> sample{1.4, 0.2, 2.3, 0.9, 0.5, 1.1};
  EXPECT_NEAR(ks_distance(sample, WignerDyson::kGoe), oracle::kKsGoeSample, 1e-14);
}

TEST(SpectralFormFactor, Examples) {
  const auto h = pauli_syk(3, RngSeed{2});
  EXPECT_NEAR(spectral_form_factor(h, 0.0, 0.0), 64.0, 1e-12);
  const std::vector<double> one{0.3};
  EXPECT_NEAR(spectral_form_factor(one, 1.5, 7.0), std::exp(-2.0 * 1.5 * 0.3), 1e-15);
  const std::vector<double> e{-0.3, 0.1, 0.25, 0.9};
  EXPECT_NEAR(spectral_form_factor(e, 0.5, 2.0), oracle::kSffFixed, 1e-13);
  EXPECT_THROW(spectral_form_factor(e, -1.0, 0.0), DomainError);
}

TEST(SpectralFormFactor, FactorizationExact) {
  Rng rng(RngSeed{3});
  for (int r = 0; r < 20; ++r) {
    const int k = 2 + static_cast<int>(rng.below(4));
    const int n = k + static_cast<int>(rng.below(5));
    const SystemShape s(n, k);
    const auto h = pauli_syk(k, RngSeed{4, static_cast<std::uint64_t>(r)});
    const double beta = rng.uniform() * 3.0, t = rng.uniform() * 20.0;
    EXPECT_EQ(rsed_sff(s, h, beta, t) / spectral_form_factor(h, beta, t), std::ldexp(1.0, 2 * (n - k)));
  }
}

TEST(SpectralFormFactor, MatchesDenseEmbeddedHamiltonian) {
  const SystemShape s(7, 3);
  const auto h = pauli_syk(3, RngSeed{5});
  const auto op = make_random_rsed(s, RngSeed{6}, SubUnitary::unchecked(h.matrix()));
  const auto dense = hermitian_eigen(dense_matrix(op));
  const std::vector<double> ev(dense.values.data(), dense.values.data() + dense.values.size());
  for (double beta : {0.0, 1.0}) {
    for (double t : {0.0, 2.5, 40.0}) {
      const double full = rsed_sff(s, h, beta, t);
      EXPECT_NEAR(spectral_form_factor(ev, beta, t) / full, 1.0, 1e-8);
    }
  }
}

TEST(EmbedSpectrum, Replication) {
  const std::vector<double> e{1.0, -1.0};
  EXPECT_EQ(embed_spectrum(SystemShape(3, 1), e), (std::vector<double>{-1, -1, -1, -1, 1, 1, 1, 1}));
  EXPECT_EQ(embed_spectrum(SystemShape(1, 1), e), (std::vector<double>{-1, 1}));
  EXPECT_THROW(embed_spectrum(SystemShape(3, 2), e), DomainError);
}

TEST(Histogram, DensityAndCsv) {
  const std::vector<double> x{0.1, 0.2, 0.6, 0.7, 0.8, 1.5};
  const auto h = histogram(x, 0.0, 1.0, 2);
  ASSERT_EQ(h.edges.size(), 3u);
  double mass = 0.0;
  for (std::size_t i = 0; i < h.density.size(); ++i) mass += h.density[i] * (h.edges[i + 1] - h.edges[i]);
  EXPECT_LE(mass, 1.0 + 1e-12);
  std::ostringstream out;
  write_histogram_csv(out, h);
  EXPECT_EQ(out.str().substr(0, 25), "bin_left,bin_right,densit");
  EXPECT_THROW(histogram(x, 1.0, 0.0, 2), DomainError);
}

}  // namespace
}  // namespace rsed
