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

#include <iosfwd>
#include <span>
#include <vector>

#include "rsed/bitcore.hpp"
#include "rsed/subsystem.hpp"

namespace rsed {

struct Histogram {
  std::vector<double> edges;    ///< bins + 1 edges
  std::vector<double> density;  ///< normalized so that sum density * width = 1
};

Histogram histogram(std::span<const double> samples, double lo, double hi, int bins);
/// CSV with header bin_left,bin_right,density.
void write_histogram_csv(std::ostream &out, const Histogram &h);

struct SpectrumReport {
  std::vector<double> eigenvalues;  ///< ascending
  std::vector<double> spacings;     ///< unit-mean nearest-neighbour gaps
  /// Largest number of eigenvalues sharing one value (within tolerance).
  int degeneracy_multiplicity = 1;
  /// Fraction of raw gaps below tolerance.
  double zero_gap_fraction = 0.0;
  double tolerance = 0.0;
  Histogram histogram;
};

/// tolerance < 0 selects 1e-10 times the spectral range.
SpectrumReport level_spacing_stats(std::span<const double> evals, bool exclude_degenerate, double tolerance = -1.0,
                                   int bins = 40, double max_spacing = 4.0);

enum class WignerDyson { kGoe, kGue };

double wigner_dyson_pdf(double s, WignerDyson ensemble);
double wigner_dyson_cdf(double s, WignerDyson ensemble);
/// sup_s |F_empirical(s) - F_surmise(s)|.
double ks_distance(std::span<const double> samples, WignerDyson ensemble);

/// |sum_m e^{-(beta + i t) e_m}|^2 over the subsystem spectrum.
double spectral_form_factor(std::span<const double> evals, double beta, double t);
double spectral_form_factor(const SubHamiltonian &h, double beta, double t);
/// Embedded-Hamiltonian form factor, 4^{n-k} R_2S.
double rsed_sff(const SystemShape &shape, const SubHamiltonian &h, double beta, double t);

/// Each subsystem eigenvalue repeated 2^{n-k} times, ascending.
std::vector<double> embed_spectrum(const SystemShape &shape, std::span<const double> evals_sub);

}  // namespace rsed
