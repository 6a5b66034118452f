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

#include "rsedtools/experiments.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rsed/circuits.hpp"
#include "rsed/errors.hpp"
#include "rsed/otoc.hpp"
#include "rsed/prs.hpp"
#include "rsed/rsed.hpp"
#include "rsed/spectra.hpp"
#include "rsed/version.hpp"

namespace rsedtools {

using rsed::RngSeed;
using rsed::SubUnitary;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Per-realization seeds for the sub-unitary and for (p, f).
std::uint64_t u_seed(const ExperimentConfig &c, int r) { return rsed::mix64(c.seed ^ rsed::mix64(0x75ULL + r)); }
RngSeed pf_seed(const ExperimentConfig &c, int r) { return RngSeed{c.seed, 0x7066ULL}.derive(static_cast<std::uint64_t>(r)); }

bool is_single_z(const rsed::PauliString &s) {
  return s.factors().size() == 1 && s.factors()[0].axis == rsed::PauliAxis::kZ;
}

rsed::OtocEstimate evaluate_otoc(const ExperimentConfig &c, const rsed::RsedOperator &op, const rsed::PauliString &v,
                                 const rsed::PauliString &w, int r) {
  if (is_single_z(v) && is_single_z(w) && c.estimator != "stochastic") {
    const int i = v.factors()[0].site;
    const int j = w.factors()[0].site;
    if (c.estimator == "sampled") return rsed::otoc_zz_sampled(op, i, j, c.num_seeds, pf_seed(c, r).derive(99));
    return rsed::otoc_zz_exact(op, i, j);
  }
  rsed::OtocOptions options;
  options.mode = c.estimator == "stochastic" ? rsed::OtocMode::kStochastic : rsed::OtocMode::kExact;
  options.probes = c.probes;
  options.seed = pf_seed(c, r).derive(98);
  return rsed::otoc_pauli(op, v, w, options);
}

double period_mismatch(const std::vector<double> &times, const std::vector<double> &values) {
  double worst = kNaN;
  for (std::size_t a = 0; a < times.size(); ++a) {
    for (std::size_t b = 0; b < times.size(); ++b) {
      if (std::abs(times[b] - times[a] - 1.0) < 1e-12) {
        const double d = std::abs(values[b] - values[a]);
        worst = std::isnan(worst) ? d : std::max(worst, d);
      }
    }
  }
  return worst;
}

std::vector<int> n_list(const ExperimentConfig &c) { return c.n_values.empty() ? std::vector<int>{c.n} : c.n_values; }

}  // namespace

void Table::add(std::vector<double> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add: row width does not match columns");
  rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream &out) const {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

SubUnitary sub_unitary_at(const std::string &spec, int k, std::uint64_t seed, double t) {
  if (spec == "hadamard") return rsed::unitary_power(rsed::hadamard_layer(k), t);
  if (spec == "random_sign_hadamard") return rsed::unitary_power(rsed::random_sign_hadamard(k, RngSeed{seed}), t);
  if (spec == "pauli_syk") return rsed::evolve(rsed::pauli_syk(k, RngSeed{seed}), t);
  if (spec == "identity") {
    const auto dim = static_cast<Eigen::Index>(1) << k;
    return SubUnitary::unchecked(rsed::Matrix::Identity(dim, dim));
  }
  throw ConfigError("unknown u_spec '" + spec + "'");
}

ExperimentResult run_otoc_trace(const ExperimentConfig &c) {
  const rsed::SystemShape shape(c.n, c.k_for(c.n));
  const auto v = rsed::PauliString::parse(c.v);
  const auto w = rsed::PauliString::parse(c.w_or_default(c.n));

  ExperimentResult res;
  res.name = "otoc_trace";
  res.table.columns = {"t", "C_mean"};
  for (int r = 0; r < c.ensemble; ++r) {
    res.table.columns.push_back("C_" + std::to_string(r));
    res.table.columns.push_back("se_" + std::to_string(r));
  }

  std::vector<rsed::RsedOperator> ops;
  for (int r = 0; r < c.ensemble; ++r) {
    ops.push_back(rsed::make_random_rsed(shape, pf_seed(c, r), sub_unitary_at("identity", shape.k(), 0, 0.0)));
  }
  std::vector<double> means;
  for (double t : c.times) {
    std::vector<double> row{t, 0.0};
    double sum = 0.0;
    for (int r = 0; r < c.ensemble; ++r) {
      const auto op = ops[static_cast<std::size_t>(r)].with_sub(sub_unitary_at(c.u_spec, shape.k(), u_seed(c, r), t));
      const auto est = evaluate_otoc(c, op, v, w, r);
      const double cvw = rsed::poisson_bracket(est);
      sum += cvw;
      row.push_back(cvw);
      row.push_back(est.std_error);
    }
    row[1] = sum / c.ensemble;
    means.push_back(row[1]);
    res.table.add(std::move(row));
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    if (c.times[i] >= 1.0) worst = std::max(worst, std::abs(1.0 - means[i]));
  }
  const double bound = std::ldexp(1.0, 4 - shape.k());
  res.summary["max_abs_one_minus_C_t_ge_1"] = worst;
  res.summary["saturation_bound"] = bound;
  const double period = period_mismatch(c.times, means);
  res.summary["period_mismatch"] = std::isnan(period) ? nlohmann::json(nullptr) : nlohmann::json(period);
  if (c.u_spec == "random_sign_hadamard") res.passed = worst <= bound;
  if (c.u_spec == "hadamard" && !std::isnan(period)) res.passed = period <= 1e-9;
  if (c.u_spec == "identity") {
    double m = 0.0;
    for (double x : means) m = std::max(m, std::abs(x));
    res.passed = m <= 1e-12;
  }
  return res;
}

ExperimentResult run_otoc_scaling(const ExperimentConfig &c) {
  ExperimentResult res;
  res.name = "otoc_scaling";
  res.table.columns = {"n", "k", "log_n", "abs_O", "log_abs_O"};
  std::vector<double> xs, ys;
  double max_hadamard_err = 0.0;
  for (int n : n_list(c)) {
    const int k = c.k_for(n);
    if (k > rsed::kMaxSubsystemQubits) throw rsed::CapacityError("otoc-scaling: k=" + std::to_string(k) + " exceeds 12");
    double sum = 0.0;
    for (int r = 0; r < c.ensemble; ++r) {
      if (c.u_spec == "random_sign_hadamard" || c.u_spec == "hadamard") {
        const auto sh = c.u_spec == "hadamard" ? rsed::SignedHadamard::plain(k)
                                               : rsed::SignedHadamard::random(k, RngSeed{u_seed(c, r)});
        sum += rsed::otoc_zz_f_average(sh, c.power);
      } else {
        sum += rsed::otoc_zz_f_average(sub_unitary_at(c.u_spec, k, u_seed(c, r), c.power));
      }
    }
    const double o = std::abs(sum / c.ensemble);
    if (c.u_spec == "hadamard") {
      // H^2 = 1, so only odd powers scramble.
      const double expected = c.power % 2 == 0 ? 1.0 : std::ldexp(1.0, -k);
      max_hadamard_err = std::max(max_hadamard_err, std::abs(o - expected));
    }
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(o));
    res.table.add({static_cast<double>(n), static_cast<double>(k), xs.back(), o, ys.back()});
  }

  double slope = kNaN;
  if (xs.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    slope = sxy / sxx;
  }
  std::vector<double> second;
  for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
    const double s0 = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    const double s1 = (ys[i + 2] - ys[i + 1]) / (xs[i + 2] - xs[i + 1]);
    second.push_back(s1 - s0);
  }
  bool concave = !second.empty();
  for (double d : second) concave = concave && d < 0.0;
  res.summary["power"] = c.power;
  res.summary["fitted_slope"] = slope;
  res.summary["second_differences"] = second;
  res.summary["concave"] = concave;
  if (c.u_spec == "random_sign_hadamard") res.passed = concave && slope < -2.0;
  if (c.u_spec == "hadamard") {
    res.summary["max_abs_error_vs_2^-k"] = max_hadamard_err;
    res.passed = max_hadamard_err <= 1e-12;
  }
  return res;
}

ExperimentResult run_otoc_average(const ExperimentConfig &c) {
  const int k = c.k_for(c.n);
  ExperimentResult res;
  res.name = "otoc_average";
  res.table.columns = {"t", "Ef_O", "Ef_C"};
  std::vector<double> cs;
  for (double t : c.times) {
    double sum = 0.0;
    for (int r = 0; r < c.ensemble; ++r) sum += rsed::otoc_zz_f_average(sub_unitary_at(c.u_spec, k, u_seed(c, r), t));
    const double o = sum / c.ensemble;
    cs.push_back(1.0 - o);
    res.table.add({t, o, 1.0 - o});
  }
  const double period = period_mismatch(c.times, cs);
  res.summary["period_mismatch"] = std::isnan(period) ? nlohmann::json(nullptr) : nlohmann::json(period);
  if (c.u_spec == "hadamard" && !std::isnan(period)) res.passed = period <= 1e-9;
  if (c.u_spec == "pauli_syk" && c.ensemble == 1) {
    const double slope = rsed::early_time_slope(rsed::pauli_syk(k, RngSeed{u_seed(c, 0)}));
    std::size_t at = 0;
    for (std::size_t i = 0; i < c.times.size(); ++i) {
      if (c.times[i] != 0.0 && (c.times[at] == 0.0 || std::abs(c.times[i]) < std::abs(c.times[at]))) at = i;
    }
    const double t0 = c.times[at];
    const double fitted = t0 != 0.0 ? cs[at] / (t0 * t0) : kNaN;
    res.summary["early_time_slope"] = slope;
    res.summary["fitted_coefficient"] = fitted;
    res.summary["fit_time"] = t0;
    if (!std::isnan(fitted) && std::abs(t0) <= 1e-2) res.passed = std::abs(fitted / slope - 1.0) <= 0.01;
  }
  return res;
}

ExperimentResult run_level_stats(const ExperimentConfig &c) {
  const int k = c.k_for(c.n);
  std::vector<double> pooled;
  double zero_gap = 0.0;
  int max_mult = 1;
  for (int r = 0; r < c.ensemble; ++r) {
    const SubUnitary u = sub_unitary_at(c.u_spec, k, u_seed(c, r), 1.0);
    const auto h = rsed::parent_hamiltonian(u);
    const auto &e = h.eigenvalues();
    const auto report = rsed::level_spacing_stats(std::span<const double>(e.data(), static_cast<std::size_t>(e.size())),
                                                  true, -1.0, c.bins);
    pooled.insert(pooled.end(), report.spacings.begin(), report.spacings.end());
    zero_gap += report.zero_gap_fraction / c.ensemble;
    max_mult = std::max(max_mult, report.degeneracy_multiplicity);
  }
  const auto hist = rsed::histogram(pooled, 0.0, 4.0, c.bins);

  ExperimentResult res;
  res.name = "level_stats";
  res.table.columns = {"bin_left", "bin_right", "density", "goe_pdf", "gue_pdf"};
  for (std::size_t i = 0; i < hist.density.size(); ++i) {
    const double mid = 0.5 * (hist.edges[i] + hist.edges[i + 1]);
    res.table.add({hist.edges[i], hist.edges[i + 1], hist.density[i],
                   rsed::wigner_dyson_pdf(mid, rsed::WignerDyson::kGoe),
                   rsed::wigner_dyson_pdf(mid, rsed::WignerDyson::kGue)});
  }
  std::ostringstream hcsv;
  rsed::write_histogram_csv(hcsv, hist);
  res.artifacts["level_stats_histogram.csv"] = hcsv.str();

  const double ks_goe = pooled.empty() ? kNaN : rsed::ks_distance(pooled, rsed::WignerDyson::kGoe);
  const double ks_gue = pooled.empty() ? kNaN : rsed::ks_distance(pooled, rsed::WignerDyson::kGue);
  res.summary["k"] = k;
  res.summary["spacings"] = pooled.size();
  res.summary["ks_goe"] = ks_goe;
  res.summary["ks_gue"] = ks_gue;
  res.summary["mean_zero_gap_fraction"] = zero_gap;
  res.summary["max_degeneracy_multiplicity"] = max_mult;
  if (c.u_spec == "random_sign_hadamard") res.passed = ks_goe <= 0.08;
  return res;
}

ExperimentResult run_sff(const ExperimentConfig &c) {
  const rsed::SystemShape shape(c.n, c.k_for(c.n));
  const int k = shape.k();
  const rsed::SubHamiltonian h = c.u_spec == "pauli_syk"
                                     ? rsed::pauli_syk(k, RngSeed{u_seed(c, 0)})
                                     : rsed::parent_hamiltonian(sub_unitary_at(c.u_spec, k, u_seed(c, 0), 1.0));
  std::vector<double> dense_evals;
  const bool dense = shape.n() <= 8;
  if (dense) {
    const auto op = rsed::make_random_rsed(shape, pf_seed(c, 0), SubUnitary::unchecked(h.matrix()));
    const rsed::Matrix big = rsed::dense_matrix(op);
    const auto eig = rsed::hermitian_eigen(big);
    dense_evals.assign(eig.values.data(), eig.values.data() + eig.values.size());
  }
  const double factor = std::ldexp(1.0, 2 * shape.seed_bits());

  ExperimentResult res;
  res.name = "sff";
  res.table.columns = {"beta", "t", "R2s", "rsed_sff", "ratio", "dense_sff", "dense_rel_err"};
  bool ratio_exact = true;
  double worst = 0.0;
  for (double beta : c.betas) {
    for (double t : c.times) {
      const double r2 = rsed::spectral_form_factor(h, beta, t);
      const double full = rsed::rsed_sff(shape, h, beta, t);
      const double ratio = full / r2;
      ratio_exact = ratio_exact && ratio == factor;
      double d = kNaN, rel = kNaN;
      if (dense) {
        d = rsed::spectral_form_factor(dense_evals, beta, t);
        rel = std::abs(d - full) / std::max(std::abs(full), 1e-300);
        worst = std::max(worst, rel);
      }
      res.table.add({beta, t, r2, full, ratio, d, rel});
    }
  }
  res.summary["expected_ratio"] = factor;
  res.summary["ratio_exact"] = ratio_exact;
  res.summary["max_dense_rel_err"] = dense ? nlohmann::json(worst) : nlohmann::json(nullptr);
  res.passed = ratio_exact && (!dense || worst <= 1e-8);
  return res;
}

ExperimentResult run_design_check(const ExperimentConfig &c) {
  const int k = c.k_for(c.n);
  const double kdim = std::ldexp(1.0, k);
  ExperimentResult res;
  res.name = "design_check";
  res.table.columns = {"realization", "Ybar", "degenerate", "exceed_fraction", "element_pass"};
  int element_passes = 0;
  double max_y = 0.0;
  for (int r = 0; r < c.ensemble; ++r) {
    const SubUnitary u = sub_unitary_at(c.u_spec, k, u_seed(c, r), c.power);
    double y = kNaN;
    double degenerate = 0.0;
    if (k <= 6 && c.copies <= 3) {
      const auto dv = rsed::design_variance_condition(u.matrix(), c.copies, 0);
      y = dv.value;
      degenerate = dv.degenerate ? 1.0 : 0.0;
      if (!dv.degenerate) max_y = std::max(max_y, y);
    }
    const auto ec = rsed::element_condition_check(u.matrix(), c.epsilon);
    element_passes += ec.passed ? 1 : 0;
    res.table.add({static_cast<double>(r), y, degenerate, ec.exceed_fraction, ec.passed ? 1.0 : 0.0});
  }
  res.summary["k"] = k;
  res.summary["copies"] = c.copies;
  res.summary["epsilon"] = c.epsilon;
  res.summary["max_Ybar"] = max_y;
  res.summary["Ybar_threshold"] = 1.0 / std::sqrt(kdim);
  res.summary["element_pass_fraction"] = static_cast<double>(element_passes) / c.ensemble;
  if (c.u_spec == "hadamard") res.passed = max_y <= 1e-12 && element_passes == c.ensemble;
  return res;
}

ExperimentResult run_coherence(const ExperimentConfig &c) {
  const rsed::SystemShape shape(c.n, c.k_for(c.n));
  const double ln2 = std::numbers::ln2;
  const double target = shape.k() * ln2;
  const double enhanced = (1.0 - c.epsilon) / 2.0 * shape.n() * ln2;
  std::vector<int> all_sites(static_cast<std::size_t>(shape.n()));
  for (int s = 0; s < shape.n(); ++s) all_sites[static_cast<std::size_t>(s)] = s;

  ExperimentResult res;
  res.name = "coherence";
  res.table.columns = {"trial", "coherence_subset", "coherence_after_hadamard", "k_log2", "enhanced_threshold"};
  double worst = 0.0;
  int enhanced_count = 0;
  for (int r = 0; r < c.ensemble; ++r) {
    const RngSeed s = pf_seed(c, r);
    const auto p = rsed::sample_permutation(shape, s.derive(1));
    const auto f = rsed::sample_sign_function(shape, s.derive(2));
    rsed::Rng rng(s.derive(3));
    const std::uint64_t a = rng.below(shape.seed_count());
    const auto psi = rsed::subset_phase_state(p, f, a);
    const double c1 = rsed::coherence_rel_entropy(psi);
    const double c2 = rsed::coherence_rel_entropy(rsed::append_layer(psi, rsed::HadamardLayer{all_sites}));
    worst = std::max(worst, std::abs(c1 - target));
    enhanced_count += c2 >= enhanced ? 1 : 0;
    res.table.add({static_cast<double>(r), c1, c2, target, enhanced});
  }
  const double fraction = static_cast<double>(enhanced_count) / c.ensemble;
  res.summary["max_abs_error_vs_k_log2"] = worst;
  res.summary["enhanced_fraction"] = fraction;
  res.passed = worst <= 1e-9 && fraction >= 0.95;
  return res;
}

ExperimentResult run_circuit_emit(const ExperimentConfig &c) {
  const rsed::SystemShape shape(c.n, c.k_for(c.n));
  rsed::USpec spec;
  if (c.u_spec == "identity") spec = rsed::USpec::identity();
  else if (c.u_spec == "hadamard") spec = rsed::USpec::hadamard();
  else if (c.u_spec == "random_sign_hadamard") spec = rsed::USpec::random_sign_hadamard(u_seed(c, 0));
  else spec = rsed::USpec::explicit_matrix(sub_unitary_at(c.u_spec, shape.k(), u_seed(c, 0), 1.0));
  const std::uint64_t perm_seed = rsed::mix64(c.seed ^ 0x1111ULL);
  const std::uint64_t sign_seed = rsed::mix64(c.seed ^ 0x2222ULL);
  const rsed::SynthesisOptions options;
  const auto synth = rsed::synthesize_rsed_circuit(shape, spec, perm_seed, sign_seed, options);

  ExperimentResult res;
  res.name = "circuit";
  res.artifacts["circuit.rsedcirc"] = rsed::serialize(synth.circuit);
  res.artifacts["circuit_manifest.json"] =
      rsed::manifest_to_json(rsed::make_manifest(shape, spec, perm_seed, sign_seed, options, synth.circuit)) + "\n";
  res.table.columns = {"n", "k", "ops", "dense_max_error"};
  double err = kNaN;
  if (shape.n() <= rsed::RsedOperator::kMaxDenseQubits) {
    err = rsed::max_abs(rsed::simulate_circuit_dense(synth.circuit, synth.registry) - rsed::dense_matrix(synth.op));
    res.passed = err <= 1e-12;
  }
  res.table.add({static_cast<double>(shape.n()), static_cast<double>(shape.k()),
                 static_cast<double>(synth.circuit.size()), err});
  res.summary["gate_counts"] = synth.circuit.gate_counts();
  res.summary["dense_max_error"] = std::isnan(err) ? nlohmann::json(nullptr) : nlohmann::json(err);
  return res;
}

ExperimentResult run_experiment(const ExperimentConfig &c) {
  if (c.experiment == "otoc-trace") return run_otoc_trace(c);
  if (c.experiment == "otoc-scaling") return run_otoc_scaling(c);
  if (c.experiment == "otoc-average") return run_otoc_average(c);
  if (c.experiment == "level-stats") return run_level_stats(c);
  if (c.experiment == "sff") return run_sff(c);
  if (c.experiment == "design-check") return run_design_check(c);
  if (c.experiment == "coherence") return run_coherence(c);
  if (c.experiment == "circuit-emit") return run_circuit_emit(c);
  throw ConfigError("unknown experiment '" + c.experiment + "'");
}

void write_result(const std::string &dir, const ExperimentConfig &c, const ExperimentResult &r) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  {
    std::ofstream csv(fs::path(dir) / (r.name + ".csv"));
    r.table.write_csv(csv);
  }
  nlohmann::json meta;
  meta["experiment"] = c.experiment;
  meta["config"] = c.to_json();
  meta["config_source"] = c.source;
  meta["seed"] = c.seed;
  meta["version"] = rsed::version();
  meta["summary"] = r.summary;
  meta["passed"] = r.passed ? nlohmann::json(*r.passed) : nlohmann::json(nullptr);
  {
    std::ofstream js(fs::path(dir) / (r.name + ".json"));
    js << meta.dump(2) << '\n';
  }
  for (const auto &[name, content] : r.artifacts) {
    std::ofstream out(fs::path(dir) / name);
    out << content;
  }
}

}  // namespace rsedtools
