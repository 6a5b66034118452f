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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsed/subsystem.hpp"
#include "rsedtools/config.hpp"

namespace rsedtools {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
  /// Shortest round-trip decimal form, so reruns are byte-identical.
  void write_csv(std::ostream &out) const;
};

struct ExperimentResult {
  std::string name;
  Table table;
  nlohmann::json summary = nlohmann::json::object();
  /// Unset when the experiment has no acceptance threshold.
  std::optional<bool> passed;
  /// Extra output files: file name -> contents.
  std::map<std::string, std::string> artifacts;
};

/// u for `spec` at time t: powers u1^t of hadamard / random_sign_hadamard,
/// e^{-iht} for pauli_syk, identity otherwise.
rsed::SubUnitary sub_unitary_at(const std::string &spec, int k, std::uint64_t seed, double t);

ExperimentResult run_otoc_trace(const ExperimentConfig &c);
ExperimentResult run_otoc_scaling(const ExperimentConfig &c);
ExperimentResult run_otoc_average(const ExperimentConfig &c);
ExperimentResult run_level_stats(const ExperimentConfig &c);
ExperimentResult run_sff(const ExperimentConfig &c);
ExperimentResult run_design_check(const ExperimentConfig &c);
ExperimentResult run_coherence(const ExperimentConfig &c);
ExperimentResult run_circuit_emit(const ExperimentConfig &c);

/// Dispatch on c.experiment.
ExperimentResult run_experiment(const ExperimentConfig &c);

/// Writes <dir>/<name>.csv, <dir>/<name>.json (config, seed, version, summary)
/// and the artifacts.
void write_result(const std::string &dir, const ExperimentConfig &c, const ExperimentResult &r);

}  // namespace rsedtools
