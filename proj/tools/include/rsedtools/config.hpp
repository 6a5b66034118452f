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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace rsedtools {

/// Thrown for malformed or inconsistent experiment configs (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string experiment;
  int n = 8;
  int k = 4;
  /// "" (use k) or "log2sq" for k = ceil(log2(n)^2).
  std::string k_rule;
  std::vector<int> n_values;
  /// identity | hadamard | random_sign_hadamard | pauli_syk
  std::string u_spec = "random_sign_hadamard";
  std::vector<double> times{1.0, 2.0, 3.0, 4.0};
  int ensemble = 1;
  std::uint64_t seed = 1;
  /// exact | sampled | stochastic
  std::string estimator = "exact";
  std::uint64_t num_seeds = 256;
  int probes = 256;
  std::string v = "Z0";
  std::string w;  ///< defaults to Z_{n-1}
  std::vector<double> betas{0.0};
  int copies = 2;
  double epsilon = 0.5;
  int power = 4;
  int bins = 40;
  std::string out = "out";

  /// The document as given (before defaults), echoed into output metadata.
  nlohmann::json source = nlohmann::json::object();

  static ExperimentConfig from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;

  /// Resolved k for a given n (k_rule applied).
  int k_for(int n_value) const;
  std::string w_or_default(int n_value) const;
};

int k_log2sq(int n);

ExperimentConfig load_config(const std::string &path);

}  // namespace rsedtools
