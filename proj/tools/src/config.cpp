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

#include "rsedtools/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace rsedtools {

namespace {

const std::set<std::string> kKnownKeys = {
    "experiment", "n",      "k",        "k_rule", "n_values", "u_spec", "times",   "ensemble", "seed", "estimator",
    "num_seeds",  "probes", "v",        "w",      "betas",    "copies", "epsilon", "power",    "bins", "out"};

const std::set<std::string> kUSpecs = {"identity", "hadamard", "random_sign_hadamard", "pauli_syk"};
const std::set<std::string> kEstimators = {"exact", "sampled", "stochastic"};

template <typename T>
void read(const nlohmann::json &j, const char *key, T &dst) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

int k_log2sq(int n) {
  if (n < 2) throw ConfigError("k_rule log2sq needs n >= 2");
  const double l = std::log2(static_cast<double>(n));
  return static_cast<int>(std::ceil(l * l - 1e-12));
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json &j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto &[key, value] : j.items()) {
    if (!kKnownKeys.contains(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  ExperimentConfig c;
  c.source = j;
  read(j, "experiment", c.experiment);
  read(j, "n", c.n);
  read(j, "k", c.k);
  read(j, "k_rule", c.k_rule);
  read(j, "n_values", c.n_values);
  read(j, "u_spec", c.u_spec);
  read(j, "times", c.times);
  read(j, "ensemble", c.ensemble);
  read(j, "seed", c.seed);
  read(j, "estimator", c.estimator);
  read(j, "num_seeds", c.num_seeds);
  read(j, "probes", c.probes);
  read(j, "v", c.v);
  read(j, "w", c.w);
  read(j, "betas", c.betas);
  read(j, "copies", c.copies);
  read(j, "epsilon", c.epsilon);
  read(j, "power", c.power);
  read(j, "bins", c.bins);
  read(j, "out", c.out);

  if (c.n < 1 || c.n > 30) throw ConfigError("n must lie in [1, 30]");
  if (!c.k_rule.empty() && c.k_rule != "log2sq") throw ConfigError("k_rule must be empty or 'log2sq'");
  if (c.k_rule.empty() && (c.k < 1 || c.k > 12)) throw ConfigError("k must lie in [1, 12]");
  if (!kUSpecs.contains(c.u_spec)) throw ConfigError("unknown u_spec '" + c.u_spec + "'");
  if (!kEstimators.contains(c.estimator)) throw ConfigError("unknown estimator '" + c.estimator + "'");
  if (c.times.empty()) throw ConfigError("times must not be empty");
  if (c.ensemble < 1) throw ConfigError("ensemble must be >= 1");
  if (c.probes < 2) throw ConfigError("probes must be >= 2");
  if (c.num_seeds < 2) throw ConfigError("num_seeds must be >= 2");
  if (c.copies < 1) throw ConfigError("copies must be >= 1");
  if (c.bins < 1) throw ConfigError("bins must be >= 1");
  for (double b : c.betas) {
    if (!(b >= 0.0)) throw ConfigError("betas must be >= 0");
  }
  return c;
}

nlohmann::json ExperimentConfig::to_json() const {
  return {{"experiment", experiment}, {"n", n},
          {"k", k},                   {"k_rule", k_rule},
          {"n_values", n_values},     {"u_spec", u_spec},
          {"times", times},           {"ensemble", ensemble},
          {"seed", seed},             {"estimator", estimator},
          {"num_seeds", num_seeds},   {"probes", probes},
          {"v", v},                   {"w", w},
          {"betas", betas},           {"copies", copies},
          {"epsilon", epsilon},       {"power", power},
          {"bins", bins},             {"out", out}};
}

int ExperimentConfig::k_for(int n_value) const { return k_rule == "log2sq" ? k_log2sq(n_value) : k; }

std::string ExperimentConfig::w_or_default(int n_value) const {
  return w.empty() ? "Z" + std::to_string(n_value - 1) : w;
}

ExperimentConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  try {
    return ExperimentConfig::from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error &e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
}

}  // namespace rsedtools
