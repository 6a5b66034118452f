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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsed/parallel.hpp"
#include "rsed/version.hpp"
#include "rsedtools/acceptance.hpp"
#include "rsedtools/config.hpp"
#include "rsedtools/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  int threads = 0;
};

void add_common(CLI::App *sub, CommonFlags &flags) {
  sub->add_option("--config", flags.config, "JSON config document")->check(CLI::ExistingFile);
  sub->add_option("--seed", flags.seed, "Master seed (overrides the config)");
  sub->add_option("--out", flags.out, "Output directory (overrides the config)");
  sub->add_option("--threads", flags.threads, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
}

int run_driver(const std::string &name, const CommonFlags &flags) {
  rsedtools::ExperimentConfig config;
  if (!flags.config.empty()) {
    config = rsedtools::load_config(flags.config);
    if (!config.experiment.empty() && config.experiment != name) {
      throw rsedtools::ConfigError("config is for '" + config.experiment + "', not '" + name + "'");
    }
  } else {
    config = rsedtools::ExperimentConfig::from_json(nlohmann::json{{"experiment", name}});
  }
  config.experiment = name;
  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out = *flags.out;

  const auto result = rsedtools::run_experiment(config);
  rsedtools::write_result(config.out, config, result);
  std::cout << name << ": wrote " << (std::filesystem::path(config.out) / (result.name + ".csv")).string() << '\n';
  if (!result.summary.empty()) std::cout << result.summary.dump(2) << '\n';
  if (result.passed.has_value()) std::cout << (*result.passed ? "summary: PASS" : "summary: FAIL") << '\n';
  return kExitOk;
}

int run_verify(const CommonFlags &flags, bool inject_fault, const std::vector<int> &only) {
  rsedtools::AcceptanceOptions options;
  options.inject_closed_form_sign_fault = inject_fault;
  options.only = only;
  std::vector<rsedtools::CriterionResult> results;
  for (int id = 1; id <= rsedtools::kCriterionCount; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    results.push_back(rsedtools::run_criterion(id, options));
    std::cout << rsedtools::format_line(results.back()) << std::endl;
  }
  auto report = rsedtools::report_json(results);
  report["version"] = rsed::version();
  const std::string dir = flags.out.value_or("out");
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / "verify.json";
  std::ofstream(path) << report.dump(2) << '\n';
  const int failed = report["failed"].get<int>();
  std::cout << (failed == 0 ? "verify: all criteria passed" : "verify: " + std::to_string(failed) + " failed")
            << " (report " << path.string() << ")\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"rsedkit: random subsystem embedded dynamics experiments"};
  app.set_version_flag("--version", std::string(rsed::version()));
  app.require_subcommand(1);

  CommonFlags flags;
  const std::vector<std::pair<std::string, std::string>> drivers{
      {"otoc-trace", "OTOC time traces per realization and ensemble mean"},
      {"otoc-scaling", "f-averaged OTOC against n with the k rule"},
      {"otoc-average", "ensemble-averaged OTOC against the closed form"},
      {"level-stats", "parent Hamiltonian level spacing statistics"},
      {"sff", "spectral form factor and its 4^{n-k} factorization"},
      {"design-check", "t-design variance and element magnitude checks"},
      {"coherence", "coherence of subset-phase states"},
      {"circuit-emit", "synthesize a gate-level circuit and manifest"},
  };
  for (const auto &[name, help] : drivers) add_common(app.add_subcommand(name, help), flags);

  auto *verify = app.add_subcommand("verify", "run the acceptance suite and write verify.json");
  add_common(verify, flags);
  bool inject_fault = false;
  std::vector<int> only;
  verify->add_flag("--inject-fault", inject_fault, "negate the closed-form f-average (fixture)");
  verify->add_option("--only", only, "criteria ids to run")->check(CLI::Range(1, rsedtools::kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (flags.threads > 0) rsed::set_thread_count(flags.threads);
    if (verify->parsed()) return run_verify(flags, inject_fault, only);
    for (const auto &[name, help] : drivers) {
      if (app.got_subcommand(name)) return run_driver(name, flags);
    }
  } catch (const rsedtools::ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
