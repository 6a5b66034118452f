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
#include <string>
#include <vector>

#include "json.hpp"

namespace rsedtools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  /// How measured is compared with threshold: "<=", "<", ">=" or "==".
  std::string comparison = "<=";
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  /// Test fixture: negate the closed-form f-average inside criterion 1.
  bool inject_closed_form_sign_fault = false;
  /// Criteria to run (1-based ids); empty runs all 14.
  std::vector<int> only;
};

inline constexpr int kCriterionCount = 14;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options = {});
CriterionResult run_criterion(int id, const AcceptanceOptions &options = {});

/// One line, "[PASS] 01 <name>: measured=... (<= threshold) ...".
std::string format_line(const CriterionResult &r);
nlohmann::json report_json(const std::vector<CriterionResult> &results);

}  // namespace rsedtools
