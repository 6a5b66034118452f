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

#include <iostream>

#include "rsedtools/acceptance.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= rsedtools::kCriterionCount; ++id) {
    const auto r = rsedtools::run_criterion(id);
    std::cout << rsedtools::format_line(r) << std::endl;
    failed += r.passed ? 0 : 1;
  }
  std::cout << (rsedtools::kCriterionCount - failed) << '/' << rsedtools::kCriterionCount << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
