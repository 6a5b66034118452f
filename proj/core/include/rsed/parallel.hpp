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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace rsed {

/// Process-wide worker count used by the data-parallel loops (seed blocks,
/// probes, ensemble realizations). 0 or 1 means run inline.
void set_thread_count(int threads);
int thread_count() noexcept;

/// Runs body(i) for i in [begin, end) split into contiguous chunks. Bodies
/// must only write to disjoint state.
void parallel_for(std::uint64_t begin, std::uint64_t end, const std::function<void(std::uint64_t)> &body);

/// Pairwise (tree) summation. The tree depends only on values.size(), so the
/// result is independent of how the values were produced.
double pairwise_sum(std::span<const double> values);

}  // namespace rsed
