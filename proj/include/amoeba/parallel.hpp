// Copyright 2026 The Amoebavol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace amoeba {

inline constexpr std::uint64_t kBatchSize = 8192;

// Splits [0, samples) into fixed batches of kBatchSize and runs
// `fn(begin, end)` on each under OpenMP. Results are returned in batch order,
// so a sequential fold over them does not depend on the thread schedule.
template <class Fn>
auto run_batches(std::uint64_t samples, Fn&& fn) {
  using Result = decltype(fn(std::uint64_t{0}, std::uint64_t{0}));
  const auto batches = static_cast<std::int64_t>((samples + kBatchSize - 1) / kBatchSize);
  std::vector<Result> results(static_cast<std::size_t>(batches));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < batches; ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBatchSize;
    const std::uint64_t end = std::min(samples, begin + kBatchSize);
    results[static_cast<std::size_t>(b)] = fn(begin, end);
  }
  return results;
}

// Caps the OpenMP worker count for all subsequent kernels; 0 leaves the default.
void set_worker_threads(int threads);
int worker_threads();

}  // namespace amoeba
