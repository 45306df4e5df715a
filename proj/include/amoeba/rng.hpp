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

#include <cstdint>

namespace amoeba {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the stream for sample `index` under `seed` is a
// pure function of (seed, index, draw number), so any partition of the
// sample range across threads reproduces the serial sequence exactly.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index)
      : key_(mix64(seed ^ 0x6A09E667F3BCC909ULL)), counter_(index) {}

  std::uint64_t next_u64() {
    const std::uint64_t x = key_ + counter_ * 0x9E3779B97F4A7C15ULL + (lane_++) * 0xD1B54A32D192ED03ULL;
    return mix64(mix64(x) ^ key_);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  std::uint64_t lane_ = 0;
};

}  // namespace amoeba
