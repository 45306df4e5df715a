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

#include "amoeba/variety.hpp"

namespace amoeba {

struct JacobianCheckReport {
  std::uint64_t samples = 0;
  std::uint64_t resampled = 0;
  // max |J_log - J_arg| / (1 + J_log) over samples, J the generalized Jacobian
  double max_relative_deviation = 0.0;
  // same, per 2k x 2k minor
  double max_minor_deviation = 0.0;
  double max_density = 0.0;
};

// Samples parameter points uniformly from the spec domain (points that are
// excluded or fail to evaluate are redrawn) and compares the Log and Arg
// Jacobians. Requires 2k <= n.
JacobianCheckReport check_jacobian_identity(const VarietySpec& spec, std::uint64_t samples,
                                            std::uint64_t seed);

}  // namespace amoeba
