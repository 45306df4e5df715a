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

// Fiber cardinalities of Log and Arg restricted to a parametrized variety,
// found by multistart Levenberg-Marquardt on the 2k real unknowns.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amoeba/rational.hpp"
#include "amoeba/torus_maps.hpp"
#include "amoeba/variety.hpp"

namespace amoeba {

enum class Regularity { kRegular, kCritical, kUndetermined };

std::string to_string(Regularity r);
std::string to_string(MapKind map);
MapKind parse_map(std::string_view name);

struct FiberOptions {
  int starts = 0;  // 0 selects 64 * 2^k
  std::uint64_t seed = 1;
  double tolerance = 1e-10;      // max-norm residual accepted as a solution
  double dedup_radius = 1e-6;    // max-norm distance in parameter space
  double density_floor = 1e-9;
  double condition_floor = 1e-4;  // smallest / largest singular value
  double search_radius = 6.0;     // starts: log-modulus offset (annulus) or half-width (box)
  int max_iterations = 200;
};

struct FiberSolution {
  std::vector<Complex> t;
  double residual = 0.0;
  double density = 0.0;
  double conditioning = 0.0;  // sigma_min / sigma_max of the real Jacobian
};

struct FiberReport {
  MapKind map = MapKind::kLog;
  std::vector<double> target;
  std::vector<FiberSolution> solutions;
  int count = 0;
  Regularity regularity = Regularity::kUndetermined;
  int starts = 0;
  int converged = 0;   // starts that reached the tolerance inside the domain
  bool merged = false;  // nearby solutions were joined by a near-zero path
  std::string note;
};

// Target coordinates: log-moduli for kLog, angles for kArg (wrapped).
FiberReport fiber_count(const VarietySpec& spec, MapKind map, const std::vector<double>& target,
                        const FiberOptions& options);

// Image of a parameter point under map o rho.
std::vector<double> push_forward(const VarietySpec& spec, MapKind map, std::span<const Complex> t);

struct ProbeRecord {
  std::vector<Complex> t;
  int log_count = 0;
  int arg_count = 0;
  Regularity log_regularity = Regularity::kUndetermined;
  Regularity arg_regularity = Regularity::kUndetermined;
  bool arg_growth = false;  // the Arg count rose when the search was enlarged
};

struct PPEstimate {
  Rational p;
  Rational P;
  int min_log = 0, max_log = 0, min_arg = 0, max_arg = 0;
  int probes_used = 0;
  int probes_skipped = 0;
  bool arg_unbounded_suspected = false;
  std::vector<ProbeRecord> evidence;
};

struct PPOptions {
  int probes = 20;
  double probe_radius = 2.0;  // probe points are drawn from the domain clipped to this extent
  int growth_checks = 2;      // probes re-solved with doubled starts and a wider search
  FiberOptions fiber;
};

// p = min #Arg / max #Log and P = max #Arg / min #Log over regular probes.
PPEstimate estimate_p_P(const VarietySpec& spec, const PPOptions& options);

}  // namespace amoeba
