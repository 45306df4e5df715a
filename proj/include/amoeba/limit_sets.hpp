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

// Logarithmic limit sets by far-field direction clustering, plus the two
// arithmetic classifiers used on limit directions.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "amoeba/variety.hpp"

namespace amoeba {

struct Rationality {
  bool rational = false;
  std::vector<long> slope;  // primitive integer vector when rational
  double angle = 0.0;       // angular distance to slope / |slope|
  std::string str() const;
};

// Continued-fraction convergents (denominator <= max_denominator) of the
// ratios to the largest coordinate; accepted within `tolerance` radians.
Rationality rational_slope(std::span<const double> direction, int max_denominator, double tolerance);

// Number of independent integer relations sum c_i u_i = 0 with |c_i| <= bound.
int integer_relation_rank(std::span<const double> u, int bound = 50);
// Dimension of the closure of R * u in the real n-torus (n <= 4).
int torus_closure_dim(std::span<const double> u, int bound = 50);

inline constexpr double kDegree = 0.017453292519943295;

struct LimitSetOptions {
  std::vector<double> radii{10.0, 20.0, 40.0};
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
  double tolerance = 1.5 * kDegree;  // cluster tolerance, radians
  int max_denominator = 12;
  double rational_tolerance = 1e-3;
};

struct DirectionCluster {
  std::vector<double> direction;  // unit mean direction of the members
  std::uint64_t weight = 0;
  double spread = 0.0;  // max angle between a member and `direction`
  Rationality rationality;
  int component = -1;
};

struct LimitComponent {
  bool arc = false;
  std::vector<double> direction;  // extrapolated to infinite norm for points
  std::uint64_t weight = 0;
  double extent = 0.0;        // angular diameter over all far samples
  double outer_extent = 0.0;  // same, outermost shell only
  Rationality rationality;
  std::vector<int> clusters;
};

struct LimitSetReport {
  std::uint64_t drawn = 0;
  std::uint64_t rejected = 0;  // outside the domain or excluded
  std::uint64_t far_samples = 0;
  std::vector<DirectionCluster> clusters;
  std::vector<LimitComponent> components;

  int arcs() const;
  int points() const;
};

struct FarSample {
  std::vector<double> direction;
  double norm = 0.0;
};

struct FarSampleSet {
  std::uint64_t drawn = 0;
  std::uint64_t rejected = 0;
  std::vector<FarSample> samples;  // in sample-index order
};

// Parameter points are anchor + s1 e^u + i s2 e^v with anchors at the domain
// center and every exclusion center, u, v uniform in [-R, R], R the outer
// radius; Log images with R_1 <= |Log| <= R_m are kept.
FarSampleSet far_samples(const VarietySpec& spec, const LimitSetOptions& options);
FarSampleSet far_samples_serial(const VarietySpec& spec, const LimitSetOptions& options);

LimitSetReport cluster_directions(const FarSampleSet& set, const LimitSetOptions& options);

LimitSetReport log_limit_set(const VarietySpec& spec, const LimitSetOptions& options);

// Columns: d1..dn, weight, spread, rationality, arc_id (-1 off arcs).
void write_limit_set_csv(const LimitSetReport& report, std::ostream& out);

double angle_between(std::span<const double> a, std::span<const double> b);

}  // namespace amoeba
