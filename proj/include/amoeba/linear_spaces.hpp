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

// Affine k-planes t -> (t_1..t_k, f_1(t)..f_s(t)) with f_j = b_j + sum_i a_ji t_i.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amoeba/measure.hpp"
#include "amoeba/variety.hpp"

namespace amoeba {

struct AffinePlaneSpec {
  std::string name = "plane";
  int k = 1;
  int s = 1;
  std::vector<Complex> b;               // s constants
  std::vector<std::vector<Complex>> a;  // s rows of k coefficients

  int n() const { return k + s; }
  // f_1 = 1 + t_1 + ... + t_k
  bool normalized() const;
};

// Throws ConfigError on shape errors or an all-zero row.
void validate(const AffinePlaneSpec& plane);

// Annulus domain |ln|t_i|| <= log_radius per parameter; exclusion discs of
// radius 1e-9 at the zeros of each f_j on the coordinate lines.
VarietySpec to_variety(const AffinePlaneSpec& plane, double log_radius = 40.0);

struct RealityWitness {
  bool real = false;
  std::vector<Complex> row_scalars;  // unit scalars making each row real
  int failing_row = -1;
};

RealityWitness is_real(const AffinePlaneSpec& plane);

// Largest condition number over the square submatrices of [I; A] (k x k) and
// of the affine matrix [[I, 0]; [A, b]] ((k+1) x (k+1)).
double genericity_condition(const AffinePlaneSpec& plane);
inline constexpr double kGenericityLimit = 1e8;

struct ExpectedCounts {
  std::optional<int> arg;
  std::optional<int> log;
  std::string basis;  // which statement the counts come from
};

ExpectedCounts expected_counts(const AffinePlaneSpec& plane);

struct VolumeCheck {
  VolumeEstimate estimate;
  double target = 0.0;
  double z_score = 0.0;  // (estimate - target) / stderr
  bool passed = false;   // within 3 standard errors
};

struct VolumeCertificate {
  VolumeCheck amoeba;    // multiplicity 2^k, target pi^(2k) / 2^k
  VolumeCheck coamoeba;  // multiplicity 1, target pi^(2k)
  bool passed() const { return amoeba.passed && coamoeba.passed; }
};

// Requires a real plane with s == k. Integrates over |ln|t_i|| <= log_radius.
VolumeCertificate volume_certificate(const AffinePlaneSpec& plane, std::uint64_t samples, std::uint64_t seed,
                                     double log_radius = 10.0);

}  // namespace amoeba
