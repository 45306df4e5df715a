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

// Monte Carlo volumes of amoebas and coamoebas, computed as the integral of
// the generalized Jacobian over the parameter domain divided by the covering
// multiplicity of Log (resp. Arg).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amoeba/rational.hpp"
#include "amoeba/torus_maps.hpp"
#include "amoeba/variety.hpp"

namespace amoeba {

enum class Target { kAmoeba, kCoamoeba };

std::string to_string(Target target);
Target parse_target(std::string_view name);

// Mergeable (count, sum, sum of squares) triple.
struct Accumulator {
  std::uint64_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    ++count;
    sum += v;
    sum_sq += v * v;
  }
  void merge(const Accumulator& other) {
    count += other.count;
    sum += other.sum;
    sum_sq += other.sum_sq;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  // Sample standard deviation divided by sqrt(count).
  double standard_error() const;
};

struct VolumeOptions {
  Target target = Target::kAmoeba;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  // Parameter region to integrate over; defaults to the spec domain.
  std::optional<std::vector<VariableDomain>> truncation;
  // Overrides the spec's declared multiplicity for the target map.
  std::optional<int> multiplicity;
};

struct VolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  int multiplicity = 1;
  Target target = Target::kAmoeba;
  std::uint64_t excluded = 0;  // samples inside exclusion discs (weight 0)
  std::uint64_t dropped = 0;   // samples whose evaluation failed (weight 0)
  std::vector<VariableDomain> box;
  std::uint64_t seed = 0;
};

// Counts of how samples were disposed of; filled by the integrand.
struct SampleTally {
  std::uint64_t excluded = 0;
  std::uint64_t dropped = 0;
};

// One Monte Carlo term: weight(t) * density(t) for the sample `index`, or 0
// for excluded / non-evaluable points. Shared by the serial and parallel paths.
double pullback_integrand(const VarietySpec& spec, const JetEvaluator& evaluator,
                          const std::vector<VariableDomain>& region, MapKind map, std::uint64_t seed,
                          std::uint64_t index, SampleTally& tally);

// OpenMP kernel: fixed-size sample batches, merged in batch order, so the
// result is bit-identical for any thread count.
VolumeEstimate integrate_pullback(const VarietySpec& spec, const VolumeOptions& options);
// Single loop over all samples; reference for the parallel kernel.
VolumeEstimate integrate_pullback_serial(const VarietySpec& spec, const VolumeOptions& options);

struct FinitenessOptions {
  std::vector<double> radii{5.0, 10.0, 20.0, 40.0};
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
  double eps_rel = 0.01;
  double eps_abs = 1e-3;
};

struct FinitenessVerdict {
  enum class Kind { kConvergent, kDivergent, kInconclusive };
  Kind kind = Kind::kInconclusive;
  std::vector<double> radii;
  std::vector<double> stage_value;   // I(R_j)
  std::vector<double> stage_stderr;
  std::vector<double> increment;     // I(R_j) - I(R_{j-1}); first entry is I(R_1)
  std::vector<double> increment_stderr;
  double estimate = 0.0;             // I(R_m)
  double growth_exponent = 0.0;      // least-squares slope of ln I(R) against R
  std::string reason;
};

std::string to_string(FinitenessVerdict::Kind kind);

// Stage integrals over the nested truncations {extent <= R_j} of the spec
// domain, all estimated from one common sample set drawn at R_m.
FinitenessVerdict classify_finiteness(const VarietySpec& spec, const FinitenessOptions& options);

struct ComparisonReport {
  Rational p;
  Rational P;
  double amoeba = 0.0;
  double coamoeba = 0.0;
  double lower_margin = 0.0;  // vol(A) - p vol(coA)
  double upper_margin = 0.0;  // P vol(coA) - vol(A)
  double lower_slack = 0.0;   // 3 combined standard errors
  double upper_slack = 0.0;
  bool lower_ok = false;
  bool upper_ok = false;
  bool passed() const { return lower_ok && upper_ok; }
};

// Checks p vol(coA) <= vol(A) <= P vol(coA), each side allowed 3 combined
// standard errors of slack.
ComparisonReport comparison_certificate(Rational p, Rational P, const VolumeEstimate& amoeba,
                                        const VolumeEstimate& coamoeba);

}  // namespace amoeba
