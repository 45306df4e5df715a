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

// A parametrized k-dimensional subvariety of (C*)^n together with its
// parameter domain, and the samplers that draw parameter points from it.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amoeba/expr.hpp"
#include "amoeba/rng.hpp"

namespace amoeba {

// Malformed or inconsistent user configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Region for one complex parameter.
//  - kBox: rectangle [re_min, re_max] x [im_min, im_max], sampled uniformly.
//  - kAnnulus: {c + e^(s + i theta) : s in [log_r_min, log_r_max]}, sampled
//    uniformly in (s, theta), i.e. log-polar around `center`.
struct VariableDomain {
  enum class Kind { kBox, kAnnulus };

  Kind kind = Kind::kAnnulus;
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  Complex center{};
  double log_r_min = -10.0, log_r_max = 10.0;

  static VariableDomain box(double re_min, double re_max, double im_min, double im_max);
  static VariableDomain annulus(Complex center, double log_r_min, double log_r_max);

  Complex anchor() const;
  bool contains(Complex t) const;
  bool empty() const;

  // Measure of the sampling region in its own coordinates.
  double measure() const;

  // Maps (u1, u2) in [0,1)^2 to a point; `weight` receives the Lebesgue
  // density of the map (parameter area per unit of the square).
  Complex sample(double u1, double u2, double& weight) const;

  // Stage radius of a point: |ln|t - c|| for annuli, the max-norm offset from
  // the box center for boxes. Truncation stage R keeps points with extent <= R.
  double extent(Complex t) const;
  double max_extent() const;
  VariableDomain clipped(double radius) const;

  friend bool operator==(const VariableDomain&, const VariableDomain&) = default;
};

struct Exclusion {
  int var = 0;  // 0-based parameter index
  Complex center{};
  double radius = 0.0;

  friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

using ParamPoint = std::array<Complex, kMaxVars>;

struct VarietySpec {
  std::string name;
  int k = 1;
  int n = 0;
  std::vector<std::string> sources;
  std::vector<ComplexExpr> components;
  std::vector<VariableDomain> domain;  // one per parameter
  std::vector<Exclusion> exclusions;
  std::optional<int> multiplicity_log;
  std::optional<int> multiplicity_arg;
  std::vector<std::string> tags;

  bool has_tag(std::string_view tag) const;
  bool excluded(std::span<const Complex> t) const;
  bool admissible(std::span<const Complex> t, const std::vector<VariableDomain>& region) const;
  bool admissible(std::span<const Complex> t) const { return admissible(t, domain); }
  JetEvaluator evaluator() const;
};

// Parses component strings and checks dimensions; throws ConfigError.
VarietySpec make_variety(std::string name, int k, std::vector<std::string> components,
                         std::vector<VariableDomain> domain, std::vector<Exclusion> exclusions = {},
                         std::vector<std::string> tags = {});

// Draws one point of `region` (one VariableDomain per parameter) from `rng`.
// Returns the product Lebesgue weight.
double draw_parameter(const std::vector<VariableDomain>& region, CounterRng& rng, ParamPoint& t);

// Region clipped to stage radius `radius` in every parameter.
std::vector<VariableDomain> clip_region(const std::vector<VariableDomain>& region, double radius);

// Largest stage extent over the parameters of `t`.
// Sampling anchors per parameter: the domain anchor followed by the distinct
// exclusion centers on that parameter.
std::vector<std::vector<Complex>> sampling_anchors(const VarietySpec& spec);

double stage_extent(const std::vector<VariableDomain>& region, std::span<const Complex> t);

}  // namespace amoeba
