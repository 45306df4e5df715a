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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "amoeba/gallery.hpp"
#include "amoeba/measure.hpp"
#include "amoeba/parallel.hpp"

using namespace amoeba;

namespace {

constexpr double kPi = std::numbers::pi;

VolumeEstimate run(const VarietySpec& spec, Target target, std::uint64_t samples, std::uint64_t seed = 1) {
  VolumeOptions o;
  o.target = target;
  o.samples = samples;
  o.seed = seed;
  return integrate_pullback(spec, o);
}

}  // namespace

TEST_CASE("integral over a box matches midpoint quadrature") {
  // exp curve density is y / (x^2 + y^2)
  VarietySpec spec = make_variety("e", 1, {"t1", "exp(t1)"}, {VariableDomain::box(0.5, 1.5, 0.2, 1.2)});
  spec.multiplicity_log = 1;
  const int m = 2000;
  double quad = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double x = 0.5 + (i + 0.5) / m, y = 0.2 + (j + 0.5) / m;
      quad += y / (x * x + y * y);
    }
  }
  quad /= static_cast<double>(m) * m;
  const VolumeEstimate v = run(spec, Target::kAmoeba, 200'000);
  CHECK(std::abs(v.value - quad) <= 3 * v.std_error);
  CHECK(v.std_error < 0.01 * quad);
}

TEST_CASE("real line volumes") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  const VolumeEstimate a = run(spec, Target::kAmoeba, 400'000);
  const VolumeEstimate c = run(spec, Target::kCoamoeba, 400'000);
  CHECK(a.multiplicity == 2);
  CHECK(c.multiplicity == 1);
  CHECK(std::abs(a.value - kPi * kPi / 2) <= 3 * a.std_error);
  CHECK(std::abs(c.value - kPi * kPi) <= 3 * c.std_error);
  // both integrate the same density
  CHECK(std::abs(a.value * a.multiplicity - c.value * c.multiplicity) <=
        3 * std::hypot(a.std_error * a.multiplicity, c.std_error * c.multiplicity));
}

TEST_CASE("deterministic and independent of the thread schedule") {
  const VarietySpec spec = spatial_curve(10.0);
  VolumeOptions o;
  o.samples = 50'000;
  o.seed = 9;
  o.multiplicity = 1;
  const VolumeEstimate a = integrate_pullback(spec, o);
  const VolumeEstimate b = integrate_pullback(spec, o);
  const VolumeEstimate s = integrate_pullback_serial(spec, o);
  set_worker_threads(3);
  const VolumeEstimate t = integrate_pullback(spec, o);
  set_worker_threads(0);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.value == t.value);
  CHECK(a.value == doctest::Approx(s.value).epsilon(1e-12));
  CHECK(a.std_error == doctest::Approx(s.std_error).epsilon(1e-9));
  o.seed = 10;
  CHECK(integrate_pullback(spec, o).value != a.value);
}

TEST_CASE("standard error shrinks like 1/sqrt(samples)") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  const VolumeEstimate a = run(spec, Target::kAmoeba, 200'000, 4);
  const VolumeEstimate b = run(spec, Target::kAmoeba, 400'000, 4);
  const double ratio = a.std_error / b.std_error;
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(0.15));
}

TEST_CASE("volume is monotone in the truncation") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  VolumeOptions o;
  o.samples = 100'000;
  double last = 0.0, last_se = 0.0;
  for (double r : {1.0, 3.0, 10.0}) {
    o.truncation = clip_region(spec.domain, r);
    const VolumeEstimate v = integrate_pullback(spec, o);
    CHECK(v.value + 3 * std::hypot(v.std_error, last_se) >= last);
    last = v.value;
    last_se = v.std_error;
  }
}

TEST_CASE("excluded samples carry zero weight") {
  VarietySpec spec = make_variety("e", 1, {"t1", "exp(t1)"}, {VariableDomain::box(0.5, 1.5, 0.2, 1.2)},
                                  {{0, {1.0, 0.7}, 0.3}});
  spec.multiplicity_log = 1;
  const VolumeEstimate v = run(spec, Target::kAmoeba, 100'000);
  CHECK(v.excluded > 0);
  const double share = static_cast<double>(v.excluded) / static_cast<double>(v.samples);
  CHECK(share == doctest::Approx(kPi * 0.09).epsilon(0.05));
}

TEST_CASE("bad options are rejected") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  VolumeOptions o;
  o.samples = 0;
  CHECK_THROWS_AS(integrate_pullback(spec, o), std::invalid_argument);
  const VarietySpec thin = make_variety("p", 2, {"t1", "t2", "t1+t2"}, {VariableDomain::annulus({}, -1, 1), VariableDomain::annulus({}, -1, 1)});
  CHECK_THROWS_AS(run(thin, Target::kAmoeba, 10), std::invalid_argument);
  const VarietySpec bare = exp_curve(5.0);
  CHECK_THROWS_AS(run(bare, Target::kAmoeba, 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("volume"), ConfigError);
}

TEST_CASE("finiteness separates the exp curve from the line") {
  FinitenessOptions o;
  const FinitenessVerdict e = classify_finiteness(exp_curve(40.0), o);
  const FinitenessVerdict l = classify_finiteness(to_variety(real_line(), 40.0), o);
  CHECK(e.kind == FinitenessVerdict::Kind::kDivergent);
  CHECK(l.kind == FinitenessVerdict::Kind::kConvergent);
  CHECK(e.growth_exponent == doctest::Approx(1.0).epsilon(0.05));
  CHECK(e.radii == o.radii);
  o.radii = {5.0, 10.0, 10.0, 20.0};
  CHECK_THROWS(classify_finiteness(exp_curve(40.0), o));
  o.radii = {5.0, 10.0, 20.0, 80.0};
  CHECK_THROWS(classify_finiteness(exp_curve(40.0), o));
}

TEST_CASE("comparison certificate") {
  VolumeEstimate a, c;
  a.value = 5.0;
  a.std_error = 0.05;
  c.value = 9.8;
  c.std_error = 0.1;
  CHECK(comparison_certificate(Rational(1, 2), Rational(1, 2), a, c).passed());
  c.value = 12.0;
  const ComparisonReport r = comparison_certificate(Rational(1, 2), Rational(1, 2), a, c);
  CHECK_FALSE(r.passed());
  CHECK(r.lower_ok == false);
  CHECK(r.upper_ok == true);
}

TEST_CASE("accumulators merge associatively") {
  Accumulator x, y, all;
  for (int i = 0; i < 10; ++i) {
    (i < 4 ? x : y).add(i * 0.5);
    all.add(i * 0.5);
  }
  x.merge(y);
  CHECK(x.count == all.count);
  CHECK(x.mean() == doctest::Approx(all.mean()));
  CHECK(x.standard_error() == doctest::Approx(all.standard_error()));
}
