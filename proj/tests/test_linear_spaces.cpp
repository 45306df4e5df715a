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

#include "amoeba/fibers.hpp"
#include "amoeba/gallery.hpp"
#include "amoeba/linear_spaces.hpp"

using namespace amoeba;

TEST_CASE("shape validation") {
  AffinePlaneSpec p = real_line();
  p.a = {{0.0}};
  CHECK_THROWS_AS(validate(p), ConfigError);
  p = real_line();
  p.b = {1.0, 2.0};
  CHECK_THROWS_AS(validate(p), ConfigError);
  p = real_2plane();
  p.a[1] = {1.0};
  CHECK_THROWS_AS(validate(p), ConfigError);
  CHECK(real_line().normalized());
  p = real_2plane();
  p.b[0] = 2.0;
  CHECK_FALSE(p.normalized());
}

TEST_CASE("reality up to row scaling") {
  CHECK(is_real(real_line()).real);
  CHECK(is_real(real_2plane()).real);
  const RealityWitness w = is_real(nonreal_line());
  CHECK_FALSE(w.real);
  CHECK(w.failing_row == 1);
  // i + i t = i (1 + t) defines a real variety
  AffinePlaneSpec p = real_line();
  p.b = {{0.0, 1.0}};
  p.a = {{{0.0, 1.0}}};
  const RealityWitness r = is_real(p);
  CHECK(r.real);
  CHECK(std::abs((r.row_scalars[0] * Complex(0.0, 1.0)).imag()) < 1e-12);
}

TEST_CASE("genericity") {
  CHECK(genericity_condition(real_line()) < kGenericityLimit);
  AffinePlaneSpec p = nonreal_line();
  p.b = {1.0, 1.0};
  p.a = {{1.0}, {1.0}};
  CHECK(genericity_condition(p) >= kGenericityLimit);
  CHECK_FALSE(expected_counts(p).log.has_value());
}

TEST_CASE("expected counts agree with fiber counts at regular probes") {
  for (const AffinePlaneSpec& plane : {real_line(), nonreal_line(), real_2plane()}) {
    const ExpectedCounts want = expected_counts(plane);
    REQUIRE(want.log.has_value());
    REQUIRE(want.arg.has_value());
    PPOptions o;
    o.probes = 20;
    const PPEstimate e = estimate_p_P(to_variety(plane, 10.0), o);
    CHECK(e.probes_used >= 20);
    for (const ProbeRecord& p : e.evidence) {
      if (p.log_regularity != Regularity::kRegular || p.arg_regularity != Regularity::kRegular) continue;
      CHECK(p.log_count == *want.log);
      CHECK(p.arg_count == *want.arg);
    }
    CHECK(e.p == Rational(*want.arg, *want.log));
    CHECK(e.P == Rational(*want.arg, *want.log));
  }
}

TEST_CASE("to_variety carries exclusions and multiplicities") {
  const VarietySpec spec = to_variety(real_2plane(), 10.0);
  CHECK(spec.k == 2);
  CHECK(spec.n == 4);
  CHECK(spec.multiplicity_log == 4);
  CHECK(spec.multiplicity_arg == 1);
  CHECK(spec.has_tag("real"));
  // zero of 2 + 3 t1 on the t1 line
  bool found = false;
  for (const auto& e : spec.exclusions) found = found || (e.var == 0 && std::abs(e.center + 2.0 / 3.0) < 1e-12);
  CHECK(found);
}

TEST_CASE("volume certificates at 1e6 samples") {
  const VolumeCertificate line = volume_certificate(real_line(), 1'000'000, 2);
  CHECK(line.passed());
  CHECK(line.amoeba.target == doctest::Approx(std::numbers::pi * std::numbers::pi / 2));
  const VolumeCertificate plane = volume_certificate(real_2plane(), 1'000'000, 2);
  CHECK(plane.passed());
  CHECK_THROWS_AS(volume_certificate(nonreal_line(), 1000, 1), std::invalid_argument);
}
