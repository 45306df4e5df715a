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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "amoeba/fibers.hpp"
#include "amoeba/gallery.hpp"

using namespace amoeba;

namespace {

constexpr double kPi = std::numbers::pi;

// Points with |t| = e^a and |1 + t| = e^b: intersection of two circles.
std::vector<Complex> circle_intersection(double a, double b) {
  const double r1 = std::exp(a), r2 = std::exp(b);
  const double x = (r2 * r2 - r1 * r1 - 1.0) / 2.0;
  const double y2 = r1 * r1 - x * x;
  if (y2 < 0) return {};
  return {{x, std::sqrt(y2)}, {x, -std::sqrt(y2)}};
}

bool has_point(const FiberReport& r, Complex t, double tol) {
  return std::any_of(r.solutions.begin(), r.solutions.end(),
                     [&](const FiberSolution& s) { return std::abs(s.t[0] - t) <= tol; });
}

}  // namespace

TEST_CASE("real line Log fiber over the origin") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  const FiberReport r = fiber_count(spec, MapKind::kLog, {0.0, 0.0}, {});
  CHECK(r.regularity == Regularity::kRegular);
  REQUIRE(r.count == 2);
  CHECK(has_point(r, {-0.5, std::sqrt(3.0) / 2}, 1e-8));
  CHECK(has_point(r, {-0.5, -std::sqrt(3.0) / 2}, 1e-8));
}

TEST_CASE("real line Log fibers match circle intersections") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  int tested = 0;
  while (tested < 8) {
    const Complex t0(u(gen), u(gen));
    if (std::abs(t0.imag()) < 0.1) continue;
    const std::vector<double> target = push_forward(spec, MapKind::kLog, std::vector<Complex>{t0});
    const FiberReport r = fiber_count(spec, MapKind::kLog, target, {});
    const auto want = circle_intersection(target[0], target[1]);
    REQUIRE(want.size() == 2);
    CHECK(r.count == 2);
    for (const Complex& w : want) CHECK(has_point(r, w, 1e-7));
    // conjugate pairs
    for (const auto& s : r.solutions) {
      CHECK(has_point(r, std::conj(s.t[0]), 1e-7));
      CHECK(s.residual <= 1e-8);
    }
    ++tested;
  }
}

TEST_CASE("tangent circles give a critical value") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  const FiberReport r = fiber_count(spec, MapKind::kLog, {std::log(2.0), std::log(3.0)}, {});
  CHECK(r.regularity == Regularity::kCritical);
  CHECK(has_point(r, {2.0, 0.0}, 1e-4));
}

TEST_CASE("real line Arg fiber") {
  const VarietySpec spec = to_variety(real_line(), 10.0);
  // arg t = pi/2 and arg(1 + t) = pi/4 force t = i
  const FiberReport r = fiber_count(spec, MapKind::kArg, {kPi / 2, kPi / 4}, {});
  REQUIRE(r.count == 1);
  CHECK(std::abs(r.solutions[0].t[0] - Complex(0, 1)) < 1e-8);
  CHECK(r.regularity == Regularity::kRegular);
}

TEST_CASE("more starts never lose solutions") {
  const VarietySpec spec = to_variety(real_2plane(), 10.0);
  const std::vector<Complex> t0{{0.3, 0.8}, {-0.6, 0.4}};
  const auto target = push_forward(spec, MapKind::kLog, t0);
  FiberOptions o;
  o.starts = 128;
  const int few = fiber_count(spec, MapKind::kLog, target, o).count;
  o.starts = 512;
  const FiberReport many = fiber_count(spec, MapKind::kLog, target, o);
  CHECK(many.count >= few);
  CHECK(many.count == 4);
  for (const auto& s : many.solutions) CHECK(s.residual <= 1e-8);
}

TEST_CASE("fiber search is deterministic") {
  const VarietySpec spec = exp_curve(10.0);
  const std::vector<double> target{0.2, 0.9};
  const FiberReport a = fiber_count(spec, MapKind::kArg, target, {});
  const FiberReport b = fiber_count(spec, MapKind::kArg, target, {});
  REQUIRE(a.count == b.count);
  for (std::size_t i = 0; i < a.solutions.size(); ++i) CHECK(a.solutions[i].t == b.solutions[i].t);
}

TEST_CASE("p and P for the lines") {
  PPOptions o;
  o.probes = 10;
  const PPEstimate real = estimate_p_P(to_variety(real_line(), 10.0), o);
  CHECK(real.p == Rational(1, 2));
  CHECK(real.P == Rational(1, 2));
  CHECK(real.probes_used == 10);
  const PPEstimate nonreal = estimate_p_P(to_variety(nonreal_line(), 10.0), o);
  CHECK(nonreal.p == Rational(1));
  CHECK(nonreal.P == Rational(1));
  CHECK_FALSE(nonreal.arg_unbounded_suspected);
}

TEST_CASE("rationals reduce") {
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(1, 4).str() == "1/4");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("map names") {
  CHECK(parse_map("log") == MapKind::kLog);
  CHECK(parse_map("arg") == MapKind::kArg);
  CHECK_THROWS(parse_map("abs"));
}
