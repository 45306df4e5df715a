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
#include <random>

#include "amoeba/identity_check.hpp"
#include "amoeba/torus_maps.hpp"
#include "amoeba/variety.hpp"

using namespace amoeba;

namespace {

constexpr double kPi = std::numbers::pi;

double log_density(const VarietySpec& spec, Complex t) {
  const JetEvaluator ev = spec.evaluator();
  LogJet jet;
  const Complex p[1] = {t};
  ev.log_jet(p, jet);
  return generalized_jacobian(jet, MapKind::kLog);
}

// Real Jacobian of t -> ln|z(t)| by central differences, then sqrt of the
// sum of squared 2x2 minors.
double fd_density(const VarietySpec& spec, Complex t) {
  const double h = 1e-6;
  const JetEvaluator ev = spec.evaluator();
  auto logmod = [&](Complex s) {
    const Complex p[1] = {s};
    const std::vector<Complex> z = ev.values(p);
    std::vector<double> out;
    for (const Complex& c : z) out.push_back(std::log(std::abs(c)));
    return out;
  };
  const auto xp = logmod(t + h), xm = logmod(t - h);
  const auto yp = logmod(t + Complex(0, h)), ym = logmod(t - Complex(0, h));
  const std::size_t n = xp.size();
  double sum = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double m = (xp[a] - xm[a]) * (yp[b] - ym[b]) - (yp[a] - ym[a]) * (xp[b] - xm[b]);
      sum += m * m / (16 * h * h * h * h);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

TEST_CASE("angle helpers") {
  CHECK(wrap_angle(-0.5) == doctest::Approx(2 * kPi - 0.5));
  CHECK(wrap_angle(7 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_difference(2 * kPi - 0.1) == doctest::Approx(-0.1));
  const double a[2] = {0.05, 3.0}, b[2] = {2 * kPi - 0.05, 3.5};
  CHECK(torus_distance(a, b) == doctest::Approx(0.5));
}

TEST_CASE("bergman map inverts") {
  const double x[3] = {3.0, -40.0, 0.25};
  const auto r = bergman_r(x);
  double norm = 0.0;
  for (double v : r) norm += v * v;
  CHECK(std::sqrt(norm) < 1.0);
  const auto back = bergman_r_inverse(r);
  for (int i = 0; i < 3; ++i) CHECK(back[static_cast<std::size_t>(i)] == doctest::Approx(x[i]).epsilon(1e-10));
}

TEST_CASE("exp curve density has the closed form |Im t| / |t|^2") {
  const VarietySpec spec = make_variety("e", 1, {"t1", "exp(t1)"}, {VariableDomain::annulus({}, -5, 5)});
  // w = (1/t, 1): |det| = |Im(1/t)|
  CHECK(log_density(spec, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(log_density(spec, {1.0, 1.0}) == doctest::Approx(0.5));
  CHECK(log_density(spec, {1.7, 0.0}) == 0.0);
}

TEST_CASE("density matches finite differences of the Log map") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const VarietySpec specs[] = {
      make_variety("s", 1, {"t1", "exp(t1)", "t1+1"}, {VariableDomain::annulus({}, -5, 5)}),
      make_variety("c", 1, {"cos(t1)", "sin(t1)"}, {VariableDomain::box(0, 6, -3, 3)}),
      make_variety("n", 1, {"t1", "1+t1", "i+2*t1"}, {VariableDomain::annulus({}, -5, 5)}),
  };
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 200; ++trial) {
      const Complex t(u(gen), u(gen));
      CHECK(log_density(spec, t) == doctest::Approx(fd_density(spec, t)).epsilon(1e-5));
    }
  }
}

TEST_CASE("Log and Arg minors agree") {
  const VarietySpec spec =
      make_variety("p", 2, {"t1", "t2", "1+t1+t2", "2+3*t1-t2"}, {VariableDomain::annulus({}, -3, 3), VariableDomain::annulus({}, -3, 3)});
  const JetEvaluator ev = spec.evaluator();
  LogJet jet;
  const Complex t[2] = {{0.4, 0.9}, {-1.3, 0.2}};
  ev.log_jet(t, jet);
  const auto minors = jacobian_minors(jet);
  CHECK(minors.size() == 1);
  for (const auto& m : minors) CHECK(m.log_det == doctest::Approx(m.arg_det).epsilon(1e-12));
  CHECK(generalized_jacobian(jet, MapKind::kLog) == doctest::Approx(generalized_jacobian(jet, MapKind::kArg)));
  const JacobianCheckReport r = check_jacobian_identity(spec, 10'000, 5);
  CHECK(r.samples == 10'000);
  CHECK(r.max_relative_deviation <= 1e-8);
  CHECK(r.max_minor_deviation <= 1e-8);
}

TEST_CASE("conjugate parameters share a Log image on real specs") {
  const VarietySpec spec = make_variety("c", 1, {"cos(t1)", "sin(t1)"}, {VariableDomain::box(0, 6, -3, 3)});
  const JetEvaluator ev = spec.evaluator();
  const Complex t[1] = {{1.1, 0.7}}, s[1] = {std::conj(t[0])};
  const auto a = log_map(ev.values(t)).coords;
  const auto b = log_map(ev.values(s)).coords;
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]));
}

TEST_CASE("subsets enumerate in lexicographic order") {
  const auto s = subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == std::vector<int>{0, 1});
  CHECK(s.back() == std::vector<int>{2, 3});
}
