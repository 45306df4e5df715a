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
#include <numeric>
#include <random>
#include <sstream>

#include "amoeba/gallery.hpp"
#include "amoeba/limit_sets.hpp"

using namespace amoeba;

namespace {

std::vector<double> unit(std::vector<double> v) {
  double n = 0.0;
  for (double x : v) n += x * x;
  for (double& x : v) x /= std::sqrt(n);
  return v;
}

}  // namespace

TEST_CASE("rational slopes of integer vectors") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> d(-12, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> v{d(gen), d(gen), d(gen)};
    long g = std::gcd(std::gcd(std::labs(v[0]), std::labs(v[1])), std::labs(v[2]));
    if (g == 0) continue;
    for (long& x : v) x /= g;
    const std::vector<double> dir = unit({static_cast<double>(v[0]), static_cast<double>(v[1]), static_cast<double>(v[2])});
    const Rationality r = rational_slope(dir, 12, 1e-6);
    REQUIRE(r.rational);
    CHECK(r.slope == v);
  }
  CHECK(rational_slope(unit({1.0, 2.0}), 12, 1e-3).str() == "rational(1 2)");
}

TEST_CASE("irrational slope is rejected at a tight tolerance") {
  const Rationality r = rational_slope(unit({1.0, std::sqrt(2.0)}), 50, 1e-4);
  CHECK_FALSE(r.rational);
  CHECK(r.str() == "irrational");
  // best convergent of sqrt 2 with q <= 50 is 41/29, about 1.4e-4 rad away
  CHECK(r.angle > 1e-4);
}

TEST_CASE("integer relations and torus closures") {
  const double s2 = std::sqrt(2.0);
  const double a[] = {2.0, 3.0};
  const double b[] = {1.0, s2};
  const double c[] = {1.0, s2, 1.0 + s2};
  const double d[] = {1.0, s2, std::sqrt(3.0), std::sqrt(5.0)};
  CHECK(integer_relation_rank(a) == 1);
  CHECK(torus_closure_dim(a) == 1);
  CHECK(integer_relation_rank(b) == 0);
  CHECK(torus_closure_dim(b) == 2);
  CHECK(integer_relation_rank(c) == 1);
  CHECK(torus_closure_dim(c) == 2);
  CHECK(torus_closure_dim(d) == 4);
  const double e[] = {1.0, 2.0, 3.0};
  CHECK(integer_relation_rank(e) == 2);
  CHECK(torus_closure_dim(e) == 1);
}

TEST_CASE("circle curve has three rational limit points") {
  LimitSetOptions o;
  const LimitSetReport r = log_limit_set(circle_curve(40.0), o);
  CHECK(r.points() == 3);
  CHECK(r.arcs() == 0);
  std::uint64_t total = 0;
  for (const auto& c : r.clusters) total += c.weight;
  CHECK(total == r.far_samples);
  const double h = std::sqrt(0.5);
  for (const std::vector<double>& want : {std::vector<double>{-1, 0}, {0, -1}, {h, h}}) {
    double best = 10.0;
    for (const auto& c : r.components) best = std::min(best, angle_between(want, c.direction));
    CHECK(best <= 2 * kDegree);
  }
  for (const auto& c : r.components) CHECK(c.rationality.rational);
}

TEST_CASE("exp curve has an arc") {
  const LimitSetReport r = log_limit_set(exp_curve(40.0), {});
  CHECK(r.arcs() == 1);
  CHECK(r.points() == 1);
}

TEST_CASE("far samples are schedule independent") {
  LimitSetOptions o;
  o.samples = 20'000;
  const FarSampleSet a = far_samples(spatial_curve(40.0), o);
  const FarSampleSet b = far_samples_serial(spatial_curve(40.0), o);
  REQUIRE(a.samples.size() == b.samples.size());
  CHECK(a.drawn == b.drawn);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].norm == b.samples[i].norm);
    CHECK(a.samples[i].direction == b.samples[i].direction);
  }
}

TEST_CASE("directions are stable when the outer radius doubles") {
  LimitSetOptions o;
  const LimitSetReport a = log_limit_set(to_variety(real_line(), 80.0), o);
  o.radii = {10.0, 20.0, 80.0};
  const LimitSetReport b = log_limit_set(to_variety(real_line(), 80.0), o);
  REQUIRE(a.components.size() == b.components.size());
  for (const auto& c : a.components) {
    double best = 10.0;
    for (const auto& d : b.components) best = std::min(best, angle_between(c.direction, d.direction));
    CHECK(best <= o.tolerance);
  }
}

TEST_CASE("csv layout") {
  const LimitSetReport r = log_limit_set(circle_curve(40.0), {});
  std::ostringstream os;
  write_limit_set_csv(r, os);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "d1,d2,weight,spread,rationality,arc_id");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == static_cast<int>(r.clusters.size()));
}
