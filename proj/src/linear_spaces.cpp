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

#include "amoeba/linear_spaces.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "amoeba/torus_maps.hpp"

namespace amoeba {

namespace {

std::string literal(Complex c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%c%.17gi)", c.real(), c.imag() < 0 ? '-' : '+', std::abs(c.imag()));
  return buf;
}

double row_scale(const AffinePlaneSpec& plane, int j) {
  double m = std::abs(plane.b[static_cast<std::size_t>(j)]);
  for (const Complex& c : plane.a[static_cast<std::size_t>(j)]) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

bool AffinePlaneSpec::normalized() const {
  if (s < 1 || b.empty() || a.empty()) return false;
  if (b[0] != Complex(1.0, 0.0)) return false;
  for (const Complex& c : a[0]) {
    if (c != Complex(1.0, 0.0)) return false;
  }
  return true;
}

void validate(const AffinePlaneSpec& plane) {
  if (plane.k < 1 || plane.k > kMaxVars) throw ConfigError("plane: k must be between 1 and " + std::to_string(kMaxVars));
  if (plane.s < 1 || plane.k + plane.s > kMaxCoords) throw ConfigError("plane: need s >= 1 and k + s <= " + std::to_string(kMaxCoords));
  if (static_cast<int>(plane.b.size()) != plane.s) throw ConfigError("plane: b must have s entries");
  if (static_cast<int>(plane.a.size()) != plane.s) throw ConfigError("plane: a must have s rows");
  for (int j = 0; j < plane.s; ++j) {
    if (static_cast<int>(plane.a[static_cast<std::size_t>(j)].size()) != plane.k) {
      throw ConfigError("plane: row " + std::to_string(j + 1) + " of a must have k entries");
    }
    bool nonconstant = false;
    for (const Complex& c : plane.a[static_cast<std::size_t>(j)]) nonconstant = nonconstant || c != Complex(0.0, 0.0);
    if (!nonconstant) throw ConfigError("plane: row " + std::to_string(j + 1) + " has no linear term");
  }
}

VarietySpec to_variety(const AffinePlaneSpec& plane, double log_radius) {
  validate(plane);
  std::vector<std::string> components;
  for (int i = 0; i < plane.k; ++i) components.push_back("t" + std::to_string(i + 1));
  std::vector<Exclusion> exclusions;
  for (int i = 0; i < plane.k; ++i) exclusions.push_back({i, {0.0, 0.0}, 1e-9});
  for (int j = 0; j < plane.s; ++j) {
    const auto& row = plane.a[static_cast<std::size_t>(j)];
    const Complex bj = plane.b[static_cast<std::size_t>(j)];
    std::string f = literal(bj);
    for (int i = 0; i < plane.k; ++i) {
      f += "+" + literal(row[static_cast<std::size_t>(i)]) + "*t" + std::to_string(i + 1);
      if (row[static_cast<std::size_t>(i)] != Complex(0.0, 0.0)) {
        exclusions.push_back({i, -bj / row[static_cast<std::size_t>(i)], 1e-9});
      }
    }
    components.push_back(f);
  }
  std::vector<VariableDomain> domain(static_cast<std::size_t>(plane.k),
                                     VariableDomain::annulus({0.0, 0.0}, -log_radius, log_radius));
  std::vector<std::string> tags{"algebraic", "plane"};
  if (is_real(plane).real) tags.push_back("real");
  VarietySpec spec = make_variety(plane.name, plane.k, components, domain, exclusions, tags);
  const ExpectedCounts counts = expected_counts(plane);
  spec.multiplicity_log = counts.log;
  spec.multiplicity_arg = counts.arg;
  return spec;
}

RealityWitness is_real(const AffinePlaneSpec& plane) {
  validate(plane);
  RealityWitness w;
  w.real = true;
  for (int j = 0; j < plane.s; ++j) {
    const auto& row = plane.a[static_cast<std::size_t>(j)];
    std::vector<Complex> entries{plane.b[static_cast<std::size_t>(j)]};
    entries.insert(entries.end(), row.begin(), row.end());
    Complex pivot{0.0, 0.0};
    for (const Complex& c : entries) {
      if (std::abs(c) > std::abs(pivot)) pivot = c;
    }
    const Complex unit = std::abs(pivot) / pivot;
    const double scale = row_scale(plane, j);
    bool row_real = true;
    for (const Complex& c : entries) row_real = row_real && std::abs((c * unit).imag()) <= 1e-12 * scale;
    w.row_scalars.push_back(unit);
    if (!row_real && w.real) {
      w.real = false;
      w.failing_row = j;
    }
  }
  return w;
}

double genericity_condition(const AffinePlaneSpec& plane) {
  validate(plane);
  const int k = plane.k;
  const int n = plane.n();
  Eigen::MatrixXcd lin(n, k), aff(n, k + 1);
  lin.setZero();
  aff.setZero();
  for (int i = 0; i < k; ++i) {
    lin(i, i) = 1.0;
    aff(i, i) = 1.0;
  }
  for (int j = 0; j < plane.s; ++j) {
    for (int i = 0; i < k; ++i) {
      lin(k + j, i) = plane.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      aff(k + j, i) = lin(k + j, i);
    }
    aff(k + j, k) = plane.b[static_cast<std::size_t>(j)];
  }
  double worst = 1.0;
  auto check = [&](const Eigen::MatrixXcd& m, int size) {
    if (size > n) return;
    for (const auto& rows : subsets(n, size)) {
      Eigen::MatrixXcd sub(size, m.cols());
      for (int r = 0; r < size; ++r) sub.row(r) = m.row(rows[static_cast<std::size_t>(r)]);
      const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sub);
      const auto& sv = svd.singularValues();
      const double cond = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1] : INFINITY;
      worst = std::max(worst, cond);
    }
  };
  check(lin, k);
  check(aff, k + 1);
  return worst;
}

ExpectedCounts expected_counts(const AffinePlaneSpec& plane) {
  ExpectedCounts out;
  if (genericity_condition(plane) >= kGenericityLimit) {
    out.basis = "plane not in general position";
    return out;
  }
  out.arg = 1;
  const bool real = is_real(plane).real;
  const int m = plane.s - plane.k;
  if (real && m == 0) {
    out.log = 1 << plane.k;
    out.basis = "real k-plane in (C*)^2k: 2^k Log preimages";
  } else if (plane.k == 1 && m >= 1) {
    out.log = real ? 2 : 1;
    out.basis = real ? "real line: conjugate pair of Log preimages" : "non-real line: single Log preimage";
  } else {
    out.basis = "Arg count only; Log count not covered";
  }
  return out;
}

namespace {

VolumeCheck run_check(const VarietySpec& spec, Target target, int multiplicity, double expected,
                      std::uint64_t samples, std::uint64_t seed) {
  VolumeOptions o;
  o.target = target;
  o.samples = samples;
  o.seed = seed;
  o.multiplicity = multiplicity;
  VolumeCheck c;
  c.estimate = integrate_pullback(spec, o);
  c.target = expected;
  c.z_score = c.estimate.std_error > 0.0 ? (c.estimate.value - expected) / c.estimate.std_error : INFINITY;
  c.passed = std::abs(c.z_score) <= 3.0;
  return c;
}

}  // namespace

VolumeCertificate volume_certificate(const AffinePlaneSpec& plane, std::uint64_t samples, std::uint64_t seed,
                                     double log_radius) {
  if (plane.s != plane.k) throw std::invalid_argument("volume certificate needs a k-plane in (C*)^2k (s == k)");
  if (!is_real(plane).real) throw std::invalid_argument("volume certificate needs a real plane");
  const VarietySpec spec = to_variety(plane, log_radius);
  const double full = std::pow(std::numbers::pi, 2 * plane.k);
  VolumeCertificate cert;
  cert.amoeba = run_check(spec, Target::kAmoeba, 1 << plane.k, full / (1 << plane.k), samples, seed);
  cert.coamoeba = run_check(spec, Target::kCoamoeba, 1, full, samples, seed);
  return cert;
}

}  // namespace amoeba
