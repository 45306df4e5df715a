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

#include "amoeba/variety.hpp"

#include <algorithm>
#include <cmath>

#include "amoeba/torus_maps.hpp"

namespace amoeba {

VariableDomain VariableDomain::box(double re_min, double re_max, double im_min, double im_max) {
  VariableDomain d;
  d.kind = Kind::kBox;
  d.re_min = re_min;
  d.re_max = re_max;
  d.im_min = im_min;
  d.im_max = im_max;
  return d;
}

VariableDomain VariableDomain::annulus(Complex center, double log_r_min, double log_r_max) {
  VariableDomain d;
  d.kind = Kind::kAnnulus;
  d.center = center;
  d.log_r_min = log_r_min;
  d.log_r_max = log_r_max;
  return d;
}

Complex VariableDomain::anchor() const {
  if (kind == Kind::kAnnulus) return center;
  return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)};
}

bool VariableDomain::contains(Complex t) const {
  if (kind == Kind::kBox) {
    return t.real() >= re_min && t.real() <= re_max && t.imag() >= im_min && t.imag() <= im_max;
  }
  const double r = std::abs(t - center);
  if (r == 0.0) return false;
  const double s = std::log(r);
  return s >= log_r_min && s <= log_r_max;
}

bool VariableDomain::empty() const {
  if (kind == Kind::kBox) return !(re_max > re_min) || !(im_max > im_min);
  return !(log_r_max > log_r_min);
}

double VariableDomain::measure() const {
  if (empty()) return 0.0;
  if (kind == Kind::kBox) return (re_max - re_min) * (im_max - im_min);
  return (log_r_max - log_r_min) * kTwoPi;
}

Complex VariableDomain::sample(double u1, double u2, double& weight) const {
  if (kind == Kind::kBox) {
    weight = measure();
    return {re_min + u1 * (re_max - re_min), im_min + u2 * (im_max - im_min)};
  }
  const double s = log_r_min + u1 * (log_r_max - log_r_min);
  const double theta = kTwoPi * u2;
  const double r = std::exp(s);
  weight = measure() * r * r;
  return center + std::polar(r, theta);
}

double VariableDomain::extent(Complex t) const {
  if (kind == Kind::kAnnulus) {
    const double r = std::abs(t - center);
    return r == 0.0 ? INFINITY : std::abs(std::log(r));
  }
  const Complex c = anchor();
  return std::max(std::abs(t.real() - c.real()), std::abs(t.imag() - c.imag()));
}

double VariableDomain::max_extent() const {
  if (kind == Kind::kAnnulus) return std::max(std::abs(log_r_min), std::abs(log_r_max));
  return 0.5 * std::max(re_max - re_min, im_max - im_min);
}

VariableDomain VariableDomain::clipped(double radius) const {
  VariableDomain d = *this;
  if (kind == Kind::kAnnulus) {
    d.log_r_min = std::max(log_r_min, -radius);
    d.log_r_max = std::min(log_r_max, radius);
    return d;
  }
  const Complex c = anchor();
  d.re_min = std::max(re_min, c.real() - radius);
  d.re_max = std::min(re_max, c.real() + radius);
  d.im_min = std::max(im_min, c.imag() - radius);
  d.im_max = std::min(im_max, c.imag() + radius);
  return d;
}

bool VarietySpec::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool VarietySpec::excluded(std::span<const Complex> t) const {
  for (const Exclusion& e : exclusions) {
    if (std::abs(t[static_cast<std::size_t>(e.var)] - e.center) < e.radius) return true;
  }
  return false;
}

bool VarietySpec::admissible(std::span<const Complex> t, const std::vector<VariableDomain>& region) const {
  for (std::size_t j = 0; j < region.size(); ++j) {
    if (!region[j].contains(t[j])) return false;
  }
  return !excluded(t);
}

JetEvaluator VarietySpec::evaluator() const { return JetEvaluator(components, k); }

VarietySpec make_variety(std::string name, int k, std::vector<std::string> components,
                         std::vector<VariableDomain> domain, std::vector<Exclusion> exclusions,
                         std::vector<std::string> tags) {
  if (k < 1 || k > kMaxVars) {
    throw ConfigError("k must be between 1 and " + std::to_string(kMaxVars));
  }
  if (components.empty() || static_cast<int>(components.size()) > kMaxCoords) {
    throw ConfigError("number of components must be between 1 and " + std::to_string(kMaxCoords));
  }
  if (static_cast<int>(domain.size()) != k) {
    throw ConfigError("domain must list one region per parameter (" + std::to_string(k) + ")");
  }
  VarietySpec spec;
  spec.name = std::move(name);
  spec.k = k;
  spec.n = static_cast<int>(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    try {
      spec.components.push_back(parse(components[i], k));
    } catch (const ParseError& e) {
      throw ConfigError("component " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  for (const auto& d : domain) {
    if (d.empty()) throw ConfigError("empty parameter domain");
  }
  for (const auto& e : exclusions) {
    if (e.var < 0 || e.var >= k) throw ConfigError("exclusion refers to a parameter outside t1..tk");
    if (!(e.radius >= 0.0)) throw ConfigError("exclusion radius must be nonnegative");
  }
  spec.sources = std::move(components);
  spec.domain = std::move(domain);
  spec.exclusions = std::move(exclusions);
  spec.tags = std::move(tags);
  return spec;
}

double draw_parameter(const std::vector<VariableDomain>& region, CounterRng& rng, ParamPoint& t) {
  double weight = 1.0;
  for (std::size_t j = 0; j < region.size(); ++j) {
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    double w = 0.0;
    t[j] = region[j].sample(u1, u2, w);
    weight *= w;
  }
  return weight;
}

std::vector<VariableDomain> clip_region(const std::vector<VariableDomain>& region, double radius) {
  std::vector<VariableDomain> out;
  out.reserve(region.size());
  for (const auto& d : region) out.push_back(d.clipped(radius));
  return out;
}

std::vector<std::vector<Complex>> sampling_anchors(const VarietySpec& spec) {
  std::vector<std::vector<Complex>> anchors(static_cast<std::size_t>(spec.k));
  for (int j = 0; j < spec.k; ++j) anchors[static_cast<std::size_t>(j)].push_back(spec.domain[static_cast<std::size_t>(j)].anchor());
  for (const Exclusion& e : spec.exclusions) {
    auto& list = anchors[static_cast<std::size_t>(e.var)];
    if (std::find(list.begin(), list.end(), e.center) == list.end()) list.push_back(e.center);
  }
  return anchors;
}

double stage_extent(const std::vector<VariableDomain>& region, std::span<const Complex> t) {
  double worst = 0.0;
  for (std::size_t j = 0; j < region.size(); ++j) worst = std::max(worst, region[j].extent(t[j]));
  return worst;
}

}  // namespace amoeba
