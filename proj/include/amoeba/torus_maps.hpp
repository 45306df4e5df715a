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

// Log and Arg maps on the complex torus, Bergman's compactifying map r, and
// the generalized Jacobian of t -> Log(rho(t)) / Arg(rho(t)).

#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "amoeba/expr.hpp"

namespace amoeba {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class MapKind { kLog, kArg };

struct LogPoint {
  std::vector<double> coords;
};

struct TorusPoint {
  std::vector<double> angles;  // each in [0, 2*pi)
};

// Reduces an angle into [0, 2*pi).
double wrap_angle(double angle);
// Reduces an angle difference into (-pi, pi].
double wrap_difference(double delta);
// Per-coordinate torus distance min(|d|, 2*pi - |d|), combined in the max norm.
double torus_distance(std::span<const double> a, std::span<const double> b);

LogPoint log_map(std::span<const Complex> z);
TorusPoint arg_map(std::span<const Complex> z);
LogPoint log_map(const LogJet& jet);
TorusPoint arg_map(const LogJet& jet);

std::vector<double> bergman_r(std::span<const double> x);
// Inverse of bergman_r on the open unit ball.
std::vector<double> bergman_r_inverse(std::span<const double> r);

// Real n x 2k Jacobian of t -> Log(rho(t)) (or Arg), with parameter columns
// ordered (x_1..x_k, y_1..y_k) for t_j = x_j + i y_j. Row-major.
struct RealJacobian {
  int rows = 0;
  int cols = 0;
  std::array<double, kMaxCoords * 2 * kMaxVars> entries{};

  double operator()(int r, int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
  double& operator()(int r, int c) { return entries[static_cast<std::size_t>(r * cols + c)]; }
};

RealJacobian real_jacobian(const LogJet& jet, MapKind map);

// sqrt of the sum of squared 2k x 2k minors: the 2k-volume distortion factor
// from parameter Lebesgue measure. Zero when 2k > n.
double generalized_jacobian(const LogJet& jet, MapKind map);

struct DensitySample {
  std::vector<Complex> t;
  double gen_jac_log = 0.0;
  double gen_jac_arg = 0.0;
};

DensitySample pullback_density(const Jet& jet);
DensitySample pullback_density(const LogJet& jet, std::span<const Complex> t);

// |det Log_I| and |det Arg_I| for every 2k-subset I of the coordinates,
// enumerated in lexicographic order.
struct MinorPair {
  std::vector<int> subset;
  double log_det = 0.0;
  double arg_det = 0.0;
};
std::vector<MinorPair> jacobian_minors(const LogJet& jet);

// All subsets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<int>> subsets(int n, int size);

}  // namespace amoeba
