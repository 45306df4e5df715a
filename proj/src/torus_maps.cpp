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

#include "amoeba/torus_maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amoeba {

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double wrap_difference(double delta) {
  double d = std::fmod(delta, kTwoPi);
  if (d > std::numbers::pi) d -= kTwoPi;
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

double torus_distance(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(wrap_difference(a[i] - b[i]));
    worst = std::max(worst, std::min(d, kTwoPi - d));
  }
  return worst;
}

LogPoint log_map(std::span<const Complex> z) {
  LogPoint p;
  p.coords.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double m = std::abs(z[i]);
    if (m == 0.0) throw ZeroCoordinate(static_cast<int>(i));
    p.coords.push_back(std::log(m));
  }
  return p;
}

TorusPoint arg_map(std::span<const Complex> z) {
  TorusPoint p;
  p.angles.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == Complex(0.0, 0.0)) throw ZeroCoordinate(static_cast<int>(i));
    p.angles.push_back(wrap_angle(std::arg(z[i])));
  }
  return p;
}

LogPoint log_map(const LogJet& jet) {
  return {std::vector<double>(jet.log_modulus.begin(), jet.log_modulus.begin() + jet.n)};
}

TorusPoint arg_map(const LogJet& jet) {
  TorusPoint p;
  for (int i = 0; i < jet.n; ++i) p.angles.push_back(wrap_angle(jet.angle[static_cast<std::size_t>(i)]));
  return p;
}

std::vector<double> bergman_r(std::span<const double> x) {
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  const double scale = 1.0 / (1.0 + std::sqrt(norm2));
  std::vector<double> out(x.begin(), x.end());
  for (double& v : out) v *= scale;
  return out;
}

std::vector<double> bergman_r_inverse(std::span<const double> r) {
  double norm2 = 0.0;
  for (double v : r) norm2 += v * v;
  const double norm = std::sqrt(norm2);
  if (norm >= 1.0) throw std::domain_error("bergman_r_inverse: point outside the open unit ball");
  std::vector<double> out(r.begin(), r.end());
  for (double& v : out) v /= (1.0 - norm);
  return out;
}

RealJacobian real_jacobian(const LogJet& jet, MapKind map) {
  RealJacobian jac;
  jac.rows = jet.n;
  jac.cols = 2 * jet.k;
  for (int i = 0; i < jet.n; ++i) {
    for (int j = 0; j < jet.k; ++j) {
      const Complex w = jet.log_derivative(i, j);
      if (map == MapKind::kLog) {
        // d ln|z| = Re(w dt) = Re w dx - Im w dy
        jac(i, j) = w.real();
        jac(i, jet.k + j) = -w.imag();
      } else {
        // d arg z = Im(w dt) = Im w dx + Re w dy
        jac(i, j) = w.imag();
        jac(i, jet.k + j) = w.real();
      }
    }
  }
  return jac;
}

std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > n) return out;
  std::vector<int> current(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int pos = size - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < size; ++i) {
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

namespace {

const std::vector<std::vector<int>>& cached_subsets(int n, int size) {
  static const auto table = [] {
    std::vector<std::vector<std::vector<std::vector<int>>>> t(kMaxCoords + 1);
    for (int nn = 0; nn <= kMaxCoords; ++nn) {
      t[static_cast<std::size_t>(nn)].resize(static_cast<std::size_t>(nn) + 1);
      for (int s = 0; s <= nn; ++s) t[static_cast<std::size_t>(nn)][static_cast<std::size_t>(s)] = subsets(nn, s);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(size)];
}

// Determinant of an m x m row-major matrix by Gaussian elimination with
// partial pivoting. Destroys `a`.
double determinant(double* a, int m) {
  if (m == 2) return a[0] * a[3] - a[1] * a[2];
  double det = 1.0;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    double best = std::abs(a[col * m + col]);
    for (int r = col + 1; r < m; ++r) {
      const double v = std::abs(a[r * m + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < m; ++c) std::swap(a[col * m + c], a[pivot * m + c]);
      det = -det;
    }
    const double diag = a[col * m + col];
    det *= diag;
    for (int r = col + 1; r < m; ++r) {
      const double factor = a[r * m + col] / diag;
      if (factor == 0.0) continue;
      for (int c = col + 1; c < m; ++c) a[r * m + c] -= factor * a[col * m + c];
    }
  }
  return det;
}

double minor_det(const RealJacobian& jac, std::span<const int> rows) {
  const int m = jac.cols;
  std::array<double, 4 * kMaxVars * kMaxVars> buf{};
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) buf[static_cast<std::size_t>(r * m + c)] = jac(rows[static_cast<std::size_t>(r)], c);
  }
  return determinant(buf.data(), m);
}

}  // namespace

double generalized_jacobian(const LogJet& jet, MapKind map) {
  const int m = 2 * jet.k;
  if (m > jet.n) return 0.0;
  const RealJacobian jac = real_jacobian(jet, map);
  double sum = 0.0;
  for (const auto& rows : cached_subsets(jet.n, m)) {
    const double d = minor_det(jac, rows);
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::vector<MinorPair> jacobian_minors(const LogJet& jet) {
  std::vector<MinorPair> out;
  const int m = 2 * jet.k;
  if (m > jet.n) return out;
  const RealJacobian log_jac = real_jacobian(jet, MapKind::kLog);
  const RealJacobian arg_jac = real_jacobian(jet, MapKind::kArg);
  for (const auto& rows : cached_subsets(jet.n, m)) {
    out.push_back({rows, std::abs(minor_det(log_jac, rows)), std::abs(minor_det(arg_jac, rows))});
  }
  return out;
}

DensitySample pullback_density(const LogJet& jet, std::span<const Complex> t) {
  return {std::vector<Complex>(t.begin(), t.end()), generalized_jacobian(jet, MapKind::kLog),
          generalized_jacobian(jet, MapKind::kArg)};
}

DensitySample pullback_density(const Jet& jet) {
  LogJet lj;
  lj.n = jet.n;
  lj.k = jet.k;
  if (jet.n > kMaxCoords || jet.k > kMaxVars) throw EvalError("jet dimensions exceed supported maximum");
  for (int i = 0; i < jet.n; ++i) {
    const Complex z = jet.value[static_cast<std::size_t>(i)];
    if (z == Complex(0.0, 0.0)) throw ZeroCoordinate(i);
    lj.log_modulus[static_cast<std::size_t>(i)] = std::log(std::abs(z));
    lj.angle[static_cast<std::size_t>(i)] = std::arg(z);
    for (int j = 0; j < jet.k; ++j) lj.w[static_cast<std::size_t>(i * jet.k + j)] = jet.derivative(i, j) / z;
  }
  return {{}, generalized_jacobian(lj, MapKind::kLog), generalized_jacobian(lj, MapKind::kArg)};
}

}  // namespace amoeba
