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

#include "amoeba/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace amoeba {

std::optional<std::vector<Complex>> polynomial_roots(std::vector<Complex> coeffs, int max_iterations) {
  double scale = 0.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return std::nullopt;
  while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-14 * scale) coeffs.pop_back();
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d <= 0) return std::vector<Complex>{};
  if (d == 1) return std::vector<Complex>{-coeffs[0] / coeffs[1]};

  // Monic form and a Cauchy-type radius for the starting circle.
  const Complex lead = coeffs.back();
  for (Complex& c : coeffs) c /= lead;
  double radius = 0.0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::abs(coeffs[static_cast<std::size_t>(i)]), 1.0 / (d - i)));
  radius = std::max(radius, 1e-3);

  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    z[static_cast<std::size_t>(i)] = std::polar(radius, 2.0 * std::numbers::pi * (i + 0.25) / d + 0.4);
  }
  auto eval = [&](Complex x, Complex& p, Complex& dp) {
    p = 1.0;
    dp = 0.0;
    for (int i = d - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + coeffs[static_cast<std::size_t>(i)];
    }
  };
  for (int it = 0; it < max_iterations; ++it) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      Complex p, dp;
      eval(z[ii], p, dp);
      if (p == Complex(0.0, 0.0)) continue;
      const Complex ratio = p / dp;
      Complex sum = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += 1.0 / (z[ii] - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
      z[ii] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[ii])));
    }
    if (worst <= 1e-14) return z;
  }
  return std::nullopt;
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<Complex>> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back({});
}

int BivariatePolynomial::degree_y() const {
  int d = -1;
  for (const auto& row : coeffs_) {
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
      if (row[static_cast<std::size_t>(j)] != Complex(0.0, 0.0)) {
        d = std::max(d, j);
        break;
      }
    }
  }
  return d;
}

Complex BivariatePolynomial::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
  const auto& row = coeffs_[static_cast<std::size_t>(i)];
  return j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : Complex(0.0, 0.0);
}

std::vector<Complex> BivariatePolynomial::in_y(Complex x) const {
  std::size_t width = 0;
  for (const auto& row : coeffs_) width = std::max(width, row.size());
  std::vector<Complex> out(width, Complex(0.0, 0.0));
  Complex xp = 1.0;
  for (const auto& row : coeffs_) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j] * xp;
    xp *= x;
  }
  return out;
}

std::vector<Complex> BivariatePolynomial::in_x(Complex y) const {
  std::vector<Complex> out;
  for (const auto& row : coeffs_) {
    Complex v = 0.0;
    for (auto it = row.rbegin(); it != row.rend(); ++it) v = v * y + *it;
    out.push_back(v);
  }
  return out;
}

Complex BivariatePolynomial::operator()(Complex x, Complex y) const {
  const std::vector<Complex> q = in_y(x);
  Complex v = 0.0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) v = v * y + *it;
  return v;
}

BivariatePolynomial BivariatePolynomial::from_expression(std::string_view source, int max_degree) {
  const ComplexExpr expr = parse(source, 2);
  const int m = max_degree + 1;
  std::vector<std::vector<Complex>> values(static_cast<std::size_t>(m), std::vector<Complex>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Complex t[2] = {std::polar(1.0, 2.0 * std::numbers::pi * a / m), std::polar(1.0, 2.0 * std::numbers::pi * b / m)};
      try {
        values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = evaluate(expr, t);
      } catch (const EvalError&) {
        throw ParseError("not a polynomial in t1, t2", 0);
      }
    }
  }
  std::vector<std::vector<Complex>> coeffs(static_cast<std::size_t>(m), std::vector<Complex>(static_cast<std::size_t>(m)));
  double scale = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Complex sum = 0.0;
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          sum += values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                 std::polar(1.0, -2.0 * std::numbers::pi * (static_cast<double>(i * a) + static_cast<double>(j * b)) / m);
        }
      }
      sum /= static_cast<double>(m * m);
      coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sum;
      scale = std::max(scale, std::abs(sum));
    }
  }
  for (auto& row : coeffs) {
    for (Complex& c : row) {
      // snap transform noise, then integers and exact zeros back to exact values
      if (std::abs(c) <= 1e-12 * std::max(scale, 1.0)) c = 0.0;
      const Complex r(std::round(c.real()), std::round(c.imag()));
      if (std::abs(c - r) <= 1e-12 * std::max(scale, 1.0)) c = r;
    }
  }
  while (coeffs.size() > 1 && std::all_of(coeffs.back().begin(), coeffs.back().end(), [](Complex c) { return c == Complex(0.0, 0.0); })) {
    coeffs.pop_back();
  }
  for (auto& row : coeffs) {
    while (!row.empty() && row.back() == Complex(0.0, 0.0)) row.pop_back();
  }
  BivariatePolynomial poly(std::move(coeffs));
  // Aliasing check off the sampling grid.
  const Complex probes[4][2] = {
      {{0.7, 0.3}, {-1.3, 0.5}}, {{1.9, -0.4}, {0.2, 1.1}}, {{-0.6, -1.7}, {1.4, 0.9}}, {{3.9, -1.1}, {2.2, 3.3}}};
  for (const auto& p : probes) {
    const Complex want = evaluate(expr, p);
    const Complex got = poly(p[0], p[1]);
    if (std::abs(want - got) > 1e-8 * (1.0 + std::abs(want))) {
      throw ParseError("expression is not a polynomial of degree <= " + std::to_string(max_degree) + " in t1, t2", 0);
    }
  }
  return poly;
}

}  // namespace amoeba
