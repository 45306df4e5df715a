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

#pragma once

#include <cmath>
#include <complex>

namespace amoeba {

// Complex number with an unbounded binary exponent: value = mantissa * 2^exponent,
// with max(|re|, |im|) of the mantissa in [0.5, 1). The exponent is a double
// holding an integer, so exp(t) stays representable for |Re t| far beyond 709.
// Only log-modulus, argument and ratios are ever read back at full range;
// to_complex() saturates to inf/0 outside the double range.
class WideComplex {
 public:
  WideComplex() = default;
  WideComplex(std::complex<double> c) : mantissa_(c) { normalize(); }  // NOLINT
  WideComplex(double re) : WideComplex(std::complex<double>(re, 0.0)) {}  // NOLINT

  static WideComplex from_parts(std::complex<double> mantissa, double exponent) {
    WideComplex w;
    w.mantissa_ = mantissa;
    w.exponent_ = exponent;
    w.normalize();
    return w;
  }

  std::complex<double> mantissa() const { return mantissa_; }
  double exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == std::complex<double>(0.0, 0.0); }
  bool is_finite() const {
    return std::isfinite(mantissa_.real()) && std::isfinite(mantissa_.imag()) &&
           std::isfinite(exponent_);
  }

  // ln|z|; -inf for zero.
  double log_abs() const {
    if (is_zero()) return -INFINITY;
    return std::log(std::abs(mantissa_)) + exponent_ * kLn2;
  }
  double arg() const { return std::arg(mantissa_); }

  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    if (exponent_ > 1100.0) {
      return {mantissa_.real() == 0.0 ? 0.0 : std::copysign(INFINITY, mantissa_.real()),
              mantissa_.imag() == 0.0 ? 0.0 : std::copysign(INFINITY, mantissa_.imag())};
    }
    if (exponent_ < -1100.0) return {0.0, 0.0};
    const int e = static_cast<int>(exponent_);
    return {std::ldexp(mantissa_.real(), e), std::ldexp(mantissa_.imag(), e)};
  }

  // Real and imaginary parts as plain doubles (saturating).
  double real() const { return to_complex().real(); }
  double imag() const { return to_complex().imag(); }

  WideComplex operator-() const { return from_parts(-mantissa_, exponent_); }

  friend WideComplex operator*(const WideComplex& a, const WideComplex& b) {
    return from_parts(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
  }
  friend WideComplex operator/(const WideComplex& a, const WideComplex& b) {
    return from_parts(a.mantissa_ / b.mantissa_, a.exponent_ - b.exponent_);
  }
  friend WideComplex operator+(const WideComplex& a, const WideComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const WideComplex& big = a.exponent_ >= b.exponent_ ? a : b;
    const WideComplex& small = a.exponent_ >= b.exponent_ ? b : a;
    const double shift = small.exponent_ - big.exponent_;
    if (shift < -1100.0) return big;
    const int s = static_cast<int>(shift);
    const std::complex<double> m(
        big.mantissa_.real() + std::ldexp(small.mantissa_.real(), s),
        big.mantissa_.imag() + std::ldexp(small.mantissa_.imag(), s));
    return from_parts(m, big.exponent_);
  }
  friend WideComplex operator-(const WideComplex& a, const WideComplex& b) { return a + (-b); }

  friend bool operator==(const WideComplex& a, const WideComplex& b) {
    return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
  }

 private:
  static constexpr double kLn2 = 0.69314718055994530942;

  void normalize() {
    if (is_zero()) {
      exponent_ = 0.0;
      return;
    }
    if (!std::isfinite(mantissa_.real()) || !std::isfinite(mantissa_.imag())) return;
    int shift = 0;
    std::frexp(std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag())), &shift);
    mantissa_ = {std::ldexp(mantissa_.real(), -shift), std::ldexp(mantissa_.imag(), -shift)};
    exponent_ += shift;
  }

  std::complex<double> mantissa_{0.0, 0.0};
  double exponent_ = 0.0;
};

inline WideComplex exp(const WideComplex& z) {
  constexpr double kLn2 = 0.69314718055994530942;
  const double x = z.real();
  const double y = z.imag();
  if (std::isnan(x) || std::isnan(y)) return WideComplex::from_parts({NAN, NAN}, 0.0);
  if (x == -INFINITY) return WideComplex();
  if (x == INFINITY) return WideComplex::from_parts({INFINITY, 0.0}, 0.0);
  if (std::abs(x) < 700.0) return WideComplex(std::exp(std::complex<double>(x, y)));
  const double q = std::floor(x / kLn2);
  const double r = x - q * kLn2;
  return WideComplex::from_parts(std::exp(r) * std::complex<double>(std::cos(y), std::sin(y)), q);
}

inline WideComplex sin(const WideComplex& z) {
  const double y = z.imag();
  if (std::abs(y) < 700.0 && std::isfinite(z.real())) return WideComplex(std::sin(z.to_complex()));
  const WideComplex iz = WideComplex(std::complex<double>(0.0, 1.0)) * z;
  return (exp(iz) - exp(-iz)) / WideComplex(std::complex<double>(0.0, 2.0));
}

inline WideComplex cos(const WideComplex& z) {
  const double y = z.imag();
  if (std::abs(y) < 700.0 && std::isfinite(z.real())) return WideComplex(std::cos(z.to_complex()));
  const WideComplex iz = WideComplex(std::complex<double>(0.0, 1.0)) * z;
  return (exp(iz) + exp(-iz)) / WideComplex(2.0);
}

}  // namespace amoeba
