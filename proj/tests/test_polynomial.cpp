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

#include "amoeba/polynomial.hpp"

using namespace amoeba;

namespace {

bool contains(const std::vector<Complex>& roots, Complex z) {
  return std::any_of(roots.begin(), roots.end(), [&](Complex r) { return std::abs(r - z) < 1e-10; });
}

}  // namespace

TEST_CASE("roots of a product of linear factors") {
  // (z - 1)(z - 2)(z + i) = z^3 + (i - 3) z^2 + (2 - 3i) z + 2i
  const auto roots = polynomial_roots({{0, 2}, {2, -3}, {-3, 1}, {1, 0}});
  REQUIRE(roots);
  REQUIRE(roots->size() == 3);
  CHECK(contains(*roots, 1.0));
  CHECK(contains(*roots, 2.0));
  CHECK(contains(*roots, {0, -1}));
}

TEST_CASE("leading zeros lower the degree") {
  const auto roots = polynomial_roots({-4.0, 0.0, 1.0, 0.0, 1e-20});
  REQUIRE(roots);
  CHECK(roots->size() == 2);
  CHECK(contains(*roots, 2.0));
  CHECK(contains(*roots, -2.0));
  CHECK_FALSE(polynomial_roots({0.0, 0.0}).has_value());
}

TEST_CASE("coefficients recovered from an expression") {
  const BivariatePolynomial p = BivariatePolynomial::from_expression("t1^2+t2^2-1");
  CHECK(p.degree_x() == 2);
  CHECK(p.degree_y() == 2);
  CHECK(p.coeff(0, 0) == Complex(-1.0));
  CHECK(p.coeff(2, 0) == Complex(1.0));
  CHECK(p.coeff(0, 2) == Complex(1.0));
  CHECK(p.coeff(1, 1) == Complex(0.0));
  const BivariatePolynomial q = BivariatePolynomial::from_expression("(t1-2i*t2)^3");
  CHECK(std::abs(q.coeff(1, 2) - Complex(-12.0)) < 1e-12);
  CHECK(std::abs(q({0.3, 0.1}, {-0.7, 0.4}) - std::pow(Complex(0.3, 0.1) - Complex(0, 2) * Complex(-0.7, 0.4), 3)) < 1e-12);
}

TEST_CASE("non-polynomials are rejected") {
  CHECK_THROWS_AS(BivariatePolynomial::from_expression("exp(t1)+t2"), ParseError);
  CHECK_THROWS_AS(BivariatePolynomial::from_expression("t1^20+t2"), ParseError);
  CHECK_THROWS_AS(BivariatePolynomial::from_expression("1/t1+t2"), ParseError);
}

TEST_CASE("circle polynomial at x = 2") {
  const BivariatePolynomial p = BivariatePolynomial::from_expression("t1^2+t2^2-1");
  const auto roots = polynomial_roots(p.in_y(2.0));
  REQUIRE(roots);
  CHECK(contains(*roots, {0, std::sqrt(3.0)}));
  CHECK(contains(*roots, {0, -std::sqrt(3.0)}));
  // x = 1 leaves only y = 0, off the torus
  const auto at_one = polynomial_roots(p.in_y(1.0));
  REQUIRE(at_one);
  for (const Complex& y : *at_one) CHECK(std::abs(y) < 1e-7);
}

TEST_CASE("in_x and in_y describe the same polynomial") {
  const BivariatePolynomial p = BivariatePolynomial::from_expression("3*t1^2*t2 - t2^3 + 2i*t1 + 5");
  const Complex x(0.4, -1.1), y(1.3, 0.2);
  Complex via_y = 0.0, via_x = 0.0;
  const auto cy = p.in_y(x);
  for (auto it = cy.rbegin(); it != cy.rend(); ++it) via_y = via_y * y + *it;
  const auto cx = p.in_x(y);
  for (auto it = cx.rbegin(); it != cx.rend(); ++it) via_x = via_x * x + *it;
  CHECK(std::abs(via_x - via_y) < 1e-12);
  CHECK(std::abs(via_x - p(x, y)) < 1e-12);
}
