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

#include <optional>
#include <string_view>
#include <vector>

#include "amoeba/expr.hpp"

namespace amoeba {

// All roots of c[0] + c[1] z + ... + c[d] z^d by Aberth-Ehrlich iteration.
// Trailing (near-)zero leading coefficients lower the degree first. Returns
// nullopt if the iteration does not settle.
std::optional<std::vector<Complex>> polynomial_roots(std::vector<Complex> coeffs, int max_iterations = 500);

// p(x, y) = sum coeff[i][j] x^i y^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<std::vector<Complex>> coeffs);

  // Reads an expression in t1 (= x) and t2 (= y) and recovers its
  // coefficients by a 2D discrete Fourier transform; throws ParseError if the
  // expression is not a polynomial of degree <= max_degree in each variable.
  static BivariatePolynomial from_expression(std::string_view source, int max_degree = 16);

  int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_y() const;
  Complex coeff(int i, int j) const;
  Complex operator()(Complex x, Complex y) const;

  // Coefficients in y of p(x, .), lowest first.
  std::vector<Complex> in_y(Complex x) const;
  // Coefficients in x of p(., y), lowest first.
  std::vector<Complex> in_x(Complex y) const;

 private:
  std::vector<std::vector<Complex>> coeffs_;  // [i][j]
};

}  // namespace amoeba
