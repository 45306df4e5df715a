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
#include <random>

#include "amoeba/expr.hpp"
#include "amoeba/wide_complex.hpp"

using namespace amoeba;

namespace {

const char* kGallery[] = {"t1",       "exp(t1)",   "cos(t1)", "sin(t1)", "t1+1", "1+t1",
                          "(1+0i)+(2+0i)*t1", "(0+1i)+(2+0i)*t1", "2+3*t1-t2", "t1^2*exp(-t1)/(1+t2)"};

int arity_of(const char* s) { return std::string(s).find("t2") != std::string::npos ? 2 : 1; }

}  // namespace

TEST_CASE("parse and print round trip") {
  for (const char* s : kGallery) {
    const ComplexExpr e = parse(s, arity_of(s));
    CHECK(parse(print(e), arity_of(s)) == e);
  }
  const ComplexExpr lit = parse("2.5e-3*t1 - (1-2i)/t1^-3", 1);
  CHECK(parse(print(lit), 1) == lit);
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(parse("t1 +", 1), ParseError);
  try {
    parse("1 + foo(t1)", 1);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse("t2", 1), ParseError);
  CHECK_THROWS_AS(parse("t1^t1", 1), ParseError);
  CHECK_THROWS_AS(parse("(t1", 1), ParseError);
}

TEST_CASE("constants") {
  CHECK(std::abs(evaluate_constant("(1+2i)*(3-i)") - Complex(5, 5)) < 1e-14);
  CHECK(std::abs(evaluate_constant("exp(i*3.141592653589793)") - Complex(-1, 0)) < 1e-14);
}

TEST_CASE("forward derivatives agree with central differences") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double h = 1e-5;
  double worst = 0.0;
  for (const char* s : kGallery) {
    const int k = arity_of(s);
    const ComplexExpr e = parse(s, k);
    const std::vector<ComplexExpr> one{e};
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Complex> t(static_cast<std::size_t>(k));
      for (auto& c : t) c = {u(gen), u(gen)};
      if (k == 2 && std::abs(1.0 + t[1]) < 0.2) continue;
      const Jet jet = eval_jet(one, t);
      for (int j = 0; j < k; ++j) {
        auto plus = t, minus = t;
        plus[static_cast<std::size_t>(j)] += h;
        minus[static_cast<std::size_t>(j)] -= h;
        const Complex fd = (evaluate(e, plus) - evaluate(e, minus)) / (2 * h);
        const Complex ad = jet.derivative(0, j);
        worst = std::max(worst, std::abs(fd - ad) / std::max(1.0, std::abs(ad)));
      }
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("log jet matches direct evaluation") {
  const JetEvaluator ev({parse("t1", 1), parse("exp(t1)", 1), parse("t1+1", 1)}, 1);
  const Complex t[1] = {{0.3, -1.2}};
  LogJet lj;
  ev.log_jet(t, lj);
  const Complex z[3] = {t[0], std::exp(t[0]), t[0] + 1.0};
  for (int i = 0; i < 3; ++i) {
    CHECK(lj.log_modulus[static_cast<std::size_t>(i)] == doctest::Approx(std::log(std::abs(z[i]))).epsilon(1e-14));
    CHECK(lj.angle[static_cast<std::size_t>(i)] == doctest::Approx(std::arg(z[i])).epsilon(1e-14));
  }
  CHECK(std::abs(lj.log_derivative(1, 0) - 1.0) < 1e-14);
  CHECK(std::abs(lj.log_derivative(2, 0) - 1.0 / (t[0] + 1.0)) < 1e-14);
}

TEST_CASE("extended range keeps exp(t) finite far out") {
  const JetEvaluator ev({parse("t1", 1), parse("exp(t1)", 1)}, 1);
  const Complex t[1] = {{5000.0, 2.0}};
  LogJet lj;
  ev.log_jet(t, lj);
  CHECK(lj.log_modulus[1] == doctest::Approx(5000.0));
  CHECK(lj.angle[1] == doctest::Approx(2.0));
  const WideComplex big = WideComplex(1e300) * WideComplex(1e300);
  CHECK(big.log_abs() == doctest::Approx(600 * std::log(10.0)));
}

TEST_CASE("zero coordinate is reported") {
  const JetEvaluator ev({parse("t1", 1), parse("1+t1", 1)}, 1);
  const Complex t[1] = {{-1.0, 0.0}};
  LogJet lj;
  CHECK_THROWS_AS(ev.log_jet(t, lj), ZeroCoordinate);
}
