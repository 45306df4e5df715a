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

// Complex expressions in k variables t1..tk, evaluated together with their
// holomorphic derivatives (forward mode, one dual slot per variable).
//
// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := number ['i'] | 'i' | 't' digits | func '(' expr ')' | '(' expr ')'
//   func    := exp | sin | cos

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amoeba {

inline constexpr int kMaxVars = 4;
inline constexpr int kMaxCoords = 8;

using Complex = std::complex<double>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coordinate evaluated to exactly zero (or underflowed): the point left the torus.
class ZeroCoordinate : public EvalError {
 public:
  explicit ZeroCoordinate(int coordinate);
  int coordinate() const { return coordinate_; }

 private:
  int coordinate_;
};

enum class Op { kLiteral, kVariable, kAdd, kSub, kMul, kDiv, kPow, kNeg, kExp, kSin, kCos };

struct ExprNode {
  Op op = Op::kLiteral;
  int lhs = -1;  // child node index (unary operand for kNeg/kExp/kSin/kCos/kPow)
  int rhs = -1;
  int integer = 0;  // variable index (0-based) or integer exponent
  Complex value{};  // literal value

  friend bool operator==(const ExprNode&, const ExprNode&) = default;
};

// Immutable expression tree stored as a topologically ordered node array; the
// root is the last node. Copyable, and safe to evaluate from many threads.
class ComplexExpr {
 public:
  ComplexExpr() = default;
  ComplexExpr(std::vector<ExprNode> nodes, int arity);

  const std::vector<ExprNode>& nodes() const { return nodes_; }
  int arity() const { return arity_; }
  bool empty() const { return nodes_.empty(); }

  friend bool operator==(const ComplexExpr& a, const ComplexExpr& b) { return a.nodes_ == b.nodes_; }

 private:
  std::vector<ExprNode> nodes_;
  int arity_ = 0;
};

ComplexExpr parse(std::string_view source, int arity);
std::string print(const ComplexExpr& expr);

// Evaluates a variable-free expression (used for constants on the command line).
Complex evaluate_constant(std::string_view source);

// Value and holomorphic Jacobian dz(i, j) = d z_i / d t_j.
struct Jet {
  int n = 0;
  int k = 0;
  std::vector<Complex> value;
  std::vector<Complex> dz;  // row-major n x k

  Complex derivative(int i, int j) const { return dz[static_cast<std::size_t>(i * k + j)]; }
};

// Logarithmic jet, computed in extended exponent range: ln|z_i|, arg z_i and
// w_ij = (d z_i / d t_j) / z_i. Everything the Log/Arg maps and their
// Jacobians need, without ever forming z_i itself.
struct LogJet {
  int n = 0;
  int k = 0;
  std::array<double, kMaxCoords> log_modulus{};
  std::array<double, kMaxCoords> angle{};  // principal argument in (-pi, pi]
  std::array<Complex, kMaxCoords * kMaxVars> w{};

  Complex log_derivative(int i, int j) const { return w[static_cast<std::size_t>(i * k + j)]; }
};

// Evaluator for a fixed list of components. Scratch space is thread-local,
// so a single instance may be shared across threads.
class JetEvaluator {
 public:
  JetEvaluator(std::vector<ComplexExpr> components, int arity);

  int n() const { return static_cast<int>(components_.size()); }
  int k() const { return arity_; }

  Jet jet(std::span<const Complex> t) const;
  // Throws ZeroCoordinate if some z_i == 0, EvalError on division by zero or
  // non-finite intermediate values.
  void log_jet(std::span<const Complex> t, LogJet& out) const;
  std::vector<Complex> values(std::span<const Complex> t) const;

 private:
  std::vector<ComplexExpr> components_;
  int arity_;
};

Complex evaluate(const ComplexExpr& expr, std::span<const Complex> t);
Jet eval_jet(std::span<const ComplexExpr> exprs, std::span<const Complex> t);

}  // namespace amoeba
