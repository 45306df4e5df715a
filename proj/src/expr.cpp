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

#include "amoeba/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "amoeba/wide_complex.hpp"

namespace amoeba {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

ZeroCoordinate::ZeroCoordinate(int coordinate)
    : EvalError("coordinate z" + std::to_string(coordinate + 1) + " vanishes"),
      coordinate_(coordinate) {}

ComplexExpr::ComplexExpr(std::vector<ExprNode> nodes, int arity)
    : nodes_(std::move(nodes)), arity_(arity) {}

namespace {

class Parser {
 public:
  Parser(std::string_view src, int arity) : src_(src), arity_(arity) {}

  ComplexExpr run() {
    if (arity_ < 0 || arity_ > kMaxVars) {
      throw ParseError("arity must be between 0 and " + std::to_string(kMaxVars), 0);
    }
    skip_space();
    if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
    expr();
    skip_space();
    if (pos_ < src_.size()) {
      throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
    }
    return ComplexExpr(std::move(nodes_), arity_);
  }

 private:
  int push(ExprNode node) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  int expr() {
    int lhs = term();
    while (true) {
      if (accept('+')) {
        const int rhs = term();
        lhs = push({Op::kAdd, lhs, rhs, 0, {}});
      } else if (accept('-')) {
        const int rhs = term();
        lhs = push({Op::kSub, lhs, rhs, 0, {}});
      } else {
        return lhs;
      }
    }
  }

  int term() {
    int lhs = unary();
    while (true) {
      if (accept('*')) {
        const int rhs = unary();
        lhs = push({Op::kMul, lhs, rhs, 0, {}});
      } else if (accept('/')) {
        const int rhs = unary();
        lhs = push({Op::kDiv, lhs, rhs, 0, {}});
      } else {
        return lhs;
      }
    }
  }

  int unary() {
    if (accept('-')) {
      const int operand = unary();
      return push({Op::kNeg, operand, -1, 0, {}});
    }
    return power();
  }

  int power() {
    const int base = primary();
    if (!accept('^')) return base;
    const int exponent = integer_exponent();
    return push({Op::kPow, base, -1, exponent, {}});
  }

  int integer_exponent() {
    skip_space();
    const bool paren = accept('(');
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      throw ParseError("exponent must be an integer literal", start);
    }
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
                               src_[pos_] == 'i')) {
      throw ParseError("non-integer exponent", start);
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || value > 64) throw ParseError("exponent out of range", start);
    if (paren) expect(')');
    return negative ? -value : value;
  }

  int primary() {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      const int inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) throw ParseError("malformed number '" + text + "'", start);
    if (pos_ < src_.size() && src_[pos_] == 'i' &&
        !(pos_ + 1 < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
      ++pos_;
      return push({Op::kLiteral, -1, -1, 0, Complex(0.0, value)});
    }
    return push({Op::kLiteral, -1, -1, 0, Complex(value, 0.0)});
  }

  int identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t letters_end = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    const std::string_view letters = src_.substr(start, letters_end - start);

    if (name == "i") return push({Op::kLiteral, -1, -1, 0, Complex(0.0, 1.0)});
    if (letters == "t" && pos_ > letters_end) {
      int index = 0;
      std::from_chars(src_.data() + letters_end, src_.data() + pos_, index);
      if (index < 1 || index > arity_) {
        throw ParseError("variable '" + std::string(name) + "' outside t1..t" + std::to_string(arity_), start);
      }
      return push({Op::kVariable, -1, -1, index - 1, {}});
    }
    Op op;
    if (name == "exp") {
      op = Op::kExp;
    } else if (name == "sin") {
      op = Op::kSin;
    } else if (name == "cos") {
      op = Op::kCos;
    } else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    expect('(');
    const int operand = expr();
    expect(')');
    return push({op, operand, -1, 0, {}});
  }

  std::string_view src_;
  int arity_;
  std::size_t pos_ = 0;
  std::vector<ExprNode> nodes_;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string print_node(const std::vector<ExprNode>& nodes, int index) {
  const ExprNode& node = nodes[static_cast<std::size_t>(index)];
  switch (node.op) {
    case Op::kLiteral: {
      const double re = node.value.real();
      const double im = node.value.imag();
      if (im == 0.0 && !std::signbit(re)) return format_double(re);
      if (re == 0.0 && !std::signbit(re) && !std::signbit(im)) return format_double(im) + "i";
      return "(" + format_double(re) + (std::signbit(im) ? "-" : "+") + format_double(std::abs(im)) + "i)";
    }
    case Op::kVariable:
      return "t" + std::to_string(node.integer + 1);
    case Op::kAdd:
      return "(" + print_node(nodes, node.lhs) + "+" + print_node(nodes, node.rhs) + ")";
    case Op::kSub:
      return "(" + print_node(nodes, node.lhs) + "-" + print_node(nodes, node.rhs) + ")";
    case Op::kMul:
      return "(" + print_node(nodes, node.lhs) + "*" + print_node(nodes, node.rhs) + ")";
    case Op::kDiv:
      return "(" + print_node(nodes, node.lhs) + "/" + print_node(nodes, node.rhs) + ")";
    case Op::kPow:
      return "(" + print_node(nodes, node.lhs) + "^" +
             (node.integer < 0 ? "(" + std::to_string(node.integer) + ")" : std::to_string(node.integer)) + ")";
    case Op::kNeg:
      return "(-" + print_node(nodes, node.lhs) + ")";
    case Op::kExp:
      return "exp(" + print_node(nodes, node.lhs) + ")";
    case Op::kSin:
      return "sin(" + print_node(nodes, node.lhs) + ")";
    case Op::kCos:
      return "cos(" + print_node(nodes, node.lhs) + ")";
  }
  return {};
}

// Forward-mode dual number over a scalar type (std::complex or WideComplex).
template <class S>
struct Dual {
  S v;
  std::array<S, kMaxVars> d;
};

inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
inline bool is_zero(const WideComplex& z) { return z.is_zero(); }

template <class S>
S ipow(S base, int n) {
  S result(1.0);
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

template <class S>
void evaluate_nodes(const std::vector<ExprNode>& nodes, int k, std::span<const Complex> t,
                    std::vector<Dual<S>>& scratch) {
  scratch.resize(nodes.size());
  const S zero(0.0);
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const ExprNode& node = nodes[idx];
    Dual<S>& out = scratch[idx];
    out.d.fill(zero);
    switch (node.op) {
      case Op::kLiteral:
        out.v = S(node.value);
        break;
      case Op::kVariable:
        out.v = S(t[static_cast<std::size_t>(node.integer)]);
        out.d[static_cast<std::size_t>(node.integer)] = S(1.0);
        break;
      case Op::kAdd: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        const Dual<S>& b = scratch[static_cast<std::size_t>(node.rhs)];
        out.v = a.v + b.v;
        for (int j = 0; j < k; ++j) out.d[j] = a.d[j] + b.d[j];
        break;
      }
      case Op::kSub: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        const Dual<S>& b = scratch[static_cast<std::size_t>(node.rhs)];
        out.v = a.v - b.v;
        for (int j = 0; j < k; ++j) out.d[j] = a.d[j] - b.d[j];
        break;
      }
      case Op::kMul: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        const Dual<S>& b = scratch[static_cast<std::size_t>(node.rhs)];
        out.v = a.v * b.v;
        for (int j = 0; j < k; ++j) out.d[j] = a.d[j] * b.v + a.v * b.d[j];
        break;
      }
      case Op::kDiv: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        const Dual<S>& b = scratch[static_cast<std::size_t>(node.rhs)];
        if (is_zero(b.v)) throw EvalError("division by zero");
        const S q = a.v / b.v;
        out.v = q;
        for (int j = 0; j < k; ++j) out.d[j] = (a.d[j] - q * b.d[j]) / b.v;
        break;
      }
      case Op::kPow: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        const int n = node.integer;
        if (n == 0) {
          out.v = S(1.0);
          break;
        }
        if (n < 0 && is_zero(a.v)) throw EvalError("division by zero");
        const int m = n < 0 ? -n : n;
        const S lower = ipow(a.v, m - 1);
        const S full = lower * a.v;
        // d(a^n) = n a^(n-1) da
        S slope;
        if (n > 0) {
          out.v = full;
          slope = S(static_cast<double>(n)) * lower;
        } else {
          out.v = S(1.0) / full;
          slope = S(static_cast<double>(n)) * out.v / a.v;
        }
        for (int j = 0; j < k; ++j) out.d[j] = slope * a.d[j];
        break;
      }
      case Op::kNeg: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        out.v = -a.v;
        for (int j = 0; j < k; ++j) out.d[j] = -a.d[j];
        break;
      }
      case Op::kExp: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        using std::exp;
        out.v = exp(a.v);
        for (int j = 0; j < k; ++j) out.d[j] = out.v * a.d[j];
        break;
      }
      case Op::kSin: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        using std::cos;
        using std::sin;
        out.v = sin(a.v);
        const S slope = cos(a.v);
        for (int j = 0; j < k; ++j) out.d[j] = slope * a.d[j];
        break;
      }
      case Op::kCos: {
        const Dual<S>& a = scratch[static_cast<std::size_t>(node.lhs)];
        using std::cos;
        using std::sin;
        out.v = cos(a.v);
        const S slope = -sin(a.v);
        for (int j = 0; j < k; ++j) out.d[j] = slope * a.d[j];
        break;
      }
    }
  }
}

template <class S>
std::vector<Dual<S>>& scratch_buffer() {
  thread_local std::vector<Dual<S>> buffer;
  return buffer;
}

void check_arity(std::span<const Complex> t, int k) {
  if (static_cast<int>(t.size()) != k) {
    throw EvalError("expected " + std::to_string(k) + " parameters, got " + std::to_string(t.size()));
  }
}

}  // namespace

ComplexExpr parse(std::string_view source, int arity) { return Parser(source, arity).run(); }

std::string print(const ComplexExpr& expr) {
  if (expr.empty()) return {};
  return print_node(expr.nodes(), static_cast<int>(expr.nodes().size()) - 1);
}

Complex evaluate_constant(std::string_view source) {
  const ComplexExpr expr = parse(source, 0);
  return evaluate(expr, {});
}

Complex evaluate(const ComplexExpr& expr, std::span<const Complex> t) {
  check_arity(t, expr.arity());
  auto& scratch = scratch_buffer<Complex>();
  evaluate_nodes(expr.nodes(), expr.arity(), t, scratch);
  return scratch.back().v;
}

Jet eval_jet(std::span<const ComplexExpr> exprs, std::span<const Complex> t) {
  Jet jet;
  jet.n = static_cast<int>(exprs.size());
  jet.k = static_cast<int>(t.size());
  jet.value.resize(exprs.size());
  jet.dz.resize(exprs.size() * t.size());
  auto& scratch = scratch_buffer<Complex>();
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    check_arity(t, exprs[i].arity());
    evaluate_nodes(exprs[i].nodes(), jet.k, t, scratch);
    const Dual<Complex>& root = scratch.back();
    jet.value[i] = root.v;
    for (int j = 0; j < jet.k; ++j) jet.dz[i * t.size() + static_cast<std::size_t>(j)] = root.d[j];
  }
  return jet;
}

JetEvaluator::JetEvaluator(std::vector<ComplexExpr> components, int arity)
    : components_(std::move(components)), arity_(arity) {
  if (components_.empty() || static_cast<int>(components_.size()) > kMaxCoords) {
    throw EvalError("number of components must be between 1 and " + std::to_string(kMaxCoords));
  }
  for (const auto& c : components_) {
    if (c.arity() != arity_) throw EvalError("component arity mismatch");
  }
}

Jet JetEvaluator::jet(std::span<const Complex> t) const { return eval_jet(components_, t); }

std::vector<Complex> JetEvaluator::values(std::span<const Complex> t) const {
  std::vector<Complex> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(evaluate(c, t));
  return out;
}

void JetEvaluator::log_jet(std::span<const Complex> t, LogJet& out) const {
  check_arity(t, arity_);
  out.n = n();
  out.k = arity_;
  auto& scratch = scratch_buffer<WideComplex>();
  for (int i = 0; i < out.n; ++i) {
    evaluate_nodes(components_[static_cast<std::size_t>(i)].nodes(), arity_, t, scratch);
    const Dual<WideComplex>& root = scratch.back();
    if (!root.v.is_finite()) throw EvalError("non-finite value in coordinate z" + std::to_string(i + 1));
    if (root.v.is_zero()) throw ZeroCoordinate(i);
    out.log_modulus[static_cast<std::size_t>(i)] = root.v.log_abs();
    out.angle[static_cast<std::size_t>(i)] = root.v.arg();
    for (int j = 0; j < arity_; ++j) {
      const Complex w = (root.d[static_cast<std::size_t>(j)] / root.v).to_complex();
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw EvalError("non-finite derivative in coordinate z" + std::to_string(i + 1));
      }
      out.w[static_cast<std::size_t>(i * arity_ + j)] = w;
    }
  }
}

}  // namespace amoeba
