// Copyright 2026 The gpauli Authors
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

#include "gpauli/ratefn.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "gpauli/errors.hpp"

namespace gpauli {

enum class Op { number, var, neg, add, sub, mul, div, pow, tanh, exp, ln, cosh, sinh };

struct RateExpr::Node {
  Op op = Op::number;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const RateExpr::Node>;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
  auto n = std::make_shared<RateExpr::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->value = value;
  return n;
}

struct FunctionName {
  std::string_view name;
  Op op;
};

constexpr FunctionName kUnaryFunctions[] = {
    {"tanh", Op::tanh}, {"exp", Op::exp}, {"ln", Op::ln}, {"cosh", Op::cosh}, {"sinh", Op::sinh},
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    NodePtr root = expression();
    skip_space();
    if (pos_ != src_.size()) fail(std::string("unexpected character '") + src_[pos_] + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

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
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Op::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = power();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::mul, lhs, power());
      } else if (accept('/')) {
        lhs = make(Op::div, lhs, power());
      } else {
        return lhs;
      }
    }
  }

  NodePtr power() {
    NodePtr lhs = unary();
    while (accept('^')) lhs = make(Op::pow, lhs, unary());
    return lhs;
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::neg, unary());
    if (accept('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (accept('(')) {
      NodePtr inner = expression();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits();
      } else {
        pos_ = save;
      }
    }
    double value = 0.0;
    const auto text = src_.substr(start, pos_ - start);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      pos_ = start;
      fail("malformed number '" + std::string(text) + "'");
    }
    return make(Op::number, nullptr, nullptr, value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "t") return make(Op::var);
    if (name == "pow") {
      expect('(');
      NodePtr base = expression();
      expect(',');
      NodePtr exponent = expression();
      expect(')');
      return make(Op::pow, base, exponent);
    }
    for (const auto& f : kUnaryFunctions) {
      if (name == f.name) {
        expect('(');
        NodePtr arg = expression();
        expect(')');
        return make(f.op, arg);
      }
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::add:
    case Op::sub:
      return 1;
    case Op::mul:
    case Op::div:
      return 2;
    case Op::neg:
      return 3;
    default:
      return 4;
  }
}

void print(const RateExpr::Node& n, std::ostringstream& out) {
  auto child = [&out](const RateExpr::Node& c, bool parens) {
    if (parens) out << '(';
    print(c, out);
    if (parens) out << ')';
  };
  switch (n.op) {
    case Op::number:
      out << format_double(n.value);
      return;
    case Op::var:
      out << 't';
      return;
    case Op::neg:
      out << '-';
      child(*n.lhs, precedence(n.lhs->op) < 3);
      return;
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div: {
      const int p = precedence(n.op);
      const char* sym = n.op == Op::add ? " + " : n.op == Op::sub ? " - " : n.op == Op::mul ? "*" : "/";
      child(*n.lhs, precedence(n.lhs->op) < p);
      out << sym;
      child(*n.rhs, precedence(n.rhs->op) <= p);
      return;
    }
    case Op::pow:
      out << "pow(";
      print(*n.lhs, out);
      out << ", ";
      print(*n.rhs, out);
      out << ')';
      return;
    default:
      for (const auto& f : kUnaryFunctions) {
        if (f.op == n.op) out << f.name;
      }
      out << '(';
      print(*n.lhs, out);
      out << ')';
      return;
  }
}

double checked(double v, const char* what, double t) {
  if (!std::isfinite(v)) {
    throw EvaluationError(std::string(what) + " produced a non-finite value at t = " + format_double(t));
  }
  return v;
}

double eval(const RateExpr::Node& n, double t) {
  switch (n.op) {
    case Op::number:
      return n.value;
    case Op::var:
      return t;
    case Op::neg:
      return -eval(*n.lhs, t);
    case Op::add:
      return checked(eval(*n.lhs, t) + eval(*n.rhs, t), "addition", t);
    case Op::sub:
      return checked(eval(*n.lhs, t) - eval(*n.rhs, t), "subtraction", t);
    case Op::mul:
      return checked(eval(*n.lhs, t) * eval(*n.rhs, t), "multiplication", t);
    case Op::div: {
      const double num = eval(*n.lhs, t);
      const double den = eval(*n.rhs, t);
      if (den == 0.0) throw EvaluationError("division by zero at t = " + format_double(t));
      return checked(num / den, "division", t);
    }
    case Op::pow:
      return checked(std::pow(eval(*n.lhs, t), eval(*n.rhs, t)), "pow", t);
    case Op::tanh:
      return std::tanh(eval(*n.lhs, t));
    case Op::exp:
      return checked(std::exp(eval(*n.lhs, t)), "exp", t);
    case Op::ln: {
      const double x = eval(*n.lhs, t);
      if (!(x > 0.0)) {
        throw EvaluationError("ln of nonpositive argument " + format_double(x) + " at t = " + format_double(t));
      }
      return std::log(x);
    }
    case Op::cosh:
      return checked(std::cosh(eval(*n.lhs, t)), "cosh", t);
    case Op::sinh:
      return checked(std::sinh(eval(*n.lhs, t)), "sinh", t);
  }
  throw EvaluationError("corrupt expression node");
}

struct SimpsonPanel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const RateExpr& expr, double tol) : expr_(expr), tol_(tol) {}

  double f(double t) {
    ++evaluations_;
    return expr_.evaluate(t);
  }

  SimpsonPanel panel(double a, double b, double fa, double fb) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    return {a, m, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb)};
  }

  double refine(const SimpsonPanel& p, double tol, int depth) {
    const SimpsonPanel left = panel(p.a, p.m, p.fa, p.fm);
    const SimpsonPanel right = panel(p.m, p.b, p.fm, p.fb);
    const double sum = left.whole + right.whole;
    const double delta = sum - p.whole;
    // Roundoff floor: the two estimates cannot agree better than a few ulps of the sum.
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * std::abs(sum);
    if (std::abs(delta) <= 15.0 * std::max(tol, floor)) {
      error_ += std::abs(delta) / 15.0;
      return sum + delta / 15.0;
    }
    if (depth <= 0) {
      std::ostringstream msg;
      msg << "adaptive Simpson did not converge on [" << format_double(p.a) << ", " << format_double(p.b)
          << "]: estimate change " << format_double(std::abs(delta)) << " exceeds tolerance "
          << format_double(15.0 * tol) << " after " << kMaxBisectionDepth << " bisections";
      throw QuadratureError(msg.str());
    }
    return refine(left, 0.5 * tol, depth - 1) + refine(right, 0.5 * tol, depth - 1);
  }

  QuadratureResult run(double t0, double t1) {
    const SimpsonPanel root = panel(t0, t1, f(t0), f(t1));
    const double value = refine(root, tol_, kMaxBisectionDepth);
    return {value, error_, evaluations_};
  }

 private:
  const RateExpr& expr_;
  double tol_;
  double error_ = 0.0;
  long evaluations_ = 0;
};

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

RateExpr parse(std::string_view source) {
  Parser parser(source);
  NodePtr root = parser.parse_all();
  return RateExpr(std::string(source), std::move(root));
}

std::string RateExpr::to_string() const {
  std::ostringstream out;
  print(*root_, out);
  return out.str();
}

double RateExpr::evaluate(double t) const {
  if (!std::isfinite(t)) throw EvaluationError("evaluation time must be finite");
  return checked(eval(*root_, t), "expression", t);
}

QuadratureResult integrate_adaptive(const RateExpr& expr, double t0, double t1, double tol) {
  if (!std::isfinite(t0) || !std::isfinite(t1)) throw InvalidInput("integration bounds must be finite");
  if (t1 < t0) throw InvalidInput("integration requires t1 >= t0");
  if (!(tol > 0.0)) throw InvalidInput("integration tolerance must be positive");
  if (t1 == t0) return {};
  AdaptiveSimpson engine(expr, tol);
  return engine.run(t0, t1);
}

RateSet::RateSet(int dim, std::vector<RateExpr> rates, std::string label)
    : dim_(dim), rates_(std::move(rates)), label_(std::move(label)) {
  if (dim_ < 2) throw InvalidInput("rate set dimension must be >= 2, got " + std::to_string(dim_));
  if (static_cast<int>(rates_.size()) != dim_ + 1) {
    throw InvalidInput("rate set for d = " + std::to_string(dim_) + " needs " + std::to_string(dim_ + 1) +
                       " rates, got " + std::to_string(rates_.size()));
  }
}

const RateExpr& RateSet::rate(int alpha) const {
  if (alpha < 1 || alpha > size()) throw IndexOutOfRange("rate index " + std::to_string(alpha));
  return rates_[alpha - 1];
}

std::vector<double> RateSet::evaluate(double t) const {
  std::vector<double> out;
  out.reserve(rates_.size());
  for (const auto& r : rates_) out.push_back(r.evaluate(t));
  return out;
}

RateSet rate_set_from_sources(int dim, std::span<const std::string> sources) {
  std::vector<RateExpr> rates;
  for (const auto& s : sources) rates.push_back(parse(s));
  return RateSet(dim, std::move(rates));
}

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog = {
      {"eternal-qubit", "qubit rates (1, 1, -tanh t); eternally non-Markovian yet P-divisible", false, false},
      {"eternal-general", "gamma_1,2 = 1 + ((d-2)/d) tanh t, gamma_3..d+1 = -(2/d) tanh t", true, false},
      {"avg-decoherence",
       "gamma_1..d = 1, gamma_d+1 = -(d-1)(e^{dt}-1)/(e^{dt}+d-1); satisfies (P-d), not P-divisible for d > 2",
       true, false},
      {"semigroup", "constant rates c_1..c_{d+1} (pass --constants)", true, true},
  };
  return catalog;
}

RateSet make_preset(std::string_view name, int dim, std::span<const double> constants) {
  const std::string d = std::to_string(dim);
  std::vector<std::string> src;
  if (name == "eternal-qubit") {
    if (dim != 2) throw InvalidInput("preset eternal-qubit is defined for d = 2 only");
    src = {"1", "1", "-tanh(t)"};
  } else if (name == "eternal-general") {
    if (dim < 2) throw InvalidInput("preset eternal-general needs d >= 2");
    const std::string positive = "1 + ((" + d + "-2)/" + d + ")*tanh(t)";
    const std::string negative = "-(2/" + d + ")*tanh(t)";
    src = {positive, positive};
    for (int a = 3; a <= dim + 1; ++a) src.push_back(negative);
  } else if (name == "avg-decoherence") {
    if (dim < 2) throw InvalidInput("preset avg-decoherence needs d >= 2");
    // (e^{dt}-1)/(e^{dt}+d-1) rewritten with e^{-dt} so large t cannot overflow
    for (int a = 1; a <= dim; ++a) src.push_back("1");
    src.push_back("-(" + d + "-1)*(1 - exp(-" + d + "*t))/(1 + (" + d + "-1)*exp(-" + d + "*t))");
  } else if (name == "semigroup") {
    if (static_cast<int>(constants.size()) != dim + 1) {
      throw InvalidInput("preset semigroup needs d+1 = " + std::to_string(dim + 1) + " constants, got " +
                         std::to_string(constants.size()));
    }
    for (double c : constants) {
      if (!std::isfinite(c)) throw InvalidInput("semigroup constants must be finite");
      src.push_back(format_double(c));
    }
  } else {
    throw InvalidInput("unknown preset '" + std::string(name) + "'");
  }
  std::vector<RateExpr> rates;
  for (const auto& s : src) rates.push_back(parse(s));
  std::string label(name);
  if (name != "eternal-qubit") label += "(d=" + d + ")";
  return RateSet(dim, std::move(rates), label);
}

}  // namespace gpauli
