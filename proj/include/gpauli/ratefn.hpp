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

#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpauli {

// Scalar function of time t built from literals, t, + - * / ^, unary minus,
// parentheses and the functions tanh, exp, ln, cosh, sinh, pow(a, b).
//
//   expr    := term   { ("+" | "-") term }
//   term    := power  { ("*" | "/") power }
//   power   := unary  { "^" unary }            (left associative)
//   unary   := "-" unary | "+" unary | primary
//   primary := number | "t" | func "(" expr ")" | "pow" "(" expr "," expr ")"
//            | "(" expr ")"
//
// Unary minus binds tighter than "^": -t^2 == (-t)^2.
class RateExpr {
 public:
  struct Node;

  const std::string& source() const { return source_; }
  // Canonical text form; parsing it yields the same tree.
  std::string to_string() const;
  // Throws EvaluationError on domain violations and non-finite results.
  double evaluate(double t) const;

  friend RateExpr parse(std::string_view source);

 private:
  RateExpr(std::string source, std::shared_ptr<const Node> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const Node> root_;
};

// Throws ParseError (with character position) on malformed input or unknown identifiers.
RateExpr parse(std::string_view source);

inline double evaluate(const RateExpr& expr, double t) { return expr.evaluate(t); }

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

inline constexpr double kDefaultQuadratureTol = 1e-10;
inline constexpr int kMaxBisectionDepth = 48;

// Adaptive Simpson quadrature with interval bisection and Richardson correction.
// Throws QuadratureError when an interval cannot meet its share of tol.
QuadratureResult integrate_adaptive(const RateExpr& expr, double t0, double t1,
                                    double tol = kDefaultQuadratureTol);

inline double integrate(const RateExpr& expr, double t0, double t1, double tol = kDefaultQuadratureTol) {
  return integrate_adaptive(expr, t0, t1, tol).value;
}

// The d+1 decoherence rates gamma_1(t) .. gamma_{d+1}(t).
class RateSet {
 public:
  RateSet(int dim, std::vector<RateExpr> rates, std::string label = "custom");

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rates_.size()); }
  const std::string& label() const { return label_; }
  // 1-based
  const RateExpr& rate(int alpha) const;
  const std::vector<RateExpr>& rates() const { return rates_; }

  std::vector<double> evaluate(double t) const;

 private:
  int dim_;
  std::vector<RateExpr> rates_;
  std::string label_;
};

RateSet rate_set_from_sources(int dim, std::span<const std::string> sources);

struct PresetInfo {
  std::string name;
  std::string description;
  bool takes_dim = false;
  bool takes_constants = false;
};

const std::vector<PresetInfo>& preset_catalog();

// Named rate sets. `dim` is substituted as a literal into the expressions.
//   eternal-qubit          gamma = (1, 1, -tanh t); dim must be 2
//   eternal-general        gamma_1,2 = 1 + ((d-2)/d) tanh t, others -(2/d) tanh t
//   avg-decoherence        gamma_1..d = 1, gamma_{d+1} = -(d-1)(e^{dt}-1)/(e^{dt}+d-1)
//   semigroup              constant rates from `constants` (d+1 values)
RateSet make_preset(std::string_view name, int dim, std::span<const double> constants = {});

// Shortest round-trip decimal form of a double, locale independent.
std::string format_double(double x);

}  // namespace gpauli
