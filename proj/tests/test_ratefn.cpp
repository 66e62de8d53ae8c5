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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include "gpauli/errors.hpp"
#include "gpauli/ratefn.hpp"
#include "test_support.hpp"

using namespace gpauli;

namespace {

// Random expression text over the full grammar. Arguments of ln are wrapped
// so that most draws evaluate.
std::string random_expr(RandomSource& rng, int depth) {
  if (depth == 0 || rng.uniform(0, 1) < 0.2) {
    switch (rng.uniform_int(0, 3)) {
      case 0:
        return "t";
      case 1:
        return std::to_string(rng.uniform_int(0, 9));
      case 2:
        return format_double(std::round(rng.uniform(0, 5) * 100) / 100);
      default:
        return "1.5e-1";
    }
  }
  const std::string a = random_expr(rng, depth - 1);
  const std::string b = random_expr(rng, depth - 1);
  switch (rng.uniform_int(0, 11)) {
    case 0:
      return a + " + " + b;
    case 1:
      return a + " - " + b;
    case 2:
      return a + "*" + b;
    case 3:
      return "(" + a + ")/(1 + (" + b + ")^2)";
    case 4:
      return "-" + a;
    case 5:
      return "tanh(" + a + ")";
    case 6:
      return "exp(-(" + a + ")^2)";
    case 7:
      return "ln(1 + (" + a + ")^2)";
    case 8:
      return "cosh(tanh(" + a + "))";
    case 9:
      return "sinh(tanh(" + a + "))";
    case 10:
      return "pow(1 + tanh(" + a + ")^2, " + b + "/(1+" + b + "^2))";
    default:
      return "(" + a + ")^2 - " + b;
  }
}

}  // namespace

TEST_CASE("parse and evaluate") {
  CHECK(parse("1").evaluate(0.3) == 1.0);
  CHECK(parse("-tanh(t)").evaluate(0.0) == 0.0);
  CHECK(std::abs(parse("1 + ((3-2)/3)*tanh(t)").evaluate(50.0) - 4.0 / 3.0) < 1e-10);
  CHECK(std::abs(parse("cosh(t)").evaluate(1.0) - 1.5430806348152437) < 1e-12);
  CHECK(parse("2^3^2").evaluate(0) == 64.0);
  CHECK(parse("-t^2").evaluate(3.0) == 9.0);
  CHECK(parse("-(t^2)").evaluate(3.0) == -9.0);
  CHECK(parse("2*3+4").evaluate(0) == 10.0);
  CHECK(parse("2+3*4").evaluate(0) == 14.0);
  CHECK(parse("8/2/2").evaluate(0) == 2.0);
  CHECK(parse("10-2-3").evaluate(0) == 5.0);
  CHECK(parse("pow(2, t)").evaluate(10) == 1024.0);
  CHECK(parse("1.5e2").evaluate(0) == 150.0);
  CHECK(parse("  exp( ln(t) ) ").evaluate(2.5) == doctest::Approx(2.5));
  CHECK(parse("sinh(1)").evaluate(0) == doctest::Approx(std::sinh(1.0)));
  CHECK(evaluate(parse("+t"), 4.0) == 4.0);
}

TEST_CASE("syntax errors report a position") {
  auto position_of = [](const char* src) -> long {
    try {
      parse(src);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("1 +") == 3);
  CHECK(position_of("foo(t)") == 0);
  CHECK(position_of("t + x") == 4);
  CHECK(position_of("(1 + t") == 6);
  CHECK(position_of("1 2") == 2);
  CHECK(position_of("tanh t") == 5);
  CHECK(position_of("") == 0);
  CHECK(position_of("pow(1)") == 5);
  CHECK(position_of("2 $ 3") == 2);
  CHECK(position_of("t)") == 1);
}

TEST_CASE("evaluation errors are never silent") {
  CHECK_THROWS_AS(parse("ln(t)").evaluate(0.0), EvaluationError);
  CHECK_THROWS_AS(parse("ln(t - 1)").evaluate(0.5), EvaluationError);
  CHECK_THROWS_AS(parse("1/t").evaluate(0.0), EvaluationError);
  CHECK_THROWS_AS(parse("exp(t)").evaluate(1000.0), EvaluationError);
  CHECK_THROWS_AS(parse("pow(-1, 0.5)").evaluate(0.0), EvaluationError);
  CHECK_THROWS_AS(parse("t").evaluate(NAN), EvaluationError);
}

TEST_CASE("printing is canonical and round-trips") {
  CHECK(parse("1+2*t").to_string() == parse("1 + (2 * t)").to_string());
  CHECK(parse("(1+2)*t").to_string() != parse("1+2*t").to_string());
  CHECK(parse("2^3^2").evaluate(0) == parse(parse("2^3^2").to_string()).evaluate(0));
  CHECK(parse("2^(3^2)").evaluate(0) == parse(parse("2^(3^2)").to_string()).evaluate(0));
  CHECK(parse("1 - (2 - 3)").evaluate(0) == 2.0);
  CHECK(parse(parse("1 - (2 - 3)").to_string()).evaluate(0) == 2.0);

  RandomSource rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string src = random_expr(rng, 4);
    CAPTURE(src);
    const RateExpr e = parse(src);
    const std::string printed = e.to_string();
    const RateExpr again = parse(printed);
    CHECK(again.to_string() == printed);
    for (double t : {0.0, 0.37, 1.0, 2.5}) {
      bool failed_a = false;
      bool failed_b = false;
      double a = 0.0;
      double b = 0.0;
      try {
        a = e.evaluate(t);
      } catch (const EvaluationError&) {
        failed_a = true;
      }
      try {
        b = again.evaluate(t);
      } catch (const EvaluationError&) {
        failed_b = true;
      }
      CHECK(failed_a == failed_b);
      if (!failed_a && !failed_b) CHECK(a == b);
    }
  }
}

TEST_CASE("quadrature against antiderivatives") {
  CHECK(std::abs(integrate(parse("1"), 0, 3.7) - 3.7) < 1e-12);
  CHECK(std::abs(integrate(parse("-tanh(t)"), 0, 1) + std::log(std::cosh(1.0))) < 1e-10);
  CHECK(std::abs(integrate(parse("-tanh(t)"), 0, 1) - (-0.4337808304830271)) < 1e-10);
  CHECK(std::abs(integrate(parse("exp(t)"), 0, 2) - (std::exp(2.0) - 1.0)) < 1e-10);
  CHECK(std::abs(integrate(parse("cosh(t)"), -1, 1) - 2 * std::sinh(1.0)) < 1e-10);
  CHECK(std::abs(integrate(parse("1/(1+t^2)"), 0, 10) - std::atan(10.0)) < 1e-10);
  CHECK(integrate(parse("t"), 2, 2) == 0.0);

  const auto r = integrate_adaptive(parse("exp(-t)*sinh(3*t)"), 0, 4, 1e-11);
  const double exact = 0.25 * (std::exp(8.0) - 1.0) + 0.125 * (std::exp(-16.0) - 1.0);
  CHECK(std::abs(r.value - exact) < 1e-12 * exact);
  CHECK(r.evaluations > 0);
  CHECK(r.error_estimate >= 0.0);

  CHECK_THROWS_AS(integrate(parse("t"), 1, 0), InvalidInput);
  CHECK_THROWS_AS(integrate(parse("t"), 0, 1, 0.0), InvalidInput);
  CHECK_THROWS_AS(integrate(parse("ln(t)"), 0, 1), EvaluationError);
  CHECK_THROWS_AS(integrate(parse("1/(t - 1/3)"), 0, 1), QuadratureError);
}

TEST_CASE("quadrature is additive") {
  RandomSource rng(88);
  const double tol = 1e-10;
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const RateExpr e = parse(random_expr(rng, 3));
    const double a = rng.uniform(0, 1);
    const double b = a + rng.uniform(0, 2);
    const double c = b + rng.uniform(0, 2);
    try {
      const double left = integrate(e, a, b, tol);
      const double right = integrate(e, b, c, tol);
      const double whole = integrate(e, a, c, tol);
      CAPTURE(e.to_string());
      CAPTURE(whole);
      // The integrator cannot beat a few ulps of the result, so huge integrals
      // are held to the same roundoff floor it uses internally.
      const double ulps = 64.0 * std::numeric_limits<double>::epsilon() *
                          (std::abs(left) + std::abs(right) + std::abs(whole));
      CHECK(std::abs(left + right - whole) <= 2 * tol + ulps);
      ++checked;
    } catch (const EvaluationError&) {
    }
  }
  CHECK(checked > 80);
}

TEST_CASE("rate sets and presets") {
  CHECK_THROWS_AS(RateSet(2, {parse("1"), parse("1")}), InvalidInput);
  const std::vector<std::string> srcs{"1", "t", "-tanh(t)"};
  const RateSet rs = rate_set_from_sources(2, srcs);
  CHECK(rs.size() == 3);
  CHECK(rs.rate(2).evaluate(0.5) == 0.5);
  CHECK_THROWS_AS(rs.rate(0), IndexOutOfRange);
  CHECK_THROWS_AS(rs.rate(4), IndexOutOfRange);
  CHECK(rs.evaluate(1.0)[2] == doctest::Approx(-std::tanh(1.0)));

  const RateSet q = make_preset("eternal-qubit", 2);
  for (double t = 0.0; t <= 10.0; t += 0.25) {
    CHECK(std::abs(integrate(q.rate(3), 0, t) + std::log(std::cosh(t))) < 1e-10);
    CHECK(integrate(q.rate(1), 0, t) == doctest::Approx(t));
  }
  CHECK_THROWS_AS(make_preset("eternal-qubit", 3), InvalidInput);

  for (int d : {2, 3, 5}) {
    const RateSet g = make_preset("eternal-general", d);
    const RateSet a = make_preset("avg-decoherence", d);
    CHECK(g.size() == d + 1);
    for (double t : {0.0, 0.4, 1.7, 5.0}) {
      for (int al = 1; al <= d + 1; ++al) {
        CHECK(std::abs(integrate(g.rate(al), 0, t) - gpauli::testing::eternal_general_Gamma(d, al, t)) < 1e-10);
        CHECK(std::abs(integrate(a.rate(al), 0, t) - gpauli::testing::avg_decoherence_Gamma(d, al, t)) < 1e-10);
      }
      // gamma_1 + (d-1) gamma_3 = 1 - tanh t
      if (d >= 3) CHECK(std::abs(g.rate(1).evaluate(t) + (d - 1) * g.rate(3).evaluate(t) - (1 - std::tanh(t))) < 1e-14);
      // gamma_{d+1} = -(d-1)(e^{dt}-1)/(e^{dt}+d-1)
      const double e = std::exp(d * t);
      CHECK(a.rate(d + 1).evaluate(t) == doctest::Approx(-(d - 1) * (e - 1) / (e + d - 1)));
    }
    CHECK(a.rate(d + 1).evaluate(200.0) == doctest::Approx(-(d - 1.0)));
  }

  const std::vector<double> c{0.5, 1.0, 2.0};
  const RateSet s = make_preset("semigroup", 2, c);
  CHECK(s.rate(3).evaluate(7.0) == 2.0);
  CHECK_THROWS_AS(make_preset("semigroup", 3, c), InvalidInput);
  CHECK_THROWS_AS(make_preset("no-such-preset", 2), InvalidInput);
  CHECK(preset_catalog().size() == 4);
}

TEST_CASE("shortest round-trip number formatting") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 1e300, 12345.0}) CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
}
