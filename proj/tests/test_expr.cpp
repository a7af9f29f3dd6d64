#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "connkit/errors.hpp"
#include "connkit/expr.hpp"
#include "connkit/numfmt.hpp"
#include "connkit/rng.hpp"
#include "doctest.h"

using connkit::BindError;
using connkit::EvalError;
using connkit::Expr;
using connkit::J1;
using connkit::ParseError;
using connkit::SplitMix64;

namespace {

const std::vector<std::string> kVars{"x1", "x2"};

Expr parse2(std::string_view src) { return Expr::parse(src, kVars); }

double eval2(const Expr& e, double x1, double x2) {
  const std::array<double, 2> v{x1, x2};
  return e.eval_real(v);
}

}  // namespace

TEST_CASE("golden parse trees") {
  // Frozen canonical dumps pinning precedence, associativity, unary minus and
  // integer-power folding.  These strings are the compatibility contract for
  // the expression language.
  const struct {
    const char* src;
    const char* tree;
  } cases[] = {
      {"1+2*3", "(+ 1 (* 2 3))"},
      {"(1+2)*3", "(* (+ 1 2) 3)"},
      {"1-2-3", "(- (- 1 2) 3)"},
      {"1-(2-3)", "(- 1 (- 2 3))"},
      {"2^3^2", "(^ 2 (^i 3 2))"},
      {"x1^2", "(^i x1 2)"},
      {"x1^-2", "(^i x1 -2)"},
      {"x1^(2)", "(^i x1 2)"},
      {"x1^x2", "(^ x1 x2)"},
      {"pow(x1, 2)", "(^i x1 2)"},
      {"pow(x1, x2)", "(^ x1 x2)"},
      {"-x1^2", "(neg (^i x1 2))"},
      {"(-x1)^2", "(^i (neg x1) 2)"},
      {"-x1*x2", "(* (neg x1) x2)"},
      {"-(x1*x2)", "(neg (* x1 x2))"},
      {"--x1", "(neg (neg x1))"},
      {"sin(x1)*cos(x2)", "(* (sin x1) (cos x2))"},
      {"sin(cos(x1))", "(sin (cos x1))"},
      {"1/2/3", "(/ (/ 1 2) 3)"},
      {"1/(2/3)", "(/ 1 (/ 2 3))"},
      {"2*x1+3/x2-4", "(- (+ (* 2 x1) (/ 3 x2)) 4)"},
      {"2.5e-2", "0.025"},
      {"1e3", "1000"},
      {"sqrt(x1*x1+x2*x2)", "(sqrt (+ (* x1 x1) (* x2 x2)))"},
      {"exp(-x1)", "(exp (neg x1))"},
      {"log(x1)/log(2)", "(/ (log x1) (log 2))"},
      {"tan(x1/2)", "(tan (/ x1 2))"},
      {"x1 * ( x2 + 3 ) ^ 2", "(* x1 (^i (+ x2 3) 2))"},
      {"3-x1^2*5", "(- 3 (* (^i x1 2) 5))"},
      {"pow(2, -3)", "(^i 2 -3)"},
  };
  int count = 0;
  for (const auto& c : cases) {
    CAPTURE(c.src);
    CHECK(parse2(c.src).dump() == c.tree);
    ++count;
  }
  CHECK(count == 30);
}

TEST_CASE("print/parse round-trip preserves structure") {
  const char* ok[] = {
      "1+2*3",   "1-2-3",     "1-(2-3)",  "2^3^2",    "x1^-2",          "-x1^2",
      "(-x1)^2", "-x1*x2",    "-(x1*x2)", "--x1",     "1/2/3",          "1/(2/3)",
      "x1^x2",   "pow(2,-3)", "exp(-x1)", "(x1+x2)^(x1*2)", "2*x1+3/x2-4",
  };
  for (const char* src : ok) {
    CAPTURE(src);
    Expr e = parse2(src);
    Expr back = parse2(e.print());
    CHECK(back.dump() == e.dump());
  }
}

TEST_CASE("malformed expressions raise positioned parse errors") {
  auto parse_offset = [](std::string_view src) -> long {
    try {
      parse2(src);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset);
    }
    return -1;
  };
  CHECK(parse_offset("2 @ 3") == 2);
  CHECK(parse_offset("sin(x1") == 6);
  CHECK(parse_offset("foo(x1)") == 0);
  CHECK(parse_offset("1 +") == 3);
  CHECK(parse_offset("(1+2") == 4);
  CHECK(parse_offset("1..2") == 1);
  CHECK(parse_offset("pow(x1)") == 0);
  CHECK(parse_offset("sin(x1, x2)") == 0);
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("1 2") == 2);
  CHECK(parse_offset("1e") == 1);
  CHECK(parse_offset("5.") == 1);

  try {
    parse2("x3 + 1");
    FAIL("expected BindError");
  } catch (const BindError& e) {
    CHECK(e.variable == "x3");
    CHECK(e.offset == 0);
  }
}

TEST_CASE("evaluation domain errors carry offsets") {
  auto eval_offset = [](std::string_view src, double x1, double x2) -> long {
    Expr e = parse2(src);
    try {
      eval2(e, x1, x2);
    } catch (const EvalError& err) {
      return static_cast<long>(err.offset);
    }
    return -1;
  };
  CHECK(eval_offset("1/x1", 0.0, 0.0) == 1);
  CHECK(eval_offset("log(x1-1)", 0.5, 0.0) == 0);
  CHECK(eval_offset("sqrt(-x1)", 2.0, 0.0) == 0);
  CHECK(eval_offset("x1^0.5", -1.0, 0.0) == 2);
  CHECK(eval_offset("x1^-1", 0.0, 0.0) == 2);
  // integer powers of negative bases are fine
  CHECK(eval2(parse2("x1^2"), -3.0, 0.0) == doctest::Approx(9.0));
  CHECK(eval2(parse2("pow(x1, 3)"), -2.0, 0.0) == doctest::Approx(-8.0));
}

namespace {

// Random total expressions: every generated string evaluates without domain
// errors anywhere on [-2, 2]^2 (guarded denominators and log/sqrt arguments).
std::string random_expr(SplitMix64& g, int depth) {
  auto constant = [&] { return "(" + connkit::format_double(g.uniform(-2.0, 2.0)) + ")"; };
  if (depth == 0) {
    switch (g.below(3)) {
      case 0: return "x1";
      case 1: return "x2";
      default: return constant();
    }
  }
  // transcendental/power arguments stay shallow to keep magnitudes sane
  const int shallow = depth > 1 ? 1 : depth - 1;
  switch (g.below(9)) {
    case 0: return "(" + random_expr(g, depth - 1) + " + " + random_expr(g, depth - 1) + ")";
    case 1: return "(" + random_expr(g, depth - 1) + " - " + random_expr(g, depth - 1) + ")";
    case 2: return "(" + random_expr(g, depth - 1) + " * " + random_expr(g, depth - 1) + ")";
    case 3:
      return "(" + random_expr(g, depth - 1) + " / (2.5 + (" + random_expr(g, shallow) + ")^2))";
    case 4: return "sin(" + random_expr(g, shallow) + ")";
    case 5: return "cos(" + random_expr(g, shallow) + ")";
    case 6: return "exp(0.3 * (" + random_expr(g, shallow) + "))";
    case 7: return "log(2.5 + (" + random_expr(g, shallow) + ")^2)";
    default: return "sqrt(1.5 + (" + random_expr(g, shallow) + ")^2)";
  }
}

}  // namespace

TEST_CASE("jet derivatives of random expressions match central differences") {
  SplitMix64 g = connkit::substream(20240817, 42);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::string src = random_expr(g, 3);
    CAPTURE(src);
    Expr e = parse2(src);
    const double x1 = g.uniform(-2.0, 2.0), x2 = g.uniform(-2.0, 2.0);

    const std::array<J1, 2> jx{J1::seed(x1, 2, 0), J1::seed(x2, 2, 1)};
    const J1 r = e.eval<J1>(jx);

    const double h = 1e-6;
    const double fd0 = (eval2(e, x1 + h, x2) - eval2(e, x1 - h, x2)) / (2.0 * h);
    const double fd1 = (eval2(e, x1, x2 + h) - eval2(e, x1, x2 - h)) / (2.0 * h);
    CHECK(std::abs(r.d(0) - fd0) <= 1e-6 * std::max(1.0, std::abs(r.d(0))));
    CHECK(std::abs(r.d(1) - fd1) <= 1e-6 * std::max(1.0, std::abs(r.d(1))));

    // value component of the jet path is bit-identical to the plain path
    CHECK(r.value == eval2(e, x1, x2));

    // and the printer round-trips every random tree
    CHECK(parse2(e.print()).dump() == e.dump());
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("general power keeps plain/jet value agreement") {
  Expr e = parse2("x1^x2");
  const std::array<double, 2> v{1.7, 2.3};
  const std::array<J1, 2> jx{J1::seed(1.7, 2, 0), J1::seed(2.3, 2, 1)};
  CHECK(e.eval<J1>(jx).value == e.eval_real(v));
  CHECK(e.eval_real(v) == doctest::Approx(std::pow(1.7, 2.3)).epsilon(1e-13));
}

TEST_CASE("wrong variable count is rejected") {
  Expr e = parse2("x1+x2");
  const std::array<double, 1> v{1.0};
  CHECK_THROWS_AS(e.eval_real(v), connkit::DomainError);
}
