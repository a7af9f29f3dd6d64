#include <cmath>
#include <vector>

#include "connkit/jet.hpp"
#include "doctest.h"

using connkit::J1;
using connkit::J2;
using connkit::J3;
using connkit::Jet;

// Make unqualified math calls work for both double (std::) and jets (ADL), so
// the same generic body can be evaluated on either.
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;
using std::tan;

namespace {

// Independent oracle: central finite difference on the plain-double path.
template <class F>
double fd(F f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double jet_derivative(F f, double x) {
  J1 j = f(J1::seed(x, 1, 0));
  return j.d(0);
}

}  // namespace

TEST_CASE("jet first derivatives agree with central differences") {
  auto check = [](auto f, double x) {
    CAPTURE(x);
    CHECK(jet_derivative(f, x) == doctest::Approx(fd(f, x)).epsilon(0.0).scale(1.0));
  };
  // absolute tolerance 1e-6 per oracle accuracy
  auto check_tol = [](auto f, double x) {
    const double got = jet_derivative(f, x);
    const double want = fd(f, x);
    CAPTURE(x);
    CHECK(std::abs(got - want) <= 1e-6);
  };
  (void)check;

  check_tol([](auto x) { return x * x * sin(x); }, 1.3);
  check_tol([](auto x) { return tan(x) / (2.0 + cos(x)); }, 0.4);
  check_tol([](auto x) { return exp(x) * log(1.5 + x * x); }, -0.8);
  check_tol([](auto x) { return sqrt(2.0 + sin(x)) - 3.0 / x; }, 1.9);
  check_tol([](auto x) { return (x + 1.0) / (x * x + 0.5) - 2.0 * x; }, 0.6);
}

TEST_CASE("frozen first derivative: d/dx[x^2 sin x] at 1.3") {
  const double x = 1.3;
  const double expected = 2.0 * x * std::sin(x) + x * x * std::cos(x);
  const double got = jet_derivative([](auto t) { return t * t * sin(t); }, x);
  CHECK(got == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("second-order jets: mixed partials and symmetry") {
  // f(x,y) = x y^2 + sin(x) cos(y);  d2f/dxdy = 2y - cos(x) sin(y)
  auto f = [](auto x, auto y) { return x * y * y + sin(x) * cos(y); };
  const double x0 = 0.9, y0 = -1.2;

  auto at = [&](int outer, int inner) {
    J2 x = J2::seed(J1::seed(x0, 2, 0), 2, 0);
    J2 y = J2::seed(J1::seed(y0, 2, 1), 2, 1);
    J2 r = f(x, y);
    return r.d(static_cast<std::size_t>(outer)).d(static_cast<std::size_t>(inner));
  };

  const double expected = 2.0 * y0 - std::cos(x0) * std::sin(y0);
  CHECK(at(0, 1) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(at(1, 0) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(std::abs(at(0, 1) - at(1, 0)) <= 1e-13);
}

TEST_CASE("third-order jets: d3[sin(xy)]/dy dx dx") {
  auto f = [](auto x, auto y) { return sin(x * y); };
  const double x0 = 0.7, y0 = 1.1;

  auto seed3 = [](double v, std::size_t slot) {
    J2 lvl2 = J2::seed(J1::seed(v, 2, slot), 2, slot);
    return J3::seed(lvl2, 2, slot);
  };
  J3 x = seed3(x0, 0);
  J3 y = seed3(y0, 1);
  J3 r = f(x, y);
  // outermost derivative slot 0 (x), then slot 0 (x), then slot 1 (y)
  const double got = r.d(0).d(0).d(1);
  const double expected = -2.0 * y0 * std::sin(x0 * y0) - x0 * y0 * y0 * std::cos(x0 * y0);
  CHECK(got == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("integer powers are exact and handle edge exponents") {
  J1 x = J1::seed(-1.5, 1, 0);
  J1 c = connkit::pow_int(x, 3);
  CHECK(c.value == doctest::Approx(-3.375).epsilon(1e-15));
  CHECK(c.d(0) == doctest::Approx(3.0 * 1.5 * 1.5).epsilon(1e-15));

  J1 z = connkit::pow_int(x, 0);
  CHECK(z.value == 1.0);
  CHECK(z.d(0) == 0.0);

  J1 inv2 = connkit::pow_int(J1::seed(2.0, 1, 0), -2);
  CHECK(inv2.value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(inv2.d(0) == doctest::Approx(-2.0 * std::pow(2.0, -3.0)).epsilon(1e-14));

  CHECK(connkit::pow_int(-1.5, 3) == doctest::Approx(-3.375).epsilon(1e-15));
}

TEST_CASE("general powers: value near std::pow, derivative near FD") {
  const double a = 2.3, b = 1.7;
  const double v = connkit::pow_general(a, b);
  CHECK(std::abs(v - std::pow(a, b)) <= 1e-12 * std::pow(a, b));

  auto f = [b](auto x) { return pow_general(x, decltype(x)(b)); };
  CHECK(std::abs(jet_derivative(f, a) - fd([&](double x) { return std::pow(x, b); }, a)) <= 1e-6);
}

TEST_CASE("plain evaluation equals the value component of jet evaluation") {
  auto f = [](auto x, auto y) {
    return (x * y - 2.0 * x + y / (x + 3.0)) * sin(x) + exp(y) * 0.25 + sqrt(x + 2.0);
  };
  const double x0 = 1.1, y0 = -0.3;
  const double plain = f(x0, y0);
  J1 jx = J1::seed(x0, 2, 0), jy = J1::seed(y0, 2, 1);
  // bit-identical, not approximately equal: both paths share every operation
  CHECK(f(jx, jy).value == plain);
}

TEST_CASE("constants broadcast against seeded jets") {
  J1 c(4.0);
  CHECK(c.partials.empty());
  J1 x = J1::seed(2.0, 3, 1);
  J1 s = c + x;
  CHECK(s.value == 6.0);
  CHECK(s.d(0) == 0.0);
  CHECK(s.d(1) == 1.0);
  J1 p = c * x;
  CHECK(p.d(1) == 4.0);
  CHECK(p.d(2) == 0.0);  // out-of-range partial reads as zero

  J2 deep(3.5);  // double lifts through two levels
  CHECK(deep.value.value == 3.5);
  CHECK(connkit::scalar_part(deep) == 3.5);
}

TEST_CASE("tower ranks") {
  static_assert(connkit::tower_rank_v<double> == 0);
  static_assert(connkit::tower_rank_v<J1> == 1);
  static_assert(connkit::tower_rank_v<J3> == 3);
  CHECK(connkit::kMaxTowerRank == 4);
}
