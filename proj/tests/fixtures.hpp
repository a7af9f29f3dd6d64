#pragma once

// Shared hand-checked fixtures for the geometry tests: a flat plane, the unit
// sphere with Levi-Civita coefficients, and the frame-parallelizing
// connection of the frame {d1, x1 d2}.

#include <vector>

#include "connkit/connection.hpp"
#include "connkit/expr_field.hpp"

namespace connkit_test {

using namespace connkit;

inline std::size_t cidx(int n, int s, int m, int nu) {
  return static_cast<std::size_t>((s * n + m) * n + nu);
}

inline Connection flat2() {
  return Connection(FramePair::coordinate_frame(2), std::vector<ScalarField>(8));
}

inline Chart flat_chart() { return Chart::box({"x1", "x2"}, {0.5, 0.5}, {3.0, 3.0}); }

// Unit sphere in polar coordinates (th, ph), Levi-Civita coefficients of the
// round metric diag(1, sin^2 th).
inline Connection sphere_lc() {
  const std::vector<std::string> vars = {"th", "ph"};
  auto f = [&](const char* s) { return field_from_expr(Expr::parse(s, vars)); };
  std::vector<ScalarField> c(8);
  c[cidx(2, 0, 1, 1)] = f("-sin(th)*cos(th)");
  c[cidx(2, 1, 0, 1)] = f("cos(th)/sin(th)");
  c[cidx(2, 1, 1, 0)] = f("cos(th)/sin(th)");
  return Connection(FramePair::coordinate_frame(2), std::move(c));
}

inline Chart sphere_chart() { return Chart::box({"th", "ph"}, {0.3, 0.1}, {2.8, 6.2}); }

// All coefficients zero with respect to the frame b1 = d1, b2 = x1 d2 (the
// frame is parallel; in coordinates the only nonzero coefficient is
// G^2_{12} = -1/x1).
inline Connection weitzenboeck() {
  auto b1 = VectorField::coordinate_basis(2, 0);
  auto b2 = VectorField({ScalarField(), ScalarField::coordinate(0)});
  return Connection(FramePair::from_vector_fields({b1, b2}), std::vector<ScalarField>(8));
}

}  // namespace connkit_test
