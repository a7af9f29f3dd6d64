#pragma once

// Tiny dense solves, generic over the numeric tower.  Frames are at most a
// few columns wide, so Gauss–Jordan with partial pivoting (on the scalar part
// of each candidate) is all the kernel needs.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "connkit/errors.hpp"
#include "connkit/jet.hpp"
#include "connkit/numfmt.hpp"

namespace connkit {

template <class T>
std::string format_point_of(std::span<const T> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += format_double(scalar_part(coords[i]));
  }
  return out + ")";
}

// Invert a row-major n×n matrix in place-ish; throws SingularFrameError naming
// `context` and the evaluation point when a pivot degenerates.
template <class T>
std::vector<T> invert_matrix(std::vector<T> m, int n, const char* context,
                             std::span<const T> at) {
  double scale = 0.0;
  for (const T& e : m) scale = std::max(scale, std::abs(scalar_part(e)));
  const double tiny = 1e-12 * std::max(scale, 1.0);

  std::vector<T> inv(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i * n + i)] = T(1.0);

  auto at_rc = [n](std::vector<T>& mat, int r, int c) -> T& {
    return mat[static_cast<std::size_t>(r * n + c)];
  };

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(scalar_part(at_rc(m, col, col)));
    for (int r = col + 1; r < n; ++r) {
      const double cand = std::abs(scalar_part(at_rc(m, r, col)));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best <= tiny)
      throw SingularFrameError(std::string(context) + ": matrix is singular at point " +
                                   format_point_of(at),
                               format_point_of(at));
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(at_rc(m, pivot, c), at_rc(m, col, c));
        std::swap(at_rc(inv, pivot, c), at_rc(inv, col, c));
      }
    }
    const T d = at_rc(m, col, col);
    for (int c = 0; c < n; ++c) {
      at_rc(m, col, c) = at_rc(m, col, c) / d;
      at_rc(inv, col, c) = at_rc(inv, col, c) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = at_rc(m, r, col);
      for (int c = 0; c < n; ++c) {
        at_rc(m, r, c) = at_rc(m, r, c) - f * at_rc(m, col, c);
        at_rc(inv, r, c) = at_rc(inv, r, c) - f * at_rc(inv, col, c);
      }
    }
  }
  return inv;
}

// Determinant via elimination (double entries only; used for frame checks).
double det_matrix(std::vector<double> m, int n);

}  // namespace connkit
