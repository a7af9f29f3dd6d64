#include "connkit/random_fields.hpp"

namespace connkit {

Point random_point(const Chart& chart, SplitMix64& rng) {
  Point p;
  p.x.reserve(static_cast<std::size_t>(chart.dim));
  for (int i = 0; i < chart.dim; ++i) {
    const auto u = static_cast<std::size_t>(i);
    p.x.push_back(rng.uniform(chart.lo[u], chart.hi[u]));
  }
  return p;
}

ScalarField random_scalar_field(int dim, SplitMix64& rng) {
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<double> c(1 + 3 * n);
  for (double& ci : c) ci = rng.uniform(-2.0, 2.0);
  return make_scalar_field([c, n]<class T>(std::span<const T> x) {
    using std::cos;
    using std::sin;
    T acc = T(c[0]);
    for (std::size_t i = 0; i < n; ++i) {
      acc = acc + c[1 + 3 * i] * x[i] + c[2 + 3 * i] * sin(x[i]) +
            c[3 + 3 * i] * cos(x[i]);
    }
    return acc;
  });
}

VectorField random_vector_field(int dim, SplitMix64& rng) {
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) comps.push_back(random_scalar_field(dim, rng));
  return VectorField(std::move(comps));
}

FormField random_form_field(int dim, SplitMix64& rng) {
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) comps.push_back(random_scalar_field(dim, rng));
  return FormField(std::move(comps));
}

FramePair random_frame(int dim, SplitMix64& rng) {
  const int n = dim;
  // b_j = sum_i E[i][j] d_i with E[i][i] = 1.5 + 0.3 sin(x_i + phi_i) and
  // E[i][j] = (0.2/n) cos(x_j + psi_ij) off the diagonal.
  std::vector<double> phi(static_cast<std::size_t>(n));
  std::vector<double> psi(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (double& v : phi) v = rng.uniform(0.0, 6.28);
  for (double& v : psi) v = rng.uniform(0.0, 6.28);

  std::vector<VectorField> frame;
  frame.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<ScalarField> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (i == j) {
        const double ph = phi[static_cast<std::size_t>(i)];
        comps.push_back(make_scalar_field([ph, i]<class T>(std::span<const T> x) {
          using std::sin;
          return 1.5 + 0.3 * sin(x[i] + ph);
        }));
      } else {
        const double ps = psi[static_cast<std::size_t>(i * n + j)];
        const double amp = 0.2 / n;
        comps.push_back(make_scalar_field([ps, amp, j]<class T>(std::span<const T> x) {
          using std::cos;
          return amp * cos(x[j] + ps);
        }));
      }
    }
    frame.push_back(VectorField(std::move(comps)));
  }
  return FramePair::from_vector_fields(std::move(frame));
}

}  // namespace connkit
