#include "connkit/frame.hpp"

#include "connkit/linalg.hpp"

namespace connkit {

double det_matrix(std::vector<double> m, int n) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(m[static_cast<std::size_t>(col * n + col)]);
    for (int r = col + 1; r < n; ++r) {
      const double cand = std::abs(m[static_cast<std::size_t>(r * n + col)]);
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c)
        std::swap(m[static_cast<std::size_t>(pivot * n + c)],
                  m[static_cast<std::size_t>(col * n + c)]);
      det = -det;
    }
    const double d = m[static_cast<std::size_t>(col * n + col)];
    det *= d;
    for (int r = col + 1; r < n; ++r) {
      const double f = m[static_cast<std::size_t>(r * n + col)] / d;
      for (int c = col; c < n; ++c)
        m[static_cast<std::size_t>(r * n + c)] -= f * m[static_cast<std::size_t>(col * n + c)];
    }
  }
  return det;
}

FramePair FramePair::coordinate_frame(int n) {
  FramePair fp;
  fp.coordinate = true;
  fp.b.reserve(static_cast<std::size_t>(n));
  fp.beta.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    fp.b.push_back(VectorField::coordinate_basis(n, i));
    fp.beta.push_back(FormField::coordinate_basis(n, i));
  }
  return fp;
}

FramePair FramePair::from_vector_fields(std::vector<VectorField> frame) {
  const int n = static_cast<int>(frame.size());
  if (n < 1) throw DomainError("frame needs at least one vector field");
  for (const auto& v : frame)
    if (v.dim() != n)
      throw DomainError("frame must be square: " + std::to_string(n) +
                        " fields of dimension " + std::to_string(n));

  FramePair fp;
  fp.b = std::move(frame);

  // β^μ = Σ_i Inv[μ][i] dx^i where the frame matrix is E[i][j] = (b_j)^i.
  for (int mu = 0; mu < n; ++mu) {
    std::vector<ScalarField> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const std::vector<VectorField> frame_copy = fp.b;
      comps.push_back(make_scalar_field([frame_copy, n, mu, i]<class T>(std::span<const T> x) {
        std::vector<T> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int col = 0; col < n; ++col) {
          const std::vector<T> bc = frame_copy[static_cast<std::size_t>(col)](x);
          for (int row = 0; row < n; ++row)
            m[static_cast<std::size_t>(row * n + col)] = bc[static_cast<std::size_t>(row)];
        }
        std::vector<T> inv = invert_matrix(std::move(m), n, "dual frame", x);
        return inv[static_cast<std::size_t>(mu * n + i)];
      }));
    }
    fp.beta.push_back(FormField(std::move(comps)));
  }
  return fp;
}

std::vector<ScalarField> FramePair::vector_components(const VectorField& v) const {
  const int n = dim();
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int mu = 0; mu < n; ++mu)
    comps.push_back(coordinate ? v.comp(mu) : pairing_field(beta[static_cast<std::size_t>(mu)], v));
  return comps;
}

std::vector<ScalarField> FramePair::form_components(const FormField& w) const {
  const int n = dim();
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int mu = 0; mu < n; ++mu)
    comps.push_back(coordinate ? w.comp(mu) : pairing_field(w, b[static_cast<std::size_t>(mu)]));
  return comps;
}

std::vector<double> structure_coefficients(const FramePair& frame, const Point& p) {
  const int n = frame.dim();
  std::vector<double> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                          static_cast<std::size_t>(n));
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      const VectorField br = lie_bracket(frame.b[static_cast<std::size_t>(mu)],
                                         frame.b[static_cast<std::size_t>(nu)]);
      for (int sigma = 0; sigma < n; ++sigma) {
        const ScalarField c =
            pairing_field(frame.beta[static_cast<std::size_t>(sigma)], br);
        out[static_cast<std::size_t>(sigma * n * n + mu * n + nu)] = c.at(p);
      }
    }
  }
  return out;
}

}  // namespace connkit
