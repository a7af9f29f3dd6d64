#include "connkit/structures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "connkit/errors.hpp"
#include "connkit/exterior.hpp"
#include "connkit/linalg.hpp"
#include "connkit/random_fields.hpp"

namespace connkit {

namespace {

std::size_t at2(int n, int i, int j) {
  return static_cast<std::size_t>(i * n + j);
}

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(p.x[i]);
  }
  return s + ")";
}

}  // namespace

// ---- OperatorField ---------------------------------------------------------

OperatorField::OperatorField(int dim, std::vector<ScalarField> entries)
    : dim_(dim), e_(std::move(entries)) {
  if (dim_ <= 0 || e_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
    throw DomainError("operator field needs dim^2 entries, row-major");
}

OperatorField OperatorField::identity(int dim) {
  std::vector<ScalarField> e(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) e[at2(dim, i, i)] = ScalarField::constant(1.0);
  return OperatorField(dim, std::move(e));
}

const ScalarField& OperatorField::entry(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw DomainError("operator entry index out of range");
  return e_[at2(dim_, i, j)];
}

VectorField OperatorField::apply(const VectorField& v) const {
  if (v.dim() != dim_) throw DomainError("operator/vector dimension mismatch");
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    ScalarField acc;
    for (int j = 0; j < dim_; ++j) acc = acc + e_[at2(dim_, i, j)] * v.comp(j);
    comps.push_back(std::move(acc));
  }
  return VectorField(std::move(comps));
}

FormField OperatorField::adjoint_apply(const FormField& w) const {
  if (w.dim() != dim_) throw DomainError("operator/form dimension mismatch");
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(dim_));
  for (int j = 0; j < dim_; ++j) {
    ScalarField acc;
    for (int i = 0; i < dim_; ++i) acc = acc + w.comp(i) * e_[at2(dim_, i, j)];
    comps.push_back(std::move(acc));
  }
  return FormField(std::move(comps));
}

OperatorField OperatorField::inverse(std::string context) const {
  std::vector<ScalarField> inv;
  inv.reserve(e_.size());
  const int n = dim_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      inv.push_back(make_scalar_field(
          [entries = e_, n, i, j, context]<class T>(std::span<const T> x) -> T {
            std::vector<T> m;
            m.reserve(entries.size());
            for (const ScalarField& f : entries) m.push_back(f(x));
            std::vector<T> mi = invert_matrix(std::move(m), n, context.c_str(), x);
            return mi[at2(n, i, j)];
          }));
    }
  return OperatorField(n, std::move(inv));
}

OperatorField OperatorField::compose(const OperatorField& inner) const {
  if (inner.dim_ != dim_) throw DomainError("operator composition dimension mismatch");
  std::vector<ScalarField> c(e_.size());
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      ScalarField acc;
      for (int k = 0; k < dim_; ++k)
        acc = acc + e_[at2(dim_, i, k)] * inner.e_[at2(dim_, k, j)];
      c[at2(dim_, i, j)] = std::move(acc);
    }
  return OperatorField(dim_, std::move(c));
}

// ---- symmetry, cyclic, Bianchi ---------------------------------------------

SymmetryCheck is_symmetric(const Connection& G, const Chart& chart, int samples,
                           std::uint64_t seed, double tol, std::uint64_t tag_base) {
  const int n = G.dim();
  TorsionFamily tf = torsion_family(G);
  SymmetryCheck out;
  out.worst = Point{std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (int k = 0; k < samples; ++k) {
    SplitMix64 rng = substream(seed, tag_base + static_cast<std::uint64_t>(k));
    VectorField a = random_vector_field(n, rng);
    VectorField b = random_vector_field(n, rng);
    FormField w = random_form_field(n, rng);
    Point p = random_point(chart, rng);
    const double r = max_abs(tf.tau(a, b).at(p));
    if (r > out.residual) {
      out.residual = r;
      out.worst = p;
    }
    const double th = max_abs(tf.theta(w, p));
    if (th > out.theta_residual) out.theta_residual = th;
  }
  out.symmetric = out.residual <= tol;
  return out;
}

ExtensorField curvature_extensor(const Connection& G) {
  CurvatureFamily cf = curvature_family(G);
  return ExtensorField::vector_valued(
      3, 0, [cf](ExtensorField::Vecs vs, ExtensorField::Forms) {
        return cf.rho(vs[0], vs[1], vs[2]);
      });
}

Vector cyclic_residual(const Connection& G, const VectorField& a, const VectorField& b,
                       const VectorField& c, const Point& p) {
  CurvatureFamily cf = curvature_family(G);
  return (cf.rho(a, b, c) + cf.rho(b, c, a) + cf.rho(c, a, b)).at(p);
}

Vector bianchi_residual(const Connection& G, const VectorField& w, const VectorField& a,
                        const VectorField& b, const VectorField& c, const Point& p) {
  ExtensorField rho = curvature_extensor(G);
  const std::array<VectorField, 3> t1{a, b, c};
  const std::array<VectorField, 3> t2{b, w, c};
  const std::array<VectorField, 3> t3{w, a, c};
  VectorField sum = cov_deriv_extensor(G, w, rho).apply_vector(t1, {}) +
                    cov_deriv_extensor(G, a, rho).apply_vector(t2, {}) +
                    cov_deriv_extensor(G, b, rho).apply_vector(t3, {});
  return sum.at(p);
}

// ---- deformations ----------------------------------------------------------

Deformation Deformation::from_operator(OperatorField op) {
  OperatorField inv = op.inverse("deformation");
  return Deformation{std::move(op), std::move(inv)};
}

DeformationCheck check_deformation(const Deformation& d, const Chart& chart, int samples,
                                   std::uint64_t seed, std::uint64_t tag_base) {
  const int n = d.lambda.dim();
  DeformationCheck out;
  out.min_abs_det = std::numeric_limits<double>::infinity();
  out.worst = Point{std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (int k = 0; k < samples; ++k) {
    SplitMix64 rng = substream(seed, tag_base + static_cast<std::uint64_t>(k));
    VectorField v = random_vector_field(n, rng);
    FormField w = random_form_field(n, rng);
    Point p = random_point(chart, rng);

    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[at2(n, i, j)] = d.lambda.entry(i, j).at(p);
    const double det = std::fabs(det_matrix(std::move(m), n));
    if (det <= 1e-8)
      throw SingularFrameError("deformation operator is singular at " + point_string(p),
                               point_string(p));
    out.min_abs_det = std::min(out.min_abs_det, det);

    const double ir = max_abs((d.apply(d.apply_inverse(v)) - v).at(p));
    if (ir > out.inverse_residual) {
      out.inverse_residual = ir;
      out.worst = p;
    }
    const double ar =
        std::fabs((pairing_field(d.adjoint(w), v) - pairing_field(w, d.apply(v))).at(p));
    if (ar > out.adjoint_residual) out.adjoint_residual = ar;
  }
  return out;
}

Connection deform(const Connection& G, const Deformation& d) {
  const int n = G.dim();
  const FramePair& fr = G.frame();
  std::vector<ScalarField> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                 static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s)
    for (int m = 0; m < n; ++m) {
      // Hoisting the derivative over nu would not help: each nu needs its own
      // lambda_inv(b_nu) before the derivative is taken.
      for (int nu = 0; nu < n; ++nu) {
        VectorField inner = d.apply_inverse(fr.b[static_cast<std::size_t>(nu)]);
        VectorField transported =
            d.apply(G.cov_deriv_vector(fr.b[static_cast<std::size_t>(m)], inner));
        coeffs.push_back(pairing_field(fr.beta[static_cast<std::size_t>(s)], transported));
      }
    }
  return Connection(fr, std::move(coeffs));
}

// ---- relative structures ---------------------------------------------------

RelativeStructure relative_connection(FramePair frame) {
  const int n = frame.dim();
  std::vector<ScalarField> zeros(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                                 static_cast<std::size_t>(n));
  Connection B(frame, std::move(zeros));
  return RelativeStructure{std::move(frame), std::move(B)};
}

Vector relative_tau_route(const RelativeStructure& rs, const VectorField& a,
                          const VectorField& b, const Point& p) {
  const int n = rs.frame.dim();
  const KVector ab =
      wedge(KVector::from_vector(a.at(p)), KVector::from_vector(b.at(p)));
  Vector out{std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (int s = 0; s < n; ++s) {
    const KForm dbeta = exterior_derivative(rs.frame.beta[static_cast<std::size_t>(s)], p);
    out = out + pairing(dbeta, ab) * rs.frame.b[static_cast<std::size_t>(s)].at(p);
  }
  return out;
}

KForm relative_theta_route(const RelativeStructure& rs, const FormField& w, const Point& p) {
  const int n = rs.frame.dim();
  KForm out(n, 2);
  for (int s = 0; s < n; ++s) {
    const double c = pairing_field(w, rs.frame.b[static_cast<std::size_t>(s)]).at(p);
    out = out + c * exterior_derivative(rs.frame.beta[static_cast<std::size_t>(s)], p);
  }
  return out;
}

CompatibilityCheck relative_compatibility(const RelativeStructure& A,
                                          const RelativeStructure& B, const Chart& overlap,
                                          int samples, std::uint64_t seed, double tol,
                                          std::uint64_t tag_base) {
  const int n = A.frame.dim();
  if (B.frame.dim() != n) throw DomainError("relative structures live in different dimensions");
  const FramePair coords = FramePair::coordinate_frame(n);
  const std::vector<ScalarField> ca = coeffs_in_frame(A.connection, coords);
  const std::vector<ScalarField> cb = coeffs_in_frame(B.connection, coords);
  CompatibilityCheck out;
  out.worst = Point{std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (int k = 0; k < samples; ++k) {
    SplitMix64 rng = substream(seed, tag_base + static_cast<std::uint64_t>(k));
    Point p = random_point(overlap, rng);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      const double r = std::fabs(ca[i].at(p) - cb[i].at(p));
      if (r > out.residual) {
        out.residual = r;
        out.worst = p;
      }
    }
  }
  out.compatible = out.residual <= tol;
  return out;
}

// ---- the split -------------------------------------------------------------

SplitDecomposition split(const Connection& G, FramePair frame) {
  RelativeStructure rs = relative_connection(std::move(frame));
  FramePair fr = rs.frame;
  Connection Gc = G;
  ExtensorField gamma = ExtensorField::vector_valued(
      2, 0, [Gc, fr](ExtensorField::Vecs vs, ExtensorField::Forms) {
        const int n = fr.dim();
        VectorField acc = VectorField::zero(n);
        for (int m = 0; m < n; ++m)
          acc = acc + pairing_field(fr.beta[static_cast<std::size_t>(m)], vs[1]) *
                          Gc.cov_deriv_vector(vs[0], fr.b[static_cast<std::size_t>(m)]);
        return acc;
      });
  return SplitDecomposition{std::move(rs.connection), std::move(gamma)};
}

OperatorField split_gamma_operator(const Connection& G, const FramePair& frame,
                                   const VectorField& a) {
  const int n = frame.dim();
  std::vector<VectorField> db;
  db.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m)
    db.push_back(G.cov_deriv_vector(a, frame.b[static_cast<std::size_t>(m)]));
  std::vector<ScalarField> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ScalarField acc;
      for (int m = 0; m < n; ++m)
        acc = acc + db[static_cast<std::size_t>(m)].comp(i) *
                        frame.beta[static_cast<std::size_t>(m)].comp(j);
      e[at2(n, i, j)] = std::move(acc);
    }
  return OperatorField(n, std::move(e));
}

// ---- Jacobian fields -------------------------------------------------------

namespace {

OperatorField jacobian_matrix(const FramePair& from, const FramePair& to) {
  const int n = from.dim();
  std::vector<ScalarField> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ScalarField acc;
      for (int s = 0; s < n; ++s)
        acc = acc + to.b[static_cast<std::size_t>(s)].comp(i) *
                        from.beta[static_cast<std::size_t>(s)].comp(j);
      e[at2(n, i, j)] = std::move(acc);
    }
  return OperatorField(n, std::move(e));
}

}  // namespace

JacobianField jacobian(const FramePair& frame_a, const FramePair& frame_b) {
  if (frame_a.dim() != frame_b.dim())
    throw DomainError("jacobian needs frames of equal dimension");
  return JacobianField{jacobian_matrix(frame_a, frame_b), jacobian_matrix(frame_b, frame_a)};
}

}  // namespace connkit
