#pragma once

// The structure zoo: everything built on top of a single connection.
//
//   - symmetry probe: a structure is symmetric when its torsion vanishes;
//     the probe reports the worst |tau(a, b)| over random samples and
//     cross-checks that the torsion 2-form vanishes with it.
//   - cyclic and Bianchi residuals: for a symmetric structure the curvature
//     satisfies rho(a,b,c) + rho(b,c,a) + rho(c,a,b) = 0 and the cyclic sum
//     of its covariant derivative (D_w rho)(a,b,c) + (D_a rho)(b,w,c) +
//     (D_b rho)(w,a,c) = 0.  The derivative of the curvature extensor needs
//     jets three levels deep.
//   - lambda-deformations: an invertible operator field lambda turns a
//     connection G into the deformed connection with derivative
//     D^λ_a v = λ(D_a λ⁻¹(v)); forms transport with the inverse dual
//     adjoint, D^λ_a ω = λ^{−△}(D_a λ^△(ω)).
//   - relative structures: a frame {b_μ} induces the connection whose
//     parallel fields are exactly the constant-coefficient combinations of
//     the b_μ; its coefficients vanish in that frame, its torsion is carried
//     entirely by the coframe differentials, and its curvature vanishes.
//   - the split: against any frame, D_a v = ∂_a v + γ(a, v) with
//     γ(a, v) = β^μ(v) D_a b_μ and ∂ the frame's relative derivative; forms
//     pick up the dual adjoint with a minus sign.
//   - Jacobian fields: two frames are linked by J(v) = β^σ(v) b'_σ, which
//     maps one relative structure onto the other.

#include <cstdint>
#include <string>
#include <vector>

#include "connkit/cartan.hpp"
#include "connkit/connection.hpp"

namespace connkit {

// A pointwise linear operator on tangent vectors: an n x n matrix of scalar
// fields, row-major, acting by (L v)^i = L^i_j v^j.  The dual adjoint acts on
// forms from the right, (L^adj w)_j = w_i L^i_j, so <L^adj(w), v> = <w, L(v)>.
class OperatorField {
 public:
  OperatorField() = default;
  OperatorField(int dim, std::vector<ScalarField> entries);

  static OperatorField identity(int dim);

  int dim() const { return dim_; }
  const ScalarField& entry(int i, int j) const;

  VectorField apply(const VectorField& v) const;
  FormField adjoint_apply(const FormField& w) const;

  // Pointwise matrix inverse; evaluating the result where the matrix is
  // singular raises SingularFrameError tagged with `context`.
  OperatorField inverse(std::string context = "operator inverse") const;

  // this after inner: (A.compose(B))(v) = A(B(v)).
  OperatorField compose(const OperatorField& inner) const;

 private:
  int dim_ = 0;
  std::vector<ScalarField> e_;
};

// ---- symmetry, cyclic and Bianchi identities -------------------------------

struct SymmetryCheck {
  bool symmetric = true;
  double residual = 0.0;        // worst |tau(a, b)| component over the samples
  double theta_residual = 0.0;  // worst |Theta(w)| component (cross-check)
  Point worst;
};

// Samples tau at `samples` random (a, b, point) tuples; symmetric when the
// worst residual stays within `tol`.
SymmetryCheck is_symmetric(const Connection& G, const Chart& chart, int samples,
                           std::uint64_t seed, double tol = 1e-10,
                           std::uint64_t tag_base = 0);

// The curvature as a 3-covariant vector extensor field (a, b, c) -> rho(a, b, c),
// ready for the extensor derivative rule.
ExtensorField curvature_extensor(const Connection& G);

// rho(a,b,c) + rho(b,c,a) + rho(c,a,b); vanishes for symmetric structures.
Vector cyclic_residual(const Connection& G, const VectorField& a, const VectorField& b,
                       const VectorField& c, const Point& p);

// (D_w rho)(a,b,c) + (D_a rho)(b,w,c) + (D_b rho)(w,a,c); vanishes for
// symmetric structures.  Needs jets of depth 3.
Vector bianchi_residual(const Connection& G, const VectorField& w, const VectorField& a,
                        const VectorField& b, const VectorField& c, const Point& p);

// ---- lambda-deformations ---------------------------------------------------

struct Deformation {
  OperatorField lambda;
  OperatorField lambda_inv;

  // Builds the inverse pointwise from lambda.
  static Deformation from_operator(OperatorField op);

  VectorField apply(const VectorField& v) const { return lambda.apply(v); }
  VectorField apply_inverse(const VectorField& v) const { return lambda_inv.apply(v); }
  // Dual adjoint lambda^adj and its inverse (the adjoint of the inverse).
  FormField adjoint(const FormField& w) const { return lambda.adjoint_apply(w); }
  FormField adjoint_inverse(const FormField& w) const { return lambda_inv.adjoint_apply(w); }
};

struct DeformationCheck {
  double inverse_residual = 0.0;  // worst |lambda(lambda_inv(v)) - v|
  double adjoint_residual = 0.0;  // worst |<lambda^adj(w), v> - <w, lambda(v)>|
  double min_abs_det = 0.0;
  Point worst;
};

// Probes invertibility (|det| > 1e-8 at every sample; throws
// SingularFrameError otherwise) and the two defining invariants.
DeformationCheck check_deformation(const Deformation& d, const Chart& chart, int samples,
                                   std::uint64_t seed, std::uint64_t tag_base = 0);

// The deformed connection: coefficients of D^λ_a v = λ(D_a λ⁻¹(v)) resolved
// against G's frame.
Connection deform(const Connection& G, const Deformation& d);

// ---- relative structures ---------------------------------------------------

struct RelativeStructure {
  FramePair frame;
  Connection connection;  // zero coefficients with respect to `frame`
};

// The connection that makes every frame field parallel.
RelativeStructure relative_connection(FramePair frame);

// Closed-form torsion routes special to relative structures:
//   tau(a, b) = [d beta^s](a, b) b_s  and  Theta(w) = <w, b_s> d beta^s.
Vector relative_tau_route(const RelativeStructure& rs, const VectorField& a,
                          const VectorField& b, const Point& p);
KForm relative_theta_route(const RelativeStructure& rs, const FormField& w, const Point& p);

// Two relative structures agree on an overlap box when their induced
// connections have the same coordinate coefficients there.
struct CompatibilityCheck {
  bool compatible = true;
  double residual = 0.0;
  Point worst;
};
CompatibilityCheck relative_compatibility(const RelativeStructure& A,
                                          const RelativeStructure& B, const Chart& overlap,
                                          int samples, std::uint64_t seed, double tol = 1e-9,
                                          std::uint64_t tag_base = 0);

// ---- the split -------------------------------------------------------------

struct SplitDecomposition {
  Connection B;         // relative part, induced by the frame
  ExtensorField gamma;  // gamma(a, v) = beta^mu(v) D_a b_mu
};

SplitDecomposition split(const Connection& G, FramePair frame);

// gamma with the direction frozen, as an operator field; its dual adjoint
// gives the form rule D_a w = del_a w - gamma_a^adj(w).
OperatorField split_gamma_operator(const Connection& G, const FramePair& frame,
                                   const VectorField& a);

// ---- Jacobian fields -------------------------------------------------------

struct JacobianField {
  OperatorField J;      // J(v) = beta^s(v) b'_s
  OperatorField J_inv;  // the Jacobian of the swapped pair
};

JacobianField jacobian(const FramePair& frame_a, const FramePair& frame_b);

}  // namespace connkit
