#pragma once

// Cartan connections, torsion, curvature, and the structure equations.
//
// The plus/minus Cartan connections trade the direction slot of a covariant
// derivative for a 1-form value:
//
//   Gp(v, w) = <w, D_{e_s} v> eps^s        Gm(v, w) = <D_{e_s} w, v> eps^s
//
// computed with respect to an "active" frame {e_s, eps^s}; every quantity
// built from them is frame-independent, which the tests check rather than
// assume.  The torsion and curvature families package the four equivalent
// carriers of each object (fundamental extensor, bivector extensor, tensor,
// and Cartan 2-form), and the structure equations are exposed as residuals
// with each side separately computable for diagnostics.
//
// Index conventions, fixed once:
//   - coefficients:  D_{b_mu} b_nu = G^sigma_{mu nu} b_sigma  (first lower
//     index is the direction);
//   - curvature tensor:  R(a, b, c, w) = <w, rho(b, c, a)> — the first
//     argument rotates into the last slot of rho; the reconstruction
//     rho(a, b, c) = R(c, a, b, eps^mu) e_mu depends on this order;
//   - Cartan 2-forms:  Theta^nu = Theta(eps^nu) with components
//     T(e_alpha, e_beta, eps^nu), and Omega^nu_mu = Omega(e_mu, eps^nu).

#include <vector>

#include "connkit/connection.hpp"

namespace connkit {

// Gp(v, w) with respect to `frame`; the overload without a frame uses the
// connection's own.  The value does not depend on the choice.
FormField gamma_plus(const Connection& G, const VectorField& v, const FormField& w,
                     const FramePair& frame);
FormField gamma_plus(const Connection& G, const VectorField& v, const FormField& w);

FormField gamma_minus(const Connection& G, const VectorField& v, const FormField& w,
                      const FramePair& frame);
FormField gamma_minus(const Connection& G, const VectorField& v, const FormField& w);

// Connection forms gamma^nu_mu = Gp(e_mu, eps^nu) in the connection's frame;
// flat layout nu*n + mu.
std::vector<FormField> connection_forms(const Connection& G);

class TorsionFamily {
 public:
  TorsionFamily(Connection G, FramePair active);

  // tau(a, b) = D_a b - D_b a - [a, b].
  VectorField tau(const VectorField& a, const VectorField& b) const;
  // T(a, b, w) = <w, tau(a, b)>.
  ScalarField tensor(const VectorField& a, const VectorField& b, const FormField& w) const;
  // Bivector carrier: tau_ext(X2) = 1/2 <eps^mu ^ eps^nu, X2> tau(e_mu, e_nu).
  Vector tau_ext(const KVector& X2, const Point& p) const;
  // Cartan torsion 2-form: Theta(w) = 1/2 <w, tau(e_mu, e_nu)> eps^mu ^ eps^nu.
  KForm theta(const FormField& w, const Point& p) const;

  const Connection& connection() const { return G_; }
  const FramePair& active_frame() const { return frame_; }

 private:
  Connection G_;
  FramePair frame_;
};

class CurvatureFamily {
 public:
  CurvatureFamily(Connection G, FramePair active);

  // rho(a, b, c) = D_a D_b c - D_b D_a c - D_{[a,b]} c.
  VectorField rho(const VectorField& a, const VectorField& b, const VectorField& c) const;
  // R(a, b, c, w) = <w, rho(b, c, a)>; see the rotation note above.
  ScalarField tensor(const VectorField& a, const VectorField& b, const VectorField& c,
                     const FormField& w) const;
  // Bivector carrier: r_ext(X2, c) = 1/2 <eps^mu ^ eps^nu, X2> rho(e_mu, e_nu, c).
  Vector r_ext(const KVector& X2, const VectorField& c, const Point& p) const;
  // Cartan curvature 2-form: Omega(c, w) = 1/2 <w, rho(e_mu, e_nu, c)> eps^mu ^ eps^nu.
  KForm omega(const VectorField& c, const FormField& w, const Point& p) const;

  const Connection& connection() const { return G_; }
  const FramePair& active_frame() const { return frame_; }

 private:
  Connection G_;
  FramePair frame_;
};

TorsionFamily torsion_family(const Connection& G);
TorsionFamily torsion_family(const Connection& G, FramePair active);
CurvatureFamily curvature_family(const Connection& G);
CurvatureFamily curvature_family(const Connection& G, FramePair active);

// ---- structure equations ---------------------------------------------------

// First structure equation, intrinsic form.  The right-hand side
// dw - Gm(e_s, w) ^ eps^s is exposed separately; the residual is
// Theta(w) - rhs and the contract is that it vanishes.
KForm cartan_first_rhs(const Connection& G, const FormField& w, const Point& p);
KForm cartan_first_residual(const Connection& G, const FormField& w, const Point& p);

// Frame-form version: Theta^nu - [d eps^nu + gamma^nu_s ^ eps^s].
KForm frame_torsion_residual(const Connection& G, int nu, const Point& p);

// Covariant curl: curl w = Gm(e_s, w) ^ eps^s; equals eps^mu ^ D_{e_mu} w,
// and equals dw exactly when the torsion 2-form vanishes.
KForm covariant_curl(const Connection& G, const FormField& w, const Point& p);
KForm covariant_curl(const Connection& G, const FormField& w, const Point& p,
                     const FramePair& frame);

// Second structure equation, intrinsic form.  rhs = d Gp(c, w)
// + Gp(c, eps^s) ^ Gm(e_s, w); residual = Omega(c, w) - rhs.
KForm cartan_second_rhs(const Connection& G, const VectorField& c, const FormField& w,
                        const Point& p);
KForm cartan_second_residual(const Connection& G, const VectorField& c, const FormField& w,
                             const Point& p);

// The quadratic term of the second structure equation in resolved form:
// <D_{e_nu} w, D_{e_mu} c> eps^mu ^ eps^nu.
KForm cartan_second_term_pairing(const Connection& G, const VectorField& c, const FormField& w,
                                 const Point& p);

// Frame-form version: Omega^nu_mu - [d gamma^nu_mu + gamma^nu_s ^ gamma^s_mu].
KForm frame_curvature_residual(const Connection& G, int nu, int mu, const Point& p);

// ---- duality adjoints ------------------------------------------------------

struct AdjointCheck {
  double torsion = 0.0;    // worst |<w, tau_ext(X2)> - <Theta(w), X2>|
  double curvature = 0.0;  // worst |<w, r_ext(X2, c)> - <Omega(c, w), X2>|
  Point torsion_worst, curvature_worst;
};

AdjointCheck duality_adjoint_residuals(const Connection& G, const Chart& chart, int samples,
                                       std::uint64_t seed, std::uint64_t tag_base = 0);

}  // namespace connkit
