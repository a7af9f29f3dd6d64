#include "connkit/cartan.hpp"

#include <cmath>

#include "connkit/random_fields.hpp"

namespace connkit {

namespace {

KForm form1(const Form& w) { return KForm::from_form(w); }

double dot(const Form& w, const Vector& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.c.size(); ++i) acc += w.c[i] * v.c[i];
  return acc;
}

}  // namespace

FormField gamma_plus(const Connection& G, const VectorField& v, const FormField& w,
                     const FramePair& frame) {
  const int n = G.dim();
  FormField out = pairing_field(w, G.cov_deriv_vector(frame.b[0], v)) * frame.beta[0];
  for (int s = 1; s < n; ++s)
    out = out + pairing_field(w, G.cov_deriv_vector(frame.b[static_cast<std::size_t>(s)], v)) *
                    frame.beta[static_cast<std::size_t>(s)];
  return out;
}

FormField gamma_plus(const Connection& G, const VectorField& v, const FormField& w) {
  return gamma_plus(G, v, w, G.frame());
}

FormField gamma_minus(const Connection& G, const VectorField& v, const FormField& w,
                      const FramePair& frame) {
  const int n = G.dim();
  FormField out = pairing_field(G.cov_deriv_form(frame.b[0], w), v) * frame.beta[0];
  for (int s = 1; s < n; ++s)
    out = out + pairing_field(G.cov_deriv_form(frame.b[static_cast<std::size_t>(s)], w), v) *
                    frame.beta[static_cast<std::size_t>(s)];
  return out;
}

FormField gamma_minus(const Connection& G, const VectorField& v, const FormField& w) {
  return gamma_minus(G, v, w, G.frame());
}

std::vector<FormField> connection_forms(const Connection& G) {
  const int n = G.dim();
  const FramePair& fr = G.frame();
  std::vector<FormField> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int nu = 0; nu < n; ++nu)
    for (int mu = 0; mu < n; ++mu)
      out.push_back(gamma_plus(G, fr.b[static_cast<std::size_t>(mu)],
                               fr.beta[static_cast<std::size_t>(nu)], fr));
  return out;
}

// ---- torsion family --------------------------------------------------------

TorsionFamily::TorsionFamily(Connection G, FramePair active)
    : G_(std::move(G)), frame_(std::move(active)) {}

VectorField TorsionFamily::tau(const VectorField& a, const VectorField& b) const {
  return G_.cov_deriv_vector(a, b) - G_.cov_deriv_vector(b, a) - lie_bracket(a, b);
}

ScalarField TorsionFamily::tensor(const VectorField& a, const VectorField& b,
                                  const FormField& w) const {
  return pairing_field(w, tau(a, b));
}

Vector TorsionFamily::tau_ext(const KVector& X2, const Point& p) const {
  const int n = G_.dim();
  Vector acc{std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu) continue;
      const KForm em = form1(frame_.beta[static_cast<std::size_t>(mu)].at(p));
      const KForm en = form1(frame_.beta[static_cast<std::size_t>(nu)].at(p));
      const double weight = 0.5 * pairing(wedge(em, en), X2);
      if (weight == 0.0) continue;
      acc = acc + weight * tau(frame_.b[static_cast<std::size_t>(mu)],
                               frame_.b[static_cast<std::size_t>(nu)])
                               .at(p);
    }
  return acc;
}

KForm TorsionFamily::theta(const FormField& w, const Point& p) const {
  const int n = G_.dim();
  KForm acc(n, 2);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu) continue;
      const double s = pairing_field(w, tau(frame_.b[static_cast<std::size_t>(mu)],
                                            frame_.b[static_cast<std::size_t>(nu)]))
                           .at(p);
      const KForm em = form1(frame_.beta[static_cast<std::size_t>(mu)].at(p));
      const KForm en = form1(frame_.beta[static_cast<std::size_t>(nu)].at(p));
      acc = acc + (0.5 * s) * wedge(em, en);
    }
  return acc;
}

// ---- curvature family ------------------------------------------------------

CurvatureFamily::CurvatureFamily(Connection G, FramePair active)
    : G_(std::move(G)), frame_(std::move(active)) {}

VectorField CurvatureFamily::rho(const VectorField& a, const VectorField& b,
                                 const VectorField& c) const {
  return G_.cov_deriv_vector(a, G_.cov_deriv_vector(b, c)) -
         G_.cov_deriv_vector(b, G_.cov_deriv_vector(a, c)) -
         G_.cov_deriv_vector(lie_bracket(a, b), c);
}

ScalarField CurvatureFamily::tensor(const VectorField& a, const VectorField& b,
                                    const VectorField& c, const FormField& w) const {
  return pairing_field(w, rho(b, c, a));
}

Vector CurvatureFamily::r_ext(const KVector& X2, const VectorField& c, const Point& p) const {
  const int n = G_.dim();
  Vector acc{std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu) continue;
      const KForm em = form1(frame_.beta[static_cast<std::size_t>(mu)].at(p));
      const KForm en = form1(frame_.beta[static_cast<std::size_t>(nu)].at(p));
      const double weight = 0.5 * pairing(wedge(em, en), X2);
      if (weight == 0.0) continue;
      acc = acc + weight * rho(frame_.b[static_cast<std::size_t>(mu)],
                               frame_.b[static_cast<std::size_t>(nu)], c)
                               .at(p);
    }
  return acc;
}

KForm CurvatureFamily::omega(const VectorField& c, const FormField& w, const Point& p) const {
  const int n = G_.dim();
  KForm acc(n, 2);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu) continue;
      const double s = pairing_field(w, rho(frame_.b[static_cast<std::size_t>(mu)],
                                            frame_.b[static_cast<std::size_t>(nu)], c))
                           .at(p);
      const KForm em = form1(frame_.beta[static_cast<std::size_t>(mu)].at(p));
      const KForm en = form1(frame_.beta[static_cast<std::size_t>(nu)].at(p));
      acc = acc + (0.5 * s) * wedge(em, en);
    }
  return acc;
}

TorsionFamily torsion_family(const Connection& G) { return TorsionFamily(G, G.frame()); }
TorsionFamily torsion_family(const Connection& G, FramePair active) {
  return TorsionFamily(G, std::move(active));
}
CurvatureFamily curvature_family(const Connection& G) { return CurvatureFamily(G, G.frame()); }
CurvatureFamily curvature_family(const Connection& G, FramePair active) {
  return CurvatureFamily(G, std::move(active));
}

// ---- structure equations ---------------------------------------------------

KForm cartan_first_rhs(const Connection& G, const FormField& w, const Point& p) {
  const int n = G.dim();
  const FramePair& fr = G.frame();
  KForm acc = exterior_derivative(w, p);
  for (int s = 0; s < n; ++s) {
    const Form gm = gamma_minus(G, fr.b[static_cast<std::size_t>(s)], w, fr).at(p);
    const Form eps = fr.beta[static_cast<std::size_t>(s)].at(p);
    acc = acc - wedge(form1(gm), form1(eps));
  }
  return acc;
}

KForm cartan_first_residual(const Connection& G, const FormField& w, const Point& p) {
  return torsion_family(G).theta(w, p) - cartan_first_rhs(G, w, p);
}

KForm frame_torsion_residual(const Connection& G, int nu, const Point& p) {
  const int n = G.dim();
  const FramePair& fr = G.frame();
  const FormField& eps_nu = fr.beta[static_cast<std::size_t>(nu)];
  KForm rhs = exterior_derivative(eps_nu, p);
  const std::vector<FormField> gam = connection_forms(G);
  for (int s = 0; s < n; ++s) {
    const Form g = gam[static_cast<std::size_t>(nu * n + s)].at(p);
    const Form eps = fr.beta[static_cast<std::size_t>(s)].at(p);
    rhs = rhs + wedge(form1(g), form1(eps));
  }
  return torsion_family(G).theta(eps_nu, p) - rhs;
}

KForm covariant_curl(const Connection& G, const FormField& w, const Point& p,
                     const FramePair& frame) {
  const int n = G.dim();
  KForm acc(n, 2);
  for (int s = 0; s < n; ++s) {
    const Form gm = gamma_minus(G, frame.b[static_cast<std::size_t>(s)], w, frame).at(p);
    const Form eps = frame.beta[static_cast<std::size_t>(s)].at(p);
    acc = acc + wedge(form1(gm), form1(eps));
  }
  return acc;
}

KForm covariant_curl(const Connection& G, const FormField& w, const Point& p) {
  return covariant_curl(G, w, p, G.frame());
}

KForm cartan_second_rhs(const Connection& G, const VectorField& c, const FormField& w,
                        const Point& p) {
  const int n = G.dim();
  const FramePair& fr = G.frame();
  KForm acc = exterior_derivative(gamma_plus(G, c, w, fr), p);
  for (int s = 0; s < n; ++s) {
    const Form gp = gamma_plus(G, c, fr.beta[static_cast<std::size_t>(s)], fr).at(p);
    const Form gm = gamma_minus(G, fr.b[static_cast<std::size_t>(s)], w, fr).at(p);
    acc = acc + wedge(form1(gp), form1(gm));
  }
  return acc;
}

KForm cartan_second_residual(const Connection& G, const VectorField& c, const FormField& w,
                             const Point& p) {
  return curvature_family(G).omega(c, w, p) - cartan_second_rhs(G, c, w, p);
}

KForm cartan_second_term_pairing(const Connection& G, const VectorField& c, const FormField& w,
                                 const Point& p) {
  const int n = G.dim();
  const FramePair& fr = G.frame();
  KForm acc(n, 2);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu) continue;
      const FormField dw = G.cov_deriv_form(fr.b[static_cast<std::size_t>(nu)], w);
      const VectorField dc = G.cov_deriv_vector(fr.b[static_cast<std::size_t>(mu)], c);
      const double s = pairing_field(dw, dc).at(p);
      const KForm em = form1(fr.beta[static_cast<std::size_t>(mu)].at(p));
      const KForm en = form1(fr.beta[static_cast<std::size_t>(nu)].at(p));
      acc = acc + s * wedge(em, en);
    }
  return acc;
}

KForm frame_curvature_residual(const Connection& G, int nu, int mu, const Point& p) {
  const int n = G.dim();
  const FramePair& fr = G.frame();
  const std::vector<FormField> gam = connection_forms(G);
  KForm rhs = exterior_derivative(gam[static_cast<std::size_t>(nu * n + mu)], p);
  for (int s = 0; s < n; ++s) {
    const Form gns = gam[static_cast<std::size_t>(nu * n + s)].at(p);
    const Form gsm = gam[static_cast<std::size_t>(s * n + mu)].at(p);
    rhs = rhs + wedge(form1(gns), form1(gsm));
  }
  const KForm lhs = curvature_family(G).omega(fr.b[static_cast<std::size_t>(mu)],
                                              fr.beta[static_cast<std::size_t>(nu)], p);
  return lhs - rhs;
}

// ---- duality adjoints ------------------------------------------------------

AdjointCheck duality_adjoint_residuals(const Connection& G, const Chart& chart, int samples,
                                       std::uint64_t seed, std::uint64_t tag_base) {
  AdjointCheck out;
  const int n = G.dim();
  const TorsionFamily tf = torsion_family(G);
  const CurvatureFamily cf = curvature_family(G);
  const int m = binomial(n, 2);
  for (int k = 0; k < samples; ++k) {
    SplitMix64 rng = substream(seed, tag_base + static_cast<std::uint64_t>(k));
    const Point p = random_point(chart, rng);
    std::vector<double> xc(static_cast<std::size_t>(m));
    for (double& v : xc) v = rng.uniform(-2.0, 2.0);
    const KVector X2 = KVector::from_components(n, 2, xc);
    const FormField w = random_form_field(n, rng);
    const VectorField c = random_vector_field(n, rng);

    const Form wp = w.at(p);
    const double t_lhs = dot(wp, tf.tau_ext(X2, p));
    const double t_rhs = pairing(tf.theta(w, p), X2);
    const double tr = std::abs(t_lhs - t_rhs);
    if (tr >= out.torsion) {
      out.torsion = tr;
      out.torsion_worst = p;
    }

    const double c_lhs = dot(wp, cf.r_ext(X2, c, p));
    const double c_rhs = pairing(cf.omega(c, w, p), X2);
    const double cr = std::abs(c_lhs - c_rhs);
    if (cr >= out.curvature) {
      out.curvature = cr;
      out.curvature_worst = p;
    }
  }
  return out;
}

}  // namespace connkit
