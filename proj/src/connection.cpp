#include "connkit/connection.hpp"

#include <string>

#include "connkit/random_fields.hpp"

namespace connkit {

Connection::Connection(FramePair frame, std::vector<ScalarField> coeffs)
    : frame_(std::move(frame)), coeffs_(std::move(coeffs)) {
  const auto n = static_cast<std::size_t>(frame_.dim());
  if (coeffs_.size() != n * n * n)
    throw DomainError("connection needs " + std::to_string(n * n * n) +
                      " coefficient fields, got " + std::to_string(coeffs_.size()));
}

const ScalarField& Connection::coeff(int sigma, int mu, int nu) const {
  const int n = dim();
  return coeffs_[static_cast<std::size_t>((sigma * n + mu) * n + nu)];
}

VectorField Connection::cov_deriv_vector(const VectorField& a, const VectorField& v) const {
  const int n = dim();
  const std::vector<ScalarField> af = frame_.vector_components(a);
  const std::vector<ScalarField> vf = frame_.vector_components(v);

  std::vector<ScalarField> rf;  // frame components of the result
  rf.reserve(static_cast<std::size_t>(n));
  for (int sigma = 0; sigma < n; ++sigma) {
    ScalarField acc = directional_derivative(a, vf[static_cast<std::size_t>(sigma)]);
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        acc = acc + af[static_cast<std::size_t>(mu)] * vf[static_cast<std::size_t>(nu)] *
                        coeff(sigma, mu, nu);
    rf.push_back(std::move(acc));
  }

  if (frame_.coordinate) return VectorField(std::move(rf));
  VectorField out = rf[0] * frame_.b[0];
  for (int sigma = 1; sigma < n; ++sigma)
    out = out + rf[static_cast<std::size_t>(sigma)] * frame_.b[static_cast<std::size_t>(sigma)];
  return out;
}

FormField Connection::cov_deriv_form(const VectorField& a, const FormField& w) const {
  const int n = dim();
  // (D_a w)(v) = a(w(v)) - w(D_a v); components follow by feeding coordinate
  // basis vectors, which is enough because both sides are function-linear in v.
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const VectorField di = VectorField::coordinate_basis(n, i);
    comps.push_back(directional_derivative(a, w.comp(i)) -
                    pairing_field(w, cov_deriv_vector(a, di)));
  }
  return FormField(std::move(comps));
}

std::vector<ScalarField> coeffs_in_frame(const Connection& G, const FramePair& frame) {
  const int n = G.dim();
  if (frame.dim() != n) throw DomainError("frame dimension mismatch");
  std::vector<ScalarField> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
              static_cast<std::size_t>(n));
  for (int sigma = 0; sigma < n; ++sigma)
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        const VectorField d = G.cov_deriv_vector(frame.b[static_cast<std::size_t>(mu)],
                                                 frame.b[static_cast<std::size_t>(nu)]);
        out.push_back(pairing_field(frame.beta[static_cast<std::size_t>(sigma)], d));
      }
  return out;
}

// ---- extensor fields -------------------------------------------------------

ExtensorField ExtensorField::scalar_valued(int vector_args, int form_args, ScalarFn fn) {
  ExtensorField t;
  t.vector_args_ = vector_args;
  t.form_args_ = form_args;
  t.output_ = ExtensorOutput::Scalar;
  t.scalar_fn_ = std::move(fn);
  return t;
}

ExtensorField ExtensorField::vector_valued(int vector_args, int form_args, VectorFn fn) {
  ExtensorField t;
  t.vector_args_ = vector_args;
  t.form_args_ = form_args;
  t.output_ = ExtensorOutput::Vector;
  t.vector_fn_ = std::move(fn);
  return t;
}

ExtensorField ExtensorField::form_valued(int vector_args, int form_args, FormFn fn) {
  ExtensorField t;
  t.vector_args_ = vector_args;
  t.form_args_ = form_args;
  t.output_ = ExtensorOutput::Form;
  t.form_fn_ = std::move(fn);
  return t;
}

void ExtensorField::check_args(Vecs vs, Forms ws) const {
  if (static_cast<int>(vs.size()) != vector_args_ || static_cast<int>(ws.size()) != form_args_)
    throw DomainError("extensor applied to " + std::to_string(vs.size()) + "+" +
                      std::to_string(ws.size()) + " slots, expected " +
                      std::to_string(vector_args_) + "+" + std::to_string(form_args_));
}

ScalarField ExtensorField::apply_scalar(Vecs vs, Forms ws) const {
  check_args(vs, ws);
  if (output_ != ExtensorOutput::Scalar) throw DomainError("extensor is not scalar-valued");
  return scalar_fn_(vs, ws);
}

VectorField ExtensorField::apply_vector(Vecs vs, Forms ws) const {
  check_args(vs, ws);
  if (output_ != ExtensorOutput::Vector) throw DomainError("extensor is not vector-valued");
  return vector_fn_(vs, ws);
}

FormField ExtensorField::apply_form(Vecs vs, Forms ws) const {
  check_args(vs, ws);
  if (output_ != ExtensorOutput::Form) throw DomainError("extensor is not form-valued");
  return form_fn_(vs, ws);
}

ExtensorField cov_deriv_extensor(const Connection& G, const VectorField& a,
                                 const ExtensorField& tau) {
  const int k = tau.vector_args();
  const int l = tau.form_args();

  // Shared slot expansion: output derivative minus the sum over slots with one
  // argument differentiated.  Implemented per output kind to keep the field
  // types straight.
  switch (tau.output()) {
    case ExtensorOutput::Scalar:
      return ExtensorField::scalar_valued(
          k, l, [G, a, tau](ExtensorField::Vecs vs, ExtensorField::Forms ws) {
            ScalarField acc = directional_derivative(a, tau.apply_scalar(vs, ws));
            std::vector<VectorField> v(vs.begin(), vs.end());
            std::vector<FormField> w(ws.begin(), ws.end());
            for (std::size_t i = 0; i < v.size(); ++i) {
              std::vector<VectorField> vi = v;
              vi[i] = G.cov_deriv_vector(a, v[i]);
              acc = acc - tau.apply_scalar(vi, w);
            }
            for (std::size_t j = 0; j < w.size(); ++j) {
              std::vector<FormField> wj = w;
              wj[j] = G.cov_deriv_form(a, w[j]);
              acc = acc - tau.apply_scalar(v, wj);
            }
            return acc;
          });
    case ExtensorOutput::Vector:
      return ExtensorField::vector_valued(
          k, l, [G, a, tau](ExtensorField::Vecs vs, ExtensorField::Forms ws) {
            VectorField acc = G.cov_deriv_vector(a, tau.apply_vector(vs, ws));
            std::vector<VectorField> v(vs.begin(), vs.end());
            std::vector<FormField> w(ws.begin(), ws.end());
            for (std::size_t i = 0; i < v.size(); ++i) {
              std::vector<VectorField> vi = v;
              vi[i] = G.cov_deriv_vector(a, v[i]);
              acc = acc - tau.apply_vector(vi, w);
            }
            for (std::size_t j = 0; j < w.size(); ++j) {
              std::vector<FormField> wj = w;
              wj[j] = G.cov_deriv_form(a, w[j]);
              acc = acc - tau.apply_vector(v, wj);
            }
            return acc;
          });
    case ExtensorOutput::Form:
      return ExtensorField::form_valued(
          k, l, [G, a, tau](ExtensorField::Vecs vs, ExtensorField::Forms ws) {
            FormField acc = G.cov_deriv_form(a, tau.apply_form(vs, ws));
            std::vector<VectorField> v(vs.begin(), vs.end());
            std::vector<FormField> w(ws.begin(), ws.end());
            for (std::size_t i = 0; i < v.size(); ++i) {
              std::vector<VectorField> vi = v;
              vi[i] = G.cov_deriv_vector(a, v[i]);
              acc = acc - tau.apply_form(vi, w);
            }
            for (std::size_t j = 0; j < w.size(); ++j) {
              std::vector<FormField> wj = w;
              wj[j] = G.cov_deriv_form(a, w[j]);
              acc = acc - tau.apply_form(v, wj);
            }
            return acc;
          });
  }
  throw DomainError("unreachable extensor output kind");
}

// ---- axiom checks ----------------------------------------------------------

AxiomCheck check_connection_axioms(
    const std::function<VectorField(const VectorField&, const VectorField&)>& gamma,
    const Chart& chart, int samples, std::uint64_t seed, std::uint64_t tag_base) {
  AxiomCheck out;
  const int n = chart.dim;
  for (int k = 0; k < samples; ++k) {
    SplitMix64 rng = substream(seed, tag_base + static_cast<std::uint64_t>(k));
    const Point p = random_point(chart, rng);
    const VectorField a = random_vector_field(n, rng);
    const VectorField b = random_vector_field(n, rng);
    const VectorField v = random_vector_field(n, rng);
    const VectorField w = random_vector_field(n, rng);
    const ScalarField f = random_scalar_field(n, rng);
    const ScalarField g = random_scalar_field(n, rng);

    // First slot: gamma(f a + g b, v) = f gamma(a, v) + g gamma(b, v).
    const VectorField r1 =
        gamma(f * a + g * b, v) - f * gamma(a, v) - g * gamma(b, v);
    const double s1 = max_abs(r1.at(p));
    if (s1 >= out.strong_linearity) {
      out.strong_linearity = s1;
      out.strong_worst = p;
    }

    // Second slot: gamma(a, f v + g w)
    //   = a(f) v + a(g) w + f gamma(a, v) + g gamma(a, w).
    const VectorField r2 = gamma(a, f * v + g * w) -
                           directional_derivative(a, f) * v -
                           directional_derivative(a, g) * w - f * gamma(a, v) -
                           g * gamma(a, w);
    const double s2 = max_abs(r2.at(p));
    if (s2 >= out.quasi_linearity) {
      out.quasi_linearity = s2;
      out.quasi_worst = p;
    }
  }
  return out;
}

}  // namespace connkit
