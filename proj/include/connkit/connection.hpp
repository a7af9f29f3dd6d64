#pragma once

// Connections and covariant differentiation.
//
// A connection is specified by coefficient fields with respect to a frame
// {b_mu}: the derivative of b_nu along b_mu has frame components G^sigma_{mu nu}
// (first lower index is the direction).  Derivatives of arbitrary fields
// follow by expanding both arguments in the frame:
//
//   D_a v = [ a(v^sigma) + a^mu v^nu G^sigma_{mu nu} ] b_sigma
//
// with a^mu, v^nu the frame components.  Form derivatives are defined through
// the pairing — (D_a w)(v) = a(w(v)) - w(D_a v) — and extensor derivatives by
// the usual chain over every slot.

#include <functional>
#include <span>
#include <vector>

#include "connkit/fields.hpp"
#include "connkit/frame.hpp"
#include "connkit/rng.hpp"

namespace connkit {

class Connection {
 public:
  // coeffs is the flat n^3 array G^sigma_{mu nu} at sigma*n^2 + mu*n + nu.
  Connection(FramePair frame, std::vector<ScalarField> coeffs);

  int dim() const { return frame_.dim(); }
  const FramePair& frame() const { return frame_; }
  const ScalarField& coeff(int sigma, int mu, int nu) const;

  VectorField cov_deriv_vector(const VectorField& a, const VectorField& v) const;
  FormField cov_deriv_form(const VectorField& a, const FormField& w) const;

 private:
  FramePair frame_;
  std::vector<ScalarField> coeffs_;
};

// Coefficients of G rewritten with respect to another frame:
// G'^sigma_{mu nu} = <beta'^sigma, D_{b'_mu} b'_nu>, flat layout as above.
std::vector<ScalarField> coeffs_in_frame(const Connection& G, const FramePair& frame);

// ---- extensor fields -------------------------------------------------------

enum class ExtensorOutput { Scalar, Vector, Form };

// A multilinear field map taking vector-field and form-field slots.  The
// callable produces a lazy field, so extensors compose and differentiate
// without evaluation until a point is supplied.
class ExtensorField {
 public:
  using Vecs = std::span<const VectorField>;
  using Forms = std::span<const FormField>;
  using ScalarFn = std::function<ScalarField(Vecs, Forms)>;
  using VectorFn = std::function<VectorField(Vecs, Forms)>;
  using FormFn = std::function<FormField(Vecs, Forms)>;

  static ExtensorField scalar_valued(int vector_args, int form_args, ScalarFn fn);
  static ExtensorField vector_valued(int vector_args, int form_args, VectorFn fn);
  static ExtensorField form_valued(int vector_args, int form_args, FormFn fn);

  int vector_args() const { return vector_args_; }
  int form_args() const { return form_args_; }
  ExtensorOutput output() const { return output_; }

  ScalarField apply_scalar(Vecs vs, Forms ws) const;
  VectorField apply_vector(Vecs vs, Forms ws) const;
  FormField apply_form(Vecs vs, Forms ws) const;

 private:
  ExtensorField() = default;
  void check_args(Vecs vs, Forms ws) const;

  int vector_args_ = 0;
  int form_args_ = 0;
  ExtensorOutput output_ = ExtensorOutput::Scalar;
  ScalarFn scalar_fn_;
  VectorFn vector_fn_;
  FormFn form_fn_;
};

// D_a tau: derivative of the output minus tau applied to the derivative of
// each slot in turn.
ExtensorField cov_deriv_extensor(const Connection& G, const VectorField& a,
                                 const ExtensorField& tau);

// ---- axiom checks ----------------------------------------------------------

struct AxiomCheck {
  double strong_linearity = 0.0;  // first slot, worst residual over samples
  double quasi_linearity = 0.0;   // second slot
  Point strong_worst, quasi_worst;
};

// Samples random fields/points and measures how far `gamma` is from
// satisfying function-linearity in the direction slot and the Leibniz-shaped
// quasi-linearity in the argument slot.  Sample k draws its fields from
// substream(seed, tag_base + k).
AxiomCheck check_connection_axioms(
    const std::function<VectorField(const VectorField&, const VectorField&)>& gamma,
    const Chart& chart, int samples, std::uint64_t seed, std::uint64_t tag_base = 0);

}  // namespace connkit
