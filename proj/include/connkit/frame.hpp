#pragma once

// Frame pairs: n vector fields spanning the tangent space together with the
// dual coframe, computed pointwise by inverting the component matrix.  The
// coordinate frame {∂_i, dx^i} is the cheap special case and is flagged so
// component extraction can skip the pairing machinery.

#include <span>
#include <vector>

#include "connkit/fields.hpp"

namespace connkit {

struct FramePair {
  std::vector<VectorField> b;  // frame vectors b_μ
  std::vector<FormField> beta;  // dual coframe β^μ, ⟨β^μ, b_ν⟩ = δ^μ_ν
  bool coordinate = false;

  int dim() const { return static_cast<int>(b.size()); }

  static FramePair coordinate_frame(int n);
  // Builds the dual coframe; each β component inverts the frame matrix at the
  // evaluation point (SingularFrameError if it degenerates).
  static FramePair from_vector_fields(std::vector<VectorField> frame);

  // Components of v in this frame: v = ⟨β^μ, v⟩ b_μ.
  std::vector<ScalarField> vector_components(const VectorField& v) const;
  // Components of ω: ω = ⟨ω, b_μ⟩ β^μ.
  std::vector<ScalarField> form_components(const FormField& w) const;
};

// c^σ_{μν} = ⟨β^σ, [b_μ, b_ν]⟩ at p; flat layout σ·n² + μ·n + ν.
std::vector<double> structure_coefficients(const FramePair& frame, const Point& p);

}  // namespace connkit
