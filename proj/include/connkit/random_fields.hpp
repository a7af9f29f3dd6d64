#pragma once

// Deterministic random smooth fields for property checks.
//
// Fields are drawn from the span {1, x_i, sin x_i, cos x_i} with coefficients
// uniform in [-2, 2], so every sample is smooth on any box, safe to evaluate
// at any jet rank, and bounded enough that exact identities cancel to well
// below the verification tolerances.  All draws come from the caller's RNG
// stream; identical seeds give identical fields.

#include "connkit/fields.hpp"
#include "connkit/frame.hpp"
#include "connkit/rng.hpp"

namespace connkit {

Point random_point(const Chart& chart, SplitMix64& rng);

ScalarField random_scalar_field(int dim, SplitMix64& rng);
VectorField random_vector_field(int dim, SplitMix64& rng);
FormField random_form_field(int dim, SplitMix64& rng);

// A frame that stays uniformly invertible: diagonal entries oscillate in
// [1.2, 1.8], off-diagonal amplitudes are bounded by 0.2/n, so Gershgorin
// keeps the frame matrix nonsingular on every chart.
FramePair random_frame(int dim, SplitMix64& rng);

}  // namespace connkit
