#pragma once

// Bridge from parsed expressions to lazy fields: an Expr over the chart's
// coordinate names becomes a ScalarField evaluable at every jet rank.

#include <utility>

#include "connkit/expr.hpp"
#include "connkit/fields.hpp"

namespace connkit {

inline ScalarField field_from_expr(Expr e) {
  return make_scalar_field(
      [e = std::move(e)]<class T>(std::span<const T> x) { return e.eval(x); });
}

}  // namespace connkit
