#include "connkit/fields.hpp"

#include <algorithm>
#include <array>

#include "connkit/numfmt.hpp"

namespace connkit {

std::string describe(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (i) out += ", ";
    out += format_double(p.x[i]);
  }
  return out + ")";
}

Chart Chart::box(std::vector<std::string> names, std::vector<double> lo, std::vector<double> hi) {
  Chart c;
  c.dim = static_cast<int>(names.size());
  if (c.dim < 1) throw DomainError("chart needs at least one coordinate");
  if (lo.size() != names.size() || hi.size() != names.size())
    throw DomainError("chart domain must give one [lo, hi] interval per coordinate");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!(lo[i] < hi[i]))
      throw DomainError("chart domain for '" + names[i] + "' is empty: lo must be below hi");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == names[i]) throw DomainError("duplicate coordinate name '" + names[i] + "'");
  }
  c.coords = std::move(names);
  c.lo = std::move(lo);
  c.hi = std::move(hi);
  return c;
}

bool Chart::contains(std::span<const double> p) const {
  if (static_cast<int>(p.size()) != dim) return false;
  for (int i = 0; i < dim; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (p[u] < lo[u] || p[u] > hi[u]) return false;
  }
  return true;
}

namespace {

struct ZeroImpl final : field_detail::ScalarIface {
  double ev(std::span<const double>) const override { return 0.0; }
  J1 ev(std::span<const J1>) const override { return {}; }
  J2 ev(std::span<const J2>) const override { return {}; }
  J3 ev(std::span<const J3>) const override { return {}; }
  J4 ev(std::span<const J4>) const override { return {}; }
};

const std::shared_ptr<const field_detail::ScalarIface>& zero_impl() {
  static const std::shared_ptr<const field_detail::ScalarIface> z =
      std::make_shared<ZeroImpl>();
  return z;
}

}  // namespace

ScalarField::ScalarField() : impl_(zero_impl()) {}

ScalarField ScalarField::constant(double c) {
  return make_scalar_field([c]<class T>(std::span<const T>) { return T(c); });
}

ScalarField ScalarField::coordinate(int slot) {
  return make_scalar_field([slot]<class T>(std::span<const T> x) {
    if (slot < 0 || static_cast<std::size_t>(slot) >= x.size())
      throw DomainError("coordinate field index out of range");
    return x[static_cast<std::size_t>(slot)];
  });
}

VectorField VectorField::zero(int dim) {
  return VectorField(std::vector<ScalarField>(static_cast<std::size_t>(dim)));
}

VectorField VectorField::coordinate_basis(int dim, int i) {
  if (i < 0 || i >= dim) throw DomainError("basis vector index out of range");
  std::vector<ScalarField> comps(static_cast<std::size_t>(dim));
  comps[static_cast<std::size_t>(i)] = ScalarField::constant(1.0);
  return VectorField(std::move(comps));
}

Vector VectorField::at(const Point& p) const {
  return Vector{(*this)(std::span<const double>(p.x))};
}

FormField FormField::zero(int dim) {
  return FormField(std::vector<ScalarField>(static_cast<std::size_t>(dim)));
}

FormField FormField::coordinate_basis(int dim, int i) {
  if (i < 0 || i >= dim) throw DomainError("basis form index out of range");
  std::vector<ScalarField> comps(static_cast<std::size_t>(dim));
  comps[static_cast<std::size_t>(i)] = ScalarField::constant(1.0);
  return FormField(std::move(comps));
}

Form FormField::at(const Point& p) const { return Form{(*this)(std::span<const double>(p.x))}; }

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return make_scalar_field([a, b]<class T>(std::span<const T> x) { return a(x) + b(x); });
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return make_scalar_field([a, b]<class T>(std::span<const T> x) { return a(x) - b(x); });
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return make_scalar_field([a, b]<class T>(std::span<const T> x) { return a(x) * b(x); });
}
ScalarField operator-(const ScalarField& a) {
  return make_scalar_field([a]<class T>(std::span<const T> x) { return -a(x); });
}
ScalarField operator*(double c, const ScalarField& a) {
  return make_scalar_field([c, a]<class T>(std::span<const T> x) { return a(x) * c; });
}

namespace {

void check_same_dim(int a, int b, const char* what) {
  if (a != b)
    throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
}

template <class FieldT>
std::vector<ScalarField> combined_comps(const FieldT& a, const FieldT& b, double sb,
                                        const char* what) {
  check_same_dim(a.dim(), b.dim(), what);
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    comps.push_back(sb > 0 ? a.comp(i) + b.comp(i) : a.comp(i) - b.comp(i));
  return comps;
}

template <class FieldT>
std::vector<ScalarField> scaled_comps(const ScalarField& f, const FieldT& a) {
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) comps.push_back(f * a.comp(i));
  return comps;
}

}  // namespace

VectorField operator+(const VectorField& a, const VectorField& b) {
  return VectorField(combined_comps(a, b, 1.0, "vector field +"));
}
VectorField operator-(const VectorField& a, const VectorField& b) {
  return VectorField(combined_comps(a, b, -1.0, "vector field -"));
}
VectorField operator-(const VectorField& a) { return -1.0 * a; }
VectorField operator*(const ScalarField& f, const VectorField& a) {
  return VectorField(scaled_comps(f, a));
}
VectorField operator*(double c, const VectorField& a) {
  return ScalarField::constant(c) * a;
}

FormField operator+(const FormField& a, const FormField& b) {
  return FormField(combined_comps(a, b, 1.0, "form field +"));
}
FormField operator-(const FormField& a, const FormField& b) {
  return FormField(combined_comps(a, b, -1.0, "form field -"));
}
FormField operator-(const FormField& a) { return -1.0 * a; }
FormField operator*(const ScalarField& f, const FormField& a) {
  return FormField(scaled_comps(f, a));
}
FormField operator*(double c, const FormField& a) { return ScalarField::constant(c) * a; }

ScalarField pairing_field(const FormField& w, const VectorField& v) {
  check_same_dim(w.dim(), v.dim(), "pairing_field");
  return make_scalar_field([w, v]<class T>(std::span<const T> x) {
    T acc{};
    for (int i = 0; i < w.dim(); ++i) acc = acc + w.comp(i)(x) * v.comp(i)(x);
    return acc;
  });
}

ScalarField directional_derivative(const VectorField& a, const ScalarField& f) {
  return make_scalar_field([a, f]<class T>(std::span<const T> x) {
    const auto vp = value_and_partials(f, x);
    T acc{};
    for (int i = 0; i < a.dim(); ++i)
      acc = acc + a.comp(i)(x) * vp.partials[static_cast<std::size_t>(i)];
    return acc;
  });
}

FormField differential(const ScalarField& f, int dim) {
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    comps.push_back(make_scalar_field([f, i]<class T>(std::span<const T> x) {
      return value_and_partials(f, x).partials[static_cast<std::size_t>(i)];
    }));
  }
  return FormField(std::move(comps));
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  check_same_dim(a.dim(), b.dim(), "lie_bracket");
  std::vector<ScalarField> comps;
  const int n = a.dim();
  comps.reserve(static_cast<std::size_t>(n));
  for (int mu = 0; mu < n; ++mu) {
    comps.push_back(make_scalar_field([a, b, mu]<class T>(std::span<const T> x) {
      const auto db = value_and_partials(b.comp(mu), x);
      const auto da = value_and_partials(a.comp(mu), x);
      // The two directional sums are accumulated separately and subtracted
      // once, so swapping the arguments flips the sign bit-exactly.
      T fwd{}, rev{};
      for (int nu = 0; nu < a.dim(); ++nu) {
        const auto u = static_cast<std::size_t>(nu);
        fwd = fwd + a.comp(nu)(x) * db.partials[u];
        rev = rev + b.comp(nu)(x) * da.partials[u];
      }
      return fwd - rev;
    }));
  }
  return VectorField(std::move(comps));
}

KForm exterior_derivative(const FormField& w, const Point& p) {
  const int n = w.dim();
  const std::span<const double> x(p.x);
  // rows: gradient of each component
  std::vector<std::vector<double>> grad;
  grad.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) grad.push_back(value_and_partials(w.comp(j), x).partials);

  KForm out(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::array<int, 2> combo{i, j};
      out[combo_rank(n, combo)] = grad[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                                  grad[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace connkit
