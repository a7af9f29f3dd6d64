#pragma once

// Charts, points, and lazy fields.
//
// A field is a closure evaluable over the whole numeric tower: plain doubles
// give values, jets give derivatives, nested jets give higher derivatives.
// Derived fields (covariant derivatives, brackets, residuals) are built by
// composing closures and stay symbolic-free: differentiating a field means
// evaluating it on jets one rank up.
//
// Type erasure pins the tower at kMaxTowerRank levels: a ScalarField exposes
// one virtual evaluation per rank, so generic field bodies are written once
// and instantiated for every rank.  Exceeding the top rank is a runtime
// DomainError — the cap is part of the contract (third-order identities fit
// with one level to spare).

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "connkit/errors.hpp"
#include "connkit/exterior.hpp"
#include "connkit/jet.hpp"

namespace connkit {

struct Point {
  std::vector<double> x;
};

std::string describe(const Point& p);

// A rectangular coordinate box with named coordinates.
struct Chart {
  int dim = 0;
  std::vector<std::string> coords;
  std::vector<double> lo, hi;

  static Chart box(std::vector<std::string> names, std::vector<double> lo, std::vector<double> hi);
  bool contains(std::span<const double> p) const;
};

namespace field_detail {

struct ScalarIface {
  virtual ~ScalarIface() = default;
  virtual double ev(std::span<const double> x) const = 0;
  virtual J1 ev(std::span<const J1> x) const = 0;
  virtual J2 ev(std::span<const J2> x) const = 0;
  virtual J3 ev(std::span<const J3> x) const = 0;
  virtual J4 ev(std::span<const J4> x) const = 0;
};

template <class F>
struct ScalarImpl final : ScalarIface {
  F f;
  explicit ScalarImpl(F fn) : f(std::move(fn)) {}
  double ev(std::span<const double> x) const override { return f(x); }
  J1 ev(std::span<const J1> x) const override { return f(x); }
  J2 ev(std::span<const J2> x) const override { return f(x); }
  J3 ev(std::span<const J3> x) const override { return f(x); }
  J4 ev(std::span<const J4> x) const override { return f(x); }
};

}  // namespace field_detail

class ScalarField {
 public:
  // Default state is the zero field.
  ScalarField();

  static ScalarField constant(double c);
  static ScalarField coordinate(int slot);  // x ↦ x[slot]

  template <class T>
  T operator()(std::span<const T> x) const {
    return impl_->ev(x);
  }
  double at(const Point& p) const { return impl_->ev(std::span<const double>(p.x)); }

 private:
  std::shared_ptr<const field_detail::ScalarIface> impl_;

  template <class F>
  friend ScalarField make_scalar_field(F f);
};

// Wrap a generic closure []<class T>(std::span<const T>) -> T as a field.
template <class F>
ScalarField make_scalar_field(F f) {
  ScalarField s;
  s.impl_ = std::make_shared<field_detail::ScalarImpl<F>>(std::move(f));
  return s;
}

template <class T>
struct ValueAndPartials {
  T value;
  std::vector<T> partials;  // one per coordinate
};

// Evaluate f plus its coordinate partials at x by lifting the evaluation one
// jet rank.  The top rank cannot be lifted further; that is the tower cap.
template <class T>
ValueAndPartials<T> value_and_partials(const ScalarField& f, std::span<const T> x) {
  if constexpr (tower_rank_v<T> >= kMaxTowerRank) {
    throw DomainError(
        "jet tower depth exceeded: this computation needs more than " +
        std::to_string(kMaxTowerRank) + " derivative levels");
  } else {
    const std::size_t n = x.size();
    std::vector<Jet<T>> jx;
    jx.reserve(n);
    for (std::size_t i = 0; i < n; ++i) jx.push_back(Jet<T>::seed(x[i], n, i));
    Jet<T> r = f(std::span<const Jet<T>>(jx));
    r.partials.resize(n);
    return {std::move(r.value), std::move(r.partials)};
  }
}

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<ScalarField> comps) : comps_(std::move(comps)) {}

  static VectorField zero(int dim);
  static VectorField coordinate_basis(int dim, int i);  // ∂_i

  int dim() const { return static_cast<int>(comps_.size()); }
  const ScalarField& comp(int i) const { return comps_[static_cast<std::size_t>(i)]; }

  template <class T>
  std::vector<T> operator()(std::span<const T> x) const {
    std::vector<T> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c(x));
    return out;
  }
  Vector at(const Point& p) const;

 private:
  std::vector<ScalarField> comps_;
};

class FormField {
 public:
  FormField() = default;
  explicit FormField(std::vector<ScalarField> comps) : comps_(std::move(comps)) {}

  static FormField zero(int dim);
  static FormField coordinate_basis(int dim, int i);  // dx^i

  int dim() const { return static_cast<int>(comps_.size()); }
  const ScalarField& comp(int i) const { return comps_[static_cast<std::size_t>(i)]; }

  template <class T>
  std::vector<T> operator()(std::span<const T> x) const {
    std::vector<T> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c(x));
    return out;
  }
  Form at(const Point& p) const;

 private:
  std::vector<ScalarField> comps_;
};

// ---- field algebra ---------------------------------------------------------

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);
ScalarField operator*(double c, const ScalarField& a);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a);
VectorField operator*(const ScalarField& f, const VectorField& a);
VectorField operator*(double c, const VectorField& a);

FormField operator+(const FormField& a, const FormField& b);
FormField operator-(const FormField& a, const FormField& b);
FormField operator-(const FormField& a);
FormField operator*(const ScalarField& f, const FormField& a);
FormField operator*(double c, const FormField& a);

// ⟨ω, v⟩ as a scalar field.
ScalarField pairing_field(const FormField& w, const VectorField& v);

// ---- differential operators ------------------------------------------------

// a(f): derivative of f along the vector field a.
ScalarField directional_derivative(const VectorField& a, const ScalarField& f);

// df as a 1-form field (components ∂_i f).
FormField differential(const ScalarField& f, int dim);

// [a, b]^μ = a^ν ∂_ν b^μ − b^ν ∂_ν a^μ.
VectorField lie_bracket(const VectorField& a, const VectorField& b);

// dω at a point, for a 1-form field ω (grade-2 result).
KForm exterior_derivative(const FormField& w, const Point& p);

}  // namespace connkit
