#pragma once

// Nestable forward-mode derivative numbers.
//
// A Jet<T> carries a value and its partial derivatives with respect to the
// chart coordinates, truncated at first order.  Nesting raises the derivative
// order: Jet<Jet<double>> tracks second derivatives, and so on.  The kernel
// never forms symbolic derivatives; every differential operator is evaluated
// by running field code on jets.
//
// Conventions:
//  * An empty `partials` vector means "all partials are zero".  Arithmetic
//    broadcasts the shorter operand, so Jet(c) works as a constant without
//    knowing the chart dimension.
//  * Divergent operations (division by a zero jet, log of a non-positive
//    value) are the caller's responsibility; the expression evaluator checks
//    domains before calling in here.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace connkit {

template <class T>
struct Jet {
  T value{};
  std::vector<T> partials{};

  Jet() = default;
  Jet(double c)
    requires(!std::is_same_v<T, double>)
      : value(c) {}
  Jet(T v) : value(std::move(v)) {}
  Jet(T v, std::vector<T> d) : value(std::move(v)), partials(std::move(d)) {}

  // Independent-variable lift: value v, unit derivative in `slot` of `dim`.
  static Jet seed(T v, std::size_t dim, std::size_t slot) {
    Jet j{std::move(v), std::vector<T>(dim)};
    j.partials[slot] = T(1.0);
    return j;
  }

  // Partial with respect to coordinate i (zero if never touched).
  const T& d(std::size_t i) const {
    static const T zero{};
    return i < partials.size() ? partials[i] : zero;
  }
};

using J1 = Jet<double>;
using J2 = Jet<J1>;
using J3 = Jet<J2>;
using J4 = Jet<J3>;

// Height of a type in the numeric tower: double is 0, Jet<double> is 1, ...
template <class T>
struct TowerRank;
template <>
struct TowerRank<double> {
  static constexpr int value = 0;
};
template <class T>
struct TowerRank<Jet<T>> {
  static constexpr int value = TowerRank<T>::value + 1;
};
template <class T>
inline constexpr int tower_rank_v = TowerRank<T>::value;

// Deepest jet the field layer instantiates.  Rank 3 is what the third-order
// identities need; rank 4 is headroom so that taking one more derivative of a
// rank-3 computation fails at run time with a clear error, not in the
// compiler.
inline constexpr int kMaxTowerRank = 4;

inline double scalar_part(double x) { return x; }
template <class T>
double scalar_part(const Jet<T>& x) {
  return scalar_part(x.value);
}

namespace jet_detail {

template <class T>
const T& part(const std::vector<T>& p, std::size_t i) {
  static const T zero{};
  return i < p.size() ? p[i] : zero;
}

// f(x) for known f(x.value) and f'(x.value).
template <class T>
Jet<T> chain(const Jet<T>& x, T fx, T dfx) {
  Jet<T> r{std::move(fx)};
  r.partials.reserve(x.partials.size());
  for (const T& p : x.partials) r.partials.push_back(dfx * p);
  return r;
}

}  // namespace jet_detail

template <class T>
Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r{a.value + b.value};
  const std::size_t n = std::max(a.partials.size(), b.partials.size());
  r.partials.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.partials.push_back(jet_detail::part(a.partials, i) + jet_detail::part(b.partials, i));
  return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r{a.value - b.value};
  const std::size_t n = std::max(a.partials.size(), b.partials.size());
  r.partials.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.partials.push_back(jet_detail::part(a.partials, i) - jet_detail::part(b.partials, i));
  return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& a) {
  Jet<T> r{-a.value};
  r.partials.reserve(a.partials.size());
  for (const T& p : a.partials) r.partials.push_back(-p);
  return r;
}

template <class T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r{a.value * b.value};
  const std::size_t n = std::max(a.partials.size(), b.partials.size());
  r.partials.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.partials.push_back(jet_detail::part(a.partials, i) * b.value +
                         a.value * jet_detail::part(b.partials, i));
  return r;
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r{a.value / b.value};
  const std::size_t n = std::max(a.partials.size(), b.partials.size());
  r.partials.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    r.partials.push_back((jet_detail::part(a.partials, i) - r.value * jet_detail::part(b.partials, i)) /
                         b.value);
  return r;
}

template <class T>
Jet<T> operator+(const Jet<T>& a, double c) {
  Jet<T> r = a;
  r.value = r.value + c;
  return r;
}
template <class T>
Jet<T> operator+(double c, const Jet<T>& a) {
  return a + c;
}
template <class T>
Jet<T> operator-(const Jet<T>& a, double c) {
  return a + (-c);
}
template <class T>
Jet<T> operator-(double c, const Jet<T>& a) {
  return -a + c;
}
template <class T>
Jet<T> operator*(const Jet<T>& a, double c) {
  Jet<T> r{a.value * c};
  r.partials.reserve(a.partials.size());
  for (const T& p : a.partials) r.partials.push_back(p * c);
  return r;
}
template <class T>
Jet<T> operator*(double c, const Jet<T>& a) {
  return a * c;
}
template <class T>
Jet<T> operator/(const Jet<T>& a, double c) {
  return a * (1.0 / c);
}
template <class T>
Jet<T> operator/(double c, const Jet<T>& a) {
  return Jet<T>(c) / a;
}

template <class T>
Jet<T> sin(const Jet<T>& x) {
  using std::cos;
  using std::sin;
  return jet_detail::chain(x, T(sin(x.value)), T(cos(x.value)));
}

template <class T>
Jet<T> cos(const Jet<T>& x) {
  using std::cos;
  using std::sin;
  return jet_detail::chain(x, T(cos(x.value)), T(-sin(x.value)));
}

template <class T>
Jet<T> tan(const Jet<T>& x) {
  using std::tan;
  T t = tan(x.value);
  return jet_detail::chain(x, t, T(1.0 + t * t));
}

template <class T>
Jet<T> exp(const Jet<T>& x) {
  using std::exp;
  T e = exp(x.value);
  return jet_detail::chain(x, e, e);
}

template <class T>
Jet<T> log(const Jet<T>& x) {
  using std::log;
  return jet_detail::chain(x, T(log(x.value)), T(1.0 / x.value));
}

template <class T>
Jet<T> sqrt(const Jet<T>& x) {
  using std::sqrt;
  T s = sqrt(x.value);
  return jet_detail::chain(x, s, T(0.5 / s));
}

// Integer power by repeated multiplication: exact on jets, defined for
// negative bases, and the only form of ^ the evaluator accepts there.
inline double pow_int(double x, long long e) {
  if (e < 0) return 1.0 / pow_int(x, -e);
  double r = 1.0, b = x;
  for (long long k = e; k > 0; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

template <class T>
Jet<T> pow_int(const Jet<T>& x, long long e) {
  if (e < 0) return 1.0 / pow_int(x, -e);
  Jet<T> r(1.0), b = x;
  for (long long k = e; k > 0; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

// General power for positive bases.  Both the plain-real and the jet path go
// through exp/log so the value component of a jet evaluation is bit-identical
// to the plain evaluation.
inline double pow_general(double a, double b) {
  using std::exp;
  using std::log;
  return exp(b * log(a));
}

template <class T>
Jet<T> pow_general(const Jet<T>& a, const Jet<T>& b) {
  return exp(b * log(a));
}

}  // namespace connkit
