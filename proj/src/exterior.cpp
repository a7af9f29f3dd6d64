#include "connkit/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "connkit/errors.hpp"
#include "connkit/numfmt.hpp"

namespace connkit {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

int combo_rank(int n, std::span<const int> combo) {
  const int k = static_cast<int>(combo.size());
  int rank = 0, prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev; v < combo[i]; ++v) rank += binomial(n - 1 - v, k - 1 - i);
    prev = combo[i] + 1;
  }
  return rank;
}

std::vector<int> combo_unrank(int n, int k, int rank) {
  std::vector<int> c(static_cast<std::size_t>(k));
  int v = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++v) {
      const int block = binomial(n - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    c[static_cast<std::size_t>(i)] = v++;
  }
  return c;
}

namespace {

// Grades above the dimension are allowed as the empty zero space (C(n,k)=0
// components); only the wedge *operation* treats overflow as an error.
void check_dims(int n, int k, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": chart dimension must be at least 1");
  if (k < 0) throw DomainError(std::string(what) + ": negative grade " + std::to_string(k));
}

std::vector<double> checked_components(int n, int k, std::vector<double> comps, const char* what) {
  check_dims(n, k, what);
  if (static_cast<int>(comps.size()) != binomial(n, k))
    throw DomainError(std::string(what) + ": expected " + std::to_string(binomial(n, k)) +
                      " components, got " + std::to_string(comps.size()));
  return comps;
}

std::vector<double> basis_components(int n, std::span<const int> indices, const char* what) {
  const int k = static_cast<int>(indices.size());
  check_dims(n, k, what);
  std::vector<int> zero_based;
  zero_based.reserve(indices.size());
  int prev = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > n)
      throw DomainError(std::string(what) + ": basis index " + std::to_string(idx) +
                        " outside [1, " + std::to_string(n) + "]");
    if (idx <= prev)
      throw DomainError(std::string(what) + ": basis indices must be strictly increasing");
    prev = idx;
    zero_based.push_back(idx - 1);
  }
  std::vector<double> comps(static_cast<std::size_t>(binomial(n, k)), 0.0);
  comps[static_cast<std::size_t>(combo_rank(n, zero_based))] = 1.0;
  return comps;
}

// Merge two strictly increasing tuples; returns false if they intersect,
// otherwise fills `out` and the sign of the permutation sorting I++J.
bool merge_with_sign(std::span<const int> a, std::span<const int> b, std::vector<int>& out,
                     int& sign) {
  out.clear();
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining a-entries
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  sign = (inversions % 2 == 0) ? 1 : -1;
  return true;
}

std::vector<double> wedge_components(int n, int ka, std::span<const double> a, int kb,
                                     std::span<const double> b) {
  const int k = ka + kb;
  if (k > n)
    throw DomainError("wedge: resulting grade " + std::to_string(k) + " exceeds chart dimension " +
                      std::to_string(n));
  std::vector<double> out(static_cast<std::size_t>(binomial(n, k)), 0.0);
  std::vector<int> merged;
  for (int ra = 0; ra < static_cast<int>(a.size()); ++ra) {
    if (a[static_cast<std::size_t>(ra)] == 0.0) continue;
    const std::vector<int> ca = combo_unrank(n, ka, ra);
    for (int rb = 0; rb < static_cast<int>(b.size()); ++rb) {
      if (b[static_cast<std::size_t>(rb)] == 0.0) continue;
      const std::vector<int> cb = combo_unrank(n, kb, rb);
      int sign;
      if (!merge_with_sign(ca, cb, merged, sign)) continue;
      out[static_cast<std::size_t>(combo_rank(n, merged))] +=
          sign * a[static_cast<std::size_t>(ra)] * b[static_cast<std::size_t>(rb)];
    }
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string describe_components(std::span<const double> comps, int n, int k,
                                std::span<const std::string> names, const char* sep_prefix) {
  std::string out;
  for (int r = 0; r < static_cast<int>(comps.size()); ++r) {
    const double c = comps[static_cast<std::size_t>(r)];
    if (c == 0.0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += format_double(std::abs(c));
    if (k > 0) {
      out += " ";
      const std::vector<int> combo = combo_unrank(n, k, r);
      for (std::size_t i = 0; i < combo.size(); ++i) {
        if (i) out += "^";
        out += sep_prefix + names[static_cast<std::size_t>(combo[i])];
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

KVector::KVector(int dim, int grade) : n_(dim), k_(grade) {
  check_dims(dim, grade, "KVector");
  comps_.assign(static_cast<std::size_t>(binomial(dim, grade)), 0.0);
}

KVector KVector::from_components(int dim, int grade, std::vector<double> comps) {
  KVector x(dim, grade);
  x.comps_ = checked_components(dim, grade, std::move(comps), "KVector");
  return x;
}

KVector KVector::from_vector(const Vector& v) {
  return from_components(static_cast<int>(v.c.size()), 1, v.c);
}

KVector KVector::basis(int dim, std::span<const int> indices) {
  KVector x(dim, static_cast<int>(indices.size()));
  x.comps_ = basis_components(dim, indices, "KVector::basis");
  return x;
}

KForm::KForm(int dim, int grade) : n_(dim), k_(grade) {
  check_dims(dim, grade, "KForm");
  comps_.assign(static_cast<std::size_t>(binomial(dim, grade)), 0.0);
}

KForm KForm::from_components(int dim, int grade, std::vector<double> comps) {
  KForm x(dim, grade);
  x.comps_ = checked_components(dim, grade, std::move(comps), "KForm");
  return x;
}

KForm KForm::from_form(const Form& w) {
  return from_components(static_cast<int>(w.c.size()), 1, w.c);
}

KForm KForm::basis(int dim, std::span<const int> indices) {
  KForm x(dim, static_cast<int>(indices.size()));
  x.comps_ = basis_components(dim, indices, "KForm::basis");
  return x;
}

namespace {
void check_same_space(int na, int nb, const char* what) {
  if (na != nb)
    throw DomainError(std::string(what) + ": operands live on charts of dimension " +
                      std::to_string(na) + " and " + std::to_string(nb));
}
}  // namespace

KVector wedge(const KVector& a, const KVector& b) {
  check_same_space(a.dim(), b.dim(), "wedge");
  return KVector::from_components(
      a.dim(), a.grade() + b.grade(),
      wedge_components(a.dim(), a.grade(), a.components(), b.grade(), b.components()));
}

KForm wedge(const KForm& a, const KForm& b) {
  check_same_space(a.dim(), b.dim(), "wedge");
  return KForm::from_components(
      a.dim(), a.grade() + b.grade(),
      wedge_components(a.dim(), a.grade(), a.components(), b.grade(), b.components()));
}

double pairing(const KForm& w, const KVector& x) {
  check_same_space(w.dim(), x.dim(), "pairing");
  if (w.grade() != x.grade())
    throw DomainError("pairing: grade mismatch (" + std::to_string(w.grade()) + " vs " +
                      std::to_string(x.grade()) + ")");
  return dot(w.components(), x.components());
}

double pairing(const Form& w, const Vector& v) {
  check_same_space(static_cast<int>(w.c.size()), static_cast<int>(v.c.size()), "pairing");
  return dot(w.c, v.c);
}

namespace {
template <class K>
K combine(const K& a, const K& b, double sb, const char* what) {
  check_same_space(a.dim(), b.dim(), what);
  if (a.grade() != b.grade())
    throw DomainError(std::string(what) + ": grade mismatch (" + std::to_string(a.grade()) +
                      " vs " + std::to_string(b.grade()) + ")");
  K r = a;
  for (int i = 0; i < static_cast<int>(b.components().size()); ++i) r[i] += sb * b[i];
  return r;
}
template <class K>
K scale(double s, const K& a) {
  K r = a;
  for (int i = 0; i < static_cast<int>(a.components().size()); ++i) r[i] *= s;
  return r;
}
}  // namespace

KVector operator+(const KVector& a, const KVector& b) { return combine(a, b, 1.0, "operator+"); }
KVector operator-(const KVector& a, const KVector& b) { return combine(a, b, -1.0, "operator-"); }
KVector operator*(double s, const KVector& a) { return scale(s, a); }
KForm operator+(const KForm& a, const KForm& b) { return combine(a, b, 1.0, "operator+"); }
KForm operator-(const KForm& a, const KForm& b) { return combine(a, b, -1.0, "operator-"); }
KForm operator*(double s, const KForm& a) { return scale(s, a); }

namespace {
std::vector<double> elementwise(const std::vector<double>& a, const std::vector<double>& b,
                                double sb, const char* what) {
  check_same_space(static_cast<int>(a.size()), static_cast<int>(b.size()), what);
  std::vector<double> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += sb * b[i];
  return r;
}
}  // namespace

Vector operator+(const Vector& a, const Vector& b) { return {elementwise(a.c, b.c, 1.0, "operator+")}; }
Vector operator-(const Vector& a, const Vector& b) { return {elementwise(a.c, b.c, -1.0, "operator-")}; }
Vector operator*(double s, const Vector& a) {
  Vector r = a;
  for (double& x : r.c) x *= s;
  return r;
}
Form operator+(const Form& a, const Form& b) { return {elementwise(a.c, b.c, 1.0, "operator+")}; }
Form operator-(const Form& a, const Form& b) { return {elementwise(a.c, b.c, -1.0, "operator-")}; }
Form operator*(double s, const Form& a) {
  Form r = a;
  for (double& x : r.c) x *= s;
  return r;
}

double max_abs(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

std::string describe(const KForm& w, std::span<const std::string> names) {
  return describe_components(w.components(), w.dim(), w.grade(), names, "d");
}

std::string describe(const KVector& x, std::span<const std::string> names) {
  return describe_components(x.components(), x.dim(), x.grade(), names, "e_");
}

}  // namespace connkit
