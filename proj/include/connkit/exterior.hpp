#pragma once

// Pointwise exterior algebra over the tangent/cotangent spaces of a chart.
//
// Grade-k objects are stored densely: one double per strictly increasing
// multi-index, ranked lexicographically (C(n,k) components).  The duality
// pairing of same-grade objects is the dot product in this basis, which for
// decomposable arguments reproduces det[⟨ω^i, v_j⟩].
//
// Grade arithmetic is checked: wedging beyond the chart dimension or pairing
// mismatched grades is a hard error, never a silent zero.

#include <span>
#include <string>
#include <vector>

namespace connkit {

int binomial(int n, int k);

// Lexicographic rank of a strictly increasing 0-based index tuple, and back.
int combo_rank(int n, std::span<const int> combo);
std::vector<int> combo_unrank(int n, int k, int rank);

// Grade-1 conveniences: plain coordinate components.
struct Vector {
  std::vector<double> c;  // v = c[i] ∂_i
};
struct Form {
  std::vector<double> c;  // ω = c[i] dx^i
};

class KVector {
 public:
  KVector(int dim, int grade);  // zero element
  static KVector from_components(int dim, int grade, std::vector<double> comps);
  static KVector from_vector(const Vector& v);
  // Unit basis multivector e_{i1}∧...∧e_{ik}; indices 1-based, strictly
  // increasing, within [1, dim].
  static KVector basis(int dim, std::span<const int> indices);

  int dim() const { return n_; }
  int grade() const { return k_; }
  std::span<const double> components() const { return comps_; }
  double& operator[](int rank) { return comps_[static_cast<std::size_t>(rank)]; }
  double operator[](int rank) const { return comps_[static_cast<std::size_t>(rank)]; }

 private:
  int n_, k_;
  std::vector<double> comps_;
};

class KForm {
 public:
  KForm(int dim, int grade);
  static KForm from_components(int dim, int grade, std::vector<double> comps);
  static KForm from_form(const Form& w);
  static KForm basis(int dim, std::span<const int> indices);

  int dim() const { return n_; }
  int grade() const { return k_; }
  std::span<const double> components() const { return comps_; }
  double& operator[](int rank) { return comps_[static_cast<std::size_t>(rank)]; }
  double operator[](int rank) const { return comps_[static_cast<std::size_t>(rank)]; }

 private:
  int n_, k_;
  std::vector<double> comps_;
};

KVector wedge(const KVector& a, const KVector& b);
KForm wedge(const KForm& a, const KForm& b);

// Duality pairing ⟨ω, X⟩ of equal grades.
double pairing(const KForm& w, const KVector& x);
double pairing(const Form& w, const Vector& v);

KVector operator+(const KVector& a, const KVector& b);
KVector operator-(const KVector& a, const KVector& b);
KVector operator*(double s, const KVector& a);
KForm operator+(const KForm& a, const KForm& b);
KForm operator-(const KForm& a, const KForm& b);
KForm operator*(double s, const KForm& a);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);
Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator*(double s, const Form& a);

double max_abs(std::span<const double> xs);
inline double max_abs(const Vector& v) { return max_abs(std::span<const double>(v.c)); }
inline double max_abs(const Form& w) { return max_abs(std::span<const double>(w.c)); }
inline double max_abs(const KVector& x) { return max_abs(x.components()); }
inline double max_abs(const KForm& w) { return max_abs(w.components()); }

// "−0.25 dx1∧dx2 + ..." style rendering; `names` are the coordinate names.
std::string describe(const KForm& w, std::span<const std::string> names);
std::string describe(const KVector& x, std::span<const std::string> names);

}  // namespace connkit
