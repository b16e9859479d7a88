#pragma once

#include <map>
#include <string>
#include <vector>

#include "folkit/ratfunc.hpp"

namespace folkit {

// Differential k-form with rational-function coefficients.  Terms are keyed
// by strictly increasing 0-based variable index tuples; a 0-form has the
// single empty key.  Only nonzero coefficients are stored, so equality is
// structural.  The degree can exceed the variable count, in which case the
// form is identically zero but remembers its degree.
class MeroForm {
 public:
  using IndexSet = std::vector<int>;
  using TermMap = std::map<IndexSet, RatFunc>;

  MeroForm();
  MeroForm(FieldPtr field, int nvars, int degree);

  static MeroForm zero(FieldPtr field, int nvars, int degree);
  // The 0-form with value f.
  static MeroForm function(const RatFunc& f);
  // dx_i as a 1-form.
  static MeroForm differential(FieldPtr field, int nvars, int index);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const TermMap& coefficients() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;

  RatFunc coeff(const IndexSet& idx) const;
  // Replaces the coefficient at a strictly increasing index tuple.
  void set_coeff(const IndexSet& idx, const RatFunc& value);
  // Adds into the coefficient, dropping it when it cancels to zero.
  void add_coeff(const IndexSet& idx, const RatFunc& value);

  MeroForm operator-() const;
  MeroForm operator+(const MeroForm& rhs) const;
  MeroForm operator-(const MeroForm& rhs) const;
  MeroForm operator*(const RatFunc& scale) const;
  MeroForm& operator+=(const MeroForm& rhs);
  bool operator==(const MeroForm& rhs) const;
  bool operator!=(const MeroForm& rhs) const { return !(*this == rhs); }

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  FieldPtr field_;
  int nvars_;
  int degree_;
  TermMap terms_;
};

inline MeroForm operator*(const RatFunc& scale, const MeroForm& w) { return w * scale; }

// Polynomial vector field germ, one component per variable.
class VectorField {
 public:
  VectorField();
  VectorField(FieldPtr field, int nvars);
  explicit VectorField(std::vector<RatFunc> components);

  // The diagonal field sum_i alpha_i x_i d/dx_i.
  static VectorField diagonal(FieldPtr field, const std::vector<FieldElement>& alphas);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return static_cast<int>(comps_.size()); }
  const std::vector<RatFunc>& components() const { return comps_; }
  const RatFunc& component(int i) const;

  bool is_zero() const;

  VectorField operator-() const;
  VectorField operator+(const VectorField& rhs) const;
  VectorField operator-(const VectorField& rhs) const;
  VectorField operator*(const RatFunc& scale) const;
  bool operator==(const VectorField& rhs) const;
  bool operator!=(const VectorField& rhs) const { return !(*this == rhs); }

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  FieldPtr field_;
  std::vector<RatFunc> comps_;
};

MeroForm wedge(const MeroForm& a, const MeroForm& b);
MeroForm ext_derivative(const MeroForm& w);
// Contraction i_X(w), one degree lower.
MeroForm interior_product(const VectorField& x, const MeroForm& w);

// X applied to a function: sum_i X_i df/dx_i.
RatFunc directional_derivative(const VectorField& x, const RatFunc& f);
// Nonconstant f with X(f) = 0.
bool is_first_integral(const VectorField& x, const RatFunc& f);

// i_X(w) = 0.
bool is_tangent(const VectorField& x, const MeroForm& w);
// w ^ dw = 0, the Frobenius condition for a 1-form.
bool is_integrable(const MeroForm& w);

// Least common multiple of the coefficient denominators.
Poly denominator_lcm(const MeroForm& w);
// gcd of the coefficients of a polynomial-coefficient form.
Poly form_content(const MeroForm& w);
// Multiplies through by the denominator lcm, giving polynomial coefficients.
MeroForm clear_denominators(const MeroForm& w);
// Canonical polynomial representative: denominators cleared and the
// coefficient gcd divided out, so no codimension-one component remains in
// the singular set.  The input must be nonzero.
MeroForm remove_codim1(const MeroForm& w);

void require_compatible(const MeroForm& a, const MeroForm& b, const char* where);

}  // namespace folkit
