#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folkit/monomial.hpp"
#include "folkit/number_field.hpp"

namespace folkit {

// Sparse multivariate polynomial over a fixed scalar field.  Terms are kept
// in a graded-lex ordered map with nonzero coefficients only, so equality is
// structural and the leading term is the last map entry.
class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElement, GradedLexLess>;

  // Zero polynomial in zero variables over the rationals.  Containers need a
  // default constructor; real instances come from the named factories.
  Poly();
  Poly(FieldPtr field, int nvars);

  static Poly zero(FieldPtr field, int nvars);
  static Poly constant(FieldPtr field, int nvars, const FieldElement& c);
  static Poly from_rational(FieldPtr field, int nvars, const Rational& q);
  static Poly variable(FieldPtr field, int nvars, int index);
  static Poly monomial_term(FieldPtr field, int nvars, const Monomial& m, const FieldElement& c);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial, zero included.
  FieldElement constant_value() const;
  bool is_one() const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;

  FieldElement coeff(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const FieldElement& leading_coeff() const;

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const FieldElement& c) const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  Poly pow(int k) const;
  Poly derivative(int var) const;

  // Substitute images[i] for variable i.  Every image must share one field
  // and one variable count, which become those of the result.
  Poly substitute(const std::vector<Poly>& images) const;

  // Sum of the terms of minimal total degree.
  Poly initial_part() const;
  // Terms of total degree strictly below `order`.
  Poly truncate(int order) const;

  FieldElement evaluate_origin() const { return coeff(Monomial(nvars_, 0)); }

  // Exact quotient p/d when d divides p, std::nullopt otherwise.
  static std::optional<Poly> try_divide(const Poly& p, const Poly& d);

  // Scale so the graded-lex leading coefficient is one.
  Poly normalized() const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

  // Inserts a term, folding into an existing coefficient and dropping zeros.
  void add_term(const Monomial& m, const FieldElement& c);

 private:
  FieldPtr field_;
  int nvars_;
  TermMap terms_;
};

inline Poly operator*(const FieldElement& c, const Poly& p) { return p * c; }

// Monic (graded-lex leading coefficient one) greatest common divisor, via a
// primitive remainder sequence on the highest occurring variable.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// gcd of a whole list; the zero polynomial for an empty or all-zero list
// over the given field/arity.
Poly poly_gcd_list(const std::vector<Poly>& polys, const FieldPtr& field, int nvars);

void require_compatible(const Poly& a, const Poly& b, const char* where);

}  // namespace folkit
