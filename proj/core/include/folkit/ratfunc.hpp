#pragma once

#include <string>
#include <vector>

#include "folkit/poly.hpp"

namespace folkit {

// Rational function kept in canonical form: numerator and denominator are
// coprime and the denominator has graded-lex leading coefficient one, so a
// polynomial always shows denominator exactly 1 and equality is structural.
class RatFunc {
 public:
  RatFunc();
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc zero(FieldPtr field, int nvars);
  static RatFunc one(FieldPtr field, int nvars);
  static RatFunc constant(FieldPtr field, int nvars, const FieldElement& c);
  static RatFunc from_rational(FieldPtr field, int nvars, const Rational& q);
  static RatFunc variable(FieldPtr field, int nvars, int index);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  int nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  FieldElement constant_value() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& rhs) const;
  RatFunc operator-(const RatFunc& rhs) const;
  RatFunc operator*(const RatFunc& rhs) const;
  RatFunc operator/(const RatFunc& rhs) const;
  RatFunc& operator+=(const RatFunc& rhs);
  bool operator==(const RatFunc& rhs) const;
  bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

  RatFunc inverse() const;
  // Integer powers, negative allowed for a nonzero base.
  RatFunc pow(int k) const;
  RatFunc derivative(int var) const;
  RatFunc substitute(const std::vector<RatFunc>& images) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  void reduce();

  Poly num_;
  Poly den_;
};

inline RatFunc operator*(const FieldElement& c, const RatFunc& f) {
  return RatFunc(Poly::constant(f.field(), f.nvars(), c)) * f;
}

// Substitution of rational-function images into a polynomial.
RatFunc substitute_rational(const Poly& p, const std::vector<RatFunc>& images);

}  // namespace folkit
