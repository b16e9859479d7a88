#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "folkit/errors.hpp"

namespace folkit {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(p, q) does not canonicalize; this always does.
Rational make_rational(long num, long den = 1);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// The coefficient field Q[t]/(m(t)) for a monic squarefree m over Q.
//
// Squarefreeness (gcd(m, m') constant) is all that is checked. It keeps the
// quotient a product of fields, so every nonzero element is either invertible
// or an explicit zero divisor that surfaces as an error during inversion.
// Irreducibility of m is never assumed.
class NumberField {
public:
  // minpoly is dense over Q, constant term first, and must be monic of
  // degree >= 1. Throws PreconditionError on a non-monic or non-squarefree
  // polynomial.
  static FieldPtr create(std::vector<Rational> minpoly, std::string generator_name = "t");

  // Q itself, realized as Q[t]/(t). Shared singleton.
  static const FieldPtr& rationals();

  int degree() const { return degree_; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return gen_name_; }

  // Value identity: same degree and same minimal polynomial. The generator
  // name is presentation only and does not participate.
  bool same(const NumberField& other) const;

  // Coordinates of t^(degree + k), k = 0 .. degree-2, in the power basis.
  // Products of two reduced elements never need higher powers.
  const std::vector<std::vector<Rational>>& power_reductions() const { return reductions_; }

private:
  NumberField(std::vector<Rational> mp, std::string name);

  int degree_;
  std::vector<Rational> minpoly_;
  std::string gen_name_;
  std::vector<std::vector<Rational>> reductions_;
};

// Pointer shortcut first, then value comparison, so independently created
// copies of the same field interoperate.
bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

// An element of a NumberField in power-basis coordinates.
class FieldElement {
public:
  FieldElement();  // zero of Q
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement from_rational(const FieldPtr& field, const Rational& r);
  static FieldElement from_int(const FieldPtr& field, long v);
  static FieldElement generator(const FieldPtr& field);
  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;         // lies in the prime field Q
  Rational rational_value() const;  // pre: is_rational()

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;

  // Extended Euclid against the minimal polynomial. DivisionByZero on zero;
  // ZeroDivisor when gcd(coords, m) is not constant (reducible m showing up).
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Polynomial in the generator, parseable by the script grammar.
  std::string to_string() const;

private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

// Basis of the lattice { l in Z^n : sum_i l_i * elems_i = 0 }.
struct IntegerRelationBasis {
  std::vector<std::vector<Integer>> relations;
  int rank() const { return static_cast<int>(relations.size()); }
  bool empty() const { return relations.empty(); }
};

// Exact integer-relation lattice of field elements: rational kernel of the
// coordinate matrix, cleared to integers, saturated to a primitive basis by
// unimodular column reduction. Inputs must be nonempty and share one field.
IntegerRelationBasis q_linear_relation_lattice(const std::vector<FieldElement>& elems);

}  // namespace folkit
