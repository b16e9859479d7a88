#include <doctest.h>

#include <random>
#include <vector>

#include "folkit/errors.hpp"
#include "folkit/poly.hpp"
#include "folkit/ratfunc.hpp"

using namespace folkit;

namespace {

Poly var(int i, int n = 3) { return Poly::variable(NumberField::rationals(), n, i); }

Poly qconst(const Rational& q, int n = 3) {
  return Poly::from_rational(NumberField::rationals(), n, q);
}

// Random product of monic linear atoms x_i + c.  gcd of two such products
// has an independent oracle: take each atom to the minimum multiplicity.
struct LinearAtom {
  int var;
  Rational shift;
  bool operator<(const LinearAtom& o) const {
    return var != o.var ? var < o.var : shift < o.shift;
  }
  bool operator==(const LinearAtom& o) const { return var == o.var && shift == o.shift; }
};

Poly atom_poly(const LinearAtom& a, int n) {
  return var(a.var, n) + qconst(a.shift, n);
}

Poly product_of(const std::vector<std::pair<LinearAtom, int>>& factors, int n) {
  Poly p = qconst(1, n);
  for (const auto& [a, e] : factors) p = p * atom_poly(a, n).pow(e);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic and degrees") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  Poly p = (x1 + x2) * (x1 - x2);
  CHECK(p == x1 * x1 - x2 * x2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + qconst(1)).is_homogeneous());

  Poly q = x1 * x2 * x3 + x3.pow(3);
  CHECK(q.degree_in(2) == 3);
  CHECK(q.degree_in(0) == 1);
  CHECK(q.derivative(2) == x1 * x2 + qconst(3) * x3 * x3);

  CHECK((p - p).is_zero());
  CHECK(p * qconst(0) == Poly::zero(p.field(), 3));
}

TEST_CASE("leading data follows the graded-lex order") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  // Same total degree: x2*x3 beats x3^2 because x2 carries a positive
  // exponent on the earlier variable slot.
  Poly p = x3 * x3 + x2 * x3;
  CHECK(p.leading_monomial() == Monomial{0, 1, 1});
  Poly q = qconst(5) * x1.pow(3) + x2 * x3;
  CHECK(q.leading_monomial() == Monomial{3, 0, 0});
  CHECK(q.leading_coeff().rational_value() == 5);
  CHECK(q.normalized().leading_coeff().is_one());
}

TEST_CASE("substitution maps variables to polynomial images") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  Poly p = x1 * x1 * x3;
  std::vector<Poly> images = {x2 * x3, x2, x3};
  CHECK(p.substitute(images) == x2 * x2 * x3.pow(3));

  // Images may land in a different arity.
  Poly y1 = var(0, 2), y2 = var(1, 2);
  std::vector<Poly> into_two = {y1, y2, y1 + y2};
  CHECK((x1 * x3).substitute(into_two) == y1 * (y1 + y2));

  CHECK_THROWS_AS(p.substitute({x1, x2}), PreconditionError);
}

TEST_CASE("initial part and truncation slice by total degree") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  Poly p = x2 * x3 + x3.pow(3) + x1.pow(4);
  CHECK(p.initial_part() == x2 * x3);
  CHECK(p.initial_part().is_homogeneous());

  Poly series = qconst(1) + x2 + x2 * x2;
  CHECK(series.truncate(2) == qconst(1) + x2);
  CHECK(series.truncate(1) == qconst(1));
  CHECK(series.truncate(0).is_zero());
  CHECK_THROWS_AS(Poly::zero(p.field(), 3).initial_part(), PreconditionError);
}

TEST_CASE("exact division succeeds exactly when the divisor divides") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  Poly p = (x1 + x2) * (x1 + x2) * x3;
  auto q = Poly::try_divide(p, (x1 + x2) * x3);
  REQUIRE(q.has_value());
  CHECK(*q == x1 + x2);
  CHECK_FALSE(Poly::try_divide(p, x1 + x3).has_value());
  CHECK_FALSE(Poly::try_divide(x1 + qconst(1), x2).has_value());
  CHECK_THROWS_AS(Poly::try_divide(p, Poly::zero(p.field(), 3)), Error);
}

TEST_CASE("gcd of structured products") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  Poly a = (x1 + x2) * (x1 + x2) * x3;
  Poly b = (x1 + x2) * x3 * x3;
  CHECK(poly_gcd(a, b) == (x1 + x2) * x3);
  CHECK(poly_gcd(a, Poly::zero(a.field(), 3)) == a.normalized());
  CHECK(poly_gcd(x1 + qconst(1), x2 + qconst(1)).is_one());
  CHECK(poly_lcm(x1 * x2, x2 * x3) == x1 * x2 * x3);

  // gcd result is monic regardless of input scaling.
  Poly c = qconst(Rational(3, 2)) * (x1 + x2);
  Poly d = qconst(-4) * (x1 + x2) * x2;
  CHECK(poly_gcd(c, d) == x1 + x2);
}

TEST_CASE("gcd matches the linear-atom oracle on random products") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> pick_var(0, 2);
  std::uniform_int_distribution<int> pick_shift(-2, 2);
  std::uniform_int_distribution<int> pick_mult(0, 3);
  std::uniform_int_distribution<int> pick_natoms(1, 3);

  for (int trial = 0; trial < 30; ++trial) {
    // A shared pool of distinct atoms keeps the factorizations comparable.
    std::vector<LinearAtom> pool;
    int natoms = pick_natoms(rng);
    while (static_cast<int>(pool.size()) < natoms) {
      LinearAtom a{pick_var(rng), Rational(pick_shift(rng))};
      bool dup = false;
      for (const auto& p : pool) dup = dup || p == a;
      if (!dup) pool.push_back(a);
    }
    std::vector<std::pair<LinearAtom, int>> fa, fb, fg;
    for (const auto& a : pool) {
      int ea = pick_mult(rng), eb = pick_mult(rng);
      if (ea > 0) fa.emplace_back(a, ea);
      if (eb > 0) fb.emplace_back(a, eb);
      if (std::min(ea, eb) > 0) fg.emplace_back(a, std::min(ea, eb));
    }
    Poly a = product_of(fa, 3);
    Poly b = product_of(fb, 3);
    Poly expected = product_of(fg, 3).normalized();
    CHECK(poly_gcd(a, b) == expected);
  }
}

TEST_CASE("rational functions reduce to lowest terms") {
  Poly x1 = var(0), x2 = var(1);
  RatFunc f(x1 * x1 - x2 * x2, x1 + x2);
  CHECK(f.is_polynomial());
  CHECK(f.num() == x1 - x2);

  // Denominator is normalized to leading coefficient one.
  RatFunc g(qconst(1), qconst(2) * x1);
  CHECK(g.den() == x1);
  CHECK(g.num() == qconst(Rational(1, 2)));

  RatFunc h = RatFunc(x1) / RatFunc(x2);
  CHECK(h * h.inverse() == RatFunc::one(h.field(), 3));
  CHECK((h - h).is_zero());
  CHECK_THROWS_AS(RatFunc(x1, Poly::zero(x1.field(), 3)), Error);
  CHECK_THROWS_AS(h / RatFunc::zero(h.field(), 3), Error);
}

TEST_CASE("rational arithmetic keeps canonical form") {
  Poly x1 = var(0), x2 = var(1);
  RatFunc f(qconst(1), x1);
  RatFunc g(qconst(1), x2);
  RatFunc sum = f + g;
  CHECK(sum.num() == x1 + x2);
  CHECK(sum.den() == x1 * x2);

  // (x1/x2) * (x2/x1) collapses to 1 through cross-reduction.
  CHECK(RatFunc(x1, x2) * RatFunc(x2, x1) == RatFunc::one(f.field(), 3));
  CHECK(f.pow(-2) == RatFunc(x1 * x1));
  CHECK(RatFunc(x1 - x2).pow(0) == RatFunc::one(f.field(), 3));
}

TEST_CASE("quotient rule derivative") {
  Poly x1 = var(0), x2 = var(1);
  RatFunc f(x1, x2);
  CHECK(f.derivative(0) == RatFunc(qconst(1), x2));
  CHECK(f.derivative(1) == RatFunc(-x1, x2 * x2));
  // d/dx1 of 1/(x1 + x2) = -1/(x1 + x2)^2
  RatFunc g(qconst(1), x1 + x2);
  CHECK(g.derivative(0) == RatFunc(qconst(-1), (x1 + x2) * (x1 + x2)));
}

TEST_CASE("rational substitution") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  RatFunc f(x1, x2);
  std::vector<RatFunc> images = {RatFunc(x2 * x3), RatFunc(x2), RatFunc(x3)};
  CHECK(f.substitute(images) == RatFunc(x3));

  // Substituting a root of the denominator is rejected.
  std::vector<RatFunc> bad = {RatFunc(x1), RatFunc::zero(f.field(), 3), RatFunc(x3)};
  CHECK_THROWS_AS(f.substitute(bad), Error);

  RatFunc g = substitute_rational(x1 * x1, {RatFunc(x1, x2), RatFunc(x2), RatFunc(x3)});
  CHECK(g == RatFunc(x1 * x1, x2 * x2));
}

TEST_CASE("polynomials print in descending graded-lex order") {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  Poly p = x1.pow(2) * x3 - x2.pow(3);
  CHECK(p.to_string() == "x1^2*x3 - x2^3");
  CHECK((x1 - x1).to_string() == "0");
  CHECK((qconst(Rational(-1, 2)) * x1 + qconst(1)).to_string() == "-1/2*x1 + 1");
  CHECK(RatFunc(x1 + x2, x3).to_string() == "(x1 + x2)/(x3)");

  auto field = NumberField::create({Rational(-2), Rational(0), Rational(1)});
  Poly t = Poly::constant(field, 2, FieldElement::generator(field));
  Poly y1 = Poly::variable(field, 2, 0);
  CHECK((t * y1 + t).to_string() == "(t)*x1 + (t)");
}

TEST_CASE("mixed fields and arities are rejected") {
  Poly x1 = var(0);
  auto field = NumberField::create({Rational(-2), Rational(0), Rational(1)});
  Poly y1 = Poly::variable(field, 3, 0);
  CHECK_THROWS_AS(x1 + y1, PreconditionError);
  CHECK_THROWS_AS(var(0, 2) + var(0, 3), PreconditionError);
  CHECK_THROWS_AS(Poly::variable(NumberField::rationals(), 3, 3), PreconditionError);
  CHECK_THROWS_AS(x1.derivative(5), PreconditionError);
}
