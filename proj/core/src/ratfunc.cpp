#include "folkit/ratfunc.hpp"

#include "folkit/errors.hpp"

namespace folkit {

RatFunc::RatFunc() : num_(), den_(Poly::constant(NumberField::rationals(), 0, FieldElement::one(NumberField::rationals()))) {}

RatFunc::RatFunc(Poly num)
    : num_(std::move(num)),
      den_(Poly::constant(num_.field(), num_.nvars(), FieldElement::one(num_.field()))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_compatible(num_, den_, "RatFunc");
  reduce();
}

void RatFunc::reduce() {
  if (den_.is_zero())
    throw Error(ErrorClass::Precondition, "DivisionByZero", "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), num_.nvars(), FieldElement::one(num_.field()));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *Poly::try_divide(num_, g);
    den_ = *Poly::try_divide(den_, g);
  }
  FieldElement lc = den_.leading_coeff();
  if (!lc.is_one()) {
    FieldElement inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::zero(FieldPtr field, int nvars) { return RatFunc(Poly::zero(field, nvars)); }

RatFunc RatFunc::one(FieldPtr field, int nvars) {
  return RatFunc(Poly::constant(field, nvars, FieldElement::one(field)));
}

RatFunc RatFunc::constant(FieldPtr field, int nvars, const FieldElement& c) {
  return RatFunc(Poly::constant(std::move(field), nvars, c));
}

RatFunc RatFunc::from_rational(FieldPtr field, int nvars, const Rational& q) {
  return RatFunc(Poly::from_rational(std::move(field), nvars, q));
}

RatFunc RatFunc::variable(FieldPtr field, int nvars, int index) {
  return RatFunc(Poly::variable(std::move(field), nvars, index));
}

FieldElement RatFunc::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc& rhs) const {
  require_compatible(num_, rhs.num_, "RatFunc::operator+");
  return RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator-(const RatFunc& rhs) const {
  require_compatible(num_, rhs.num_, "RatFunc::operator-");
  return RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator*(const RatFunc& rhs) const {
  require_compatible(num_, rhs.num_, "RatFunc::operator*");
  // Cross-reduce before multiplying to keep intermediate gcds small.
  Poly g1 = poly_gcd(num_, rhs.den_);
  Poly g2 = poly_gcd(rhs.num_, den_);
  Poly n1 = g1.is_one() || num_.is_zero() ? num_ : *Poly::try_divide(num_, g1);
  Poly d2 = g1.is_one() || num_.is_zero() ? rhs.den_ : *Poly::try_divide(rhs.den_, g1);
  Poly n2 = g2.is_one() || rhs.num_.is_zero() ? rhs.num_ : *Poly::try_divide(rhs.num_, g2);
  Poly d1 = g2.is_one() || rhs.num_.is_zero() ? den_ : *Poly::try_divide(den_, g2);
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& rhs) const {
  require_compatible(num_, rhs.num_, "RatFunc::operator/");
  if (rhs.is_zero())
    throw Error(ErrorClass::Precondition, "DivisionByZero", "division by the zero rational function");
  return *this * rhs.inverse();
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  *this = *this + rhs;
  return *this;
}

bool RatFunc::operator==(const RatFunc& rhs) const {
  return num_ == rhs.num_ && den_ == rhs.den_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero())
    throw Error(ErrorClass::Precondition, "DivisionByZero", "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc acc = RatFunc::one(field(), nvars());
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

RatFunc RatFunc::derivative(int var) const {
  if (is_polynomial()) return RatFunc(num_.derivative(var));
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
  RatFunc n = substitute_rational(num_, images);
  RatFunc d = substitute_rational(den_, images);
  if (d.is_zero())
    throw Error(ErrorClass::Precondition, "DivisionByZero",
                "substitution sends the denominator to zero");
  return n / d;
}

std::string RatFunc::to_string(const std::vector<std::string>& var_names) const {
  if (is_polynomial()) return num_.to_string(var_names);
  return "(" + num_.to_string(var_names) + ")/(" + den_.to_string(var_names) + ")";
}

RatFunc substitute_rational(const Poly& p, const std::vector<RatFunc>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw PreconditionError("ArityMismatch", "substitution needs one image per variable");
  FieldPtr tf = p.field();
  int tn = p.nvars();
  if (!images.empty()) {
    tf = images[0].field();
    tn = images[0].nvars();
    for (const RatFunc& im : images) require_compatible(images[0].num(), im.num(), "substitute_rational");
    require_same_field(p.field(), tf, "substitute_rational");
  }
  RatFunc out = RatFunc::zero(tf, tn);
  for (const auto& [m, c] : p.terms()) {
    RatFunc term = RatFunc::constant(tf, tn, c);
    for (int i = 0; i < p.nvars(); ++i)
      if (m[i] > 0) term = term * images[i].pow(m[i]);
    out += term;
  }
  return out;
}

}  // namespace folkit
