#include "folkit/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "folkit/linalg.hpp"

namespace folkit {

Rational make_rational(long num, long den) {
  if (den == 0) throw PreconditionError("DivisionByZero", "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

// Dense univariate polynomials over Q, constant term first. Only what the
// field needs: trimming, division with remainder, gcd and the extended
// Euclid step behind inversion.
using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qp_trim(a);
  return a;
}

// a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (qp_deg(a) >= qp_deg(b)) q.assign(qp_deg(a) - qp_deg(b) + 1, Rational(0));
  while (qp_deg(a) >= qp_deg(b) && !a.empty()) {
    int shift = qp_deg(a) - qp_deg(b);
    Rational coef = a.back() / b.back();
    q[shift] = coef;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
    qp_trim(a);
  }
  return {q, a};
}

QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    auto [q, r] = qp_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

QPoly qp_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  qp_trim(d);
  return d;
}

// Returns (g, u) with g = gcd(a, m) monic and u*a = g (mod m).
std::pair<QPoly, QPoly> qp_ext_gcd_u(QPoly a, QPoly m) {
  QPoly r0 = std::move(m), r1 = std::move(a);
  QPoly u0 = {}, u1 = {Rational(1)};  // coefficients of a in r0, r1
  qp_trim(r0);
  qp_trim(r1);
  while (!r1.empty()) {
    auto [q, r] = qp_divmod(r0, r1);
    QPoly u2 = qp_sub(u0, qp_mul(q, u1));
    r0 = std::move(r1);
    u0 = std::move(u1);
    r1 = std::move(r);
    u1 = std::move(u2);
  }
  if (!r0.empty()) {
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : u0) c /= lead;
  }
  return {r0, u0};
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

NumberField::NumberField(std::vector<Rational> mp, std::string name)
    : degree_(static_cast<int>(mp.size()) - 1), minpoly_(std::move(mp)), gen_name_(std::move(name)) {
  // t^degree reduces to -(m_0 + ... + m_{d-1} t^{d-1}); higher powers follow
  // by multiplying through by t and reducing again.
  const int d = degree_;
  std::vector<Rational> cur(d, Rational(0));
  for (int i = 0; i < d; ++i) cur[i] = -minpoly_[i];
  reductions_.push_back(cur);
  for (int k = 1; k <= d - 2; ++k) {
    std::vector<Rational> next(d, Rational(0));
    Rational overflow = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < d; ++i) next[i] += overflow * reductions_[0][i];
    reductions_.push_back(next);
    cur = std::move(next);
  }
}

FieldPtr NumberField::create(std::vector<Rational> minpoly, std::string generator_name) {
  QPoly mp = minpoly;
  qp_trim(mp);
  if (qp_deg(mp) < 1)
    throw PreconditionError("DegreeZero", "minimal polynomial must have degree >= 1");
  if (mp.back() != 1)
    throw PreconditionError("NotMonic", "minimal polynomial must be monic");
  QPoly g = qp_gcd(mp, qp_derivative(mp));
  if (qp_deg(g) != 0)
    throw PreconditionError("NotSquarefree",
                            "minimal polynomial must be squarefree (gcd with derivative is "
                            "non-constant)");
  return FieldPtr(new NumberField(std::move(mp), std::move(generator_name)));
}

const FieldPtr& NumberField::rationals() {
  static FieldPtr q = create({Rational(0), Rational(1)}, "t");
  return q;
}

bool NumberField::same(const NumberField& other) const {
  if (this == &other) return true;
  return degree_ == other.degree_ && minpoly_ == other.minpoly_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
  if (!same_field(a, b))
    throw PreconditionError("MixedFields", std::string(where) + ": operands live in different fields");
}

FieldElement::FieldElement() : field_(NumberField::rationals()), coords_(1, Rational(0)) {}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree())
    throw PreconditionError("ArityMismatch", "coordinate vector length must equal field degree");
}

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rational& r) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = r;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::from_int(const FieldPtr& field, long v) {
  return from_rational(field, Rational(v));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  std::vector<Rational> c(field->degree(), Rational(0));
  if (field->degree() == 1) {
    // Q[t]/(t): the generator is 0.
    c[0] = -field->minpoly()[0];
  } else {
    c[1] = 1;
  }
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::zero(const FieldPtr& field) { return from_int(field, 0); }
FieldElement FieldElement::one(const FieldPtr& field) { return from_int(field, 1); }

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational())
    throw PreconditionError("NotRational", "element does not lie in the prime field");
  return coords_[0];
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_, "add");
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_, "sub");
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_, "mul");
  const int d = field_->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + d);
  const auto& red = field_->power_reductions();
  for (int k = d; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = red[k - d];
    for (int i = 0; i < d; ++i) c[i] += prod[k] * row[i];
  }
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw PreconditionError("DivisionByZero", "inverse of zero");
  QPoly a(coords_);
  qp_trim(a);
  auto [g, u] = qp_ext_gcd_u(a, field_->minpoly());
  if (qp_deg(g) != 0)
    throw PreconditionError("ZeroDivisor",
                            "element shares a factor with the minimal polynomial");
  u.resize(field_->degree(), Rational(0));
  return FieldElement(field_, std::move(u));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_, "div");
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(field_, o.field_) && coords_ == o.coords_;
}

std::string FieldElement::to_string() const {
  const std::string& t = field_->generator_name();
  std::string out;
  for (int i = static_cast<int>(coords_.size()) - 1; i >= 0; --i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    bool neg = c < 0;
    std::string term;
    if (i == 0) {
      term = rational_str(a);
    } else {
      std::string power = (i == 1) ? t : t + "^" + std::to_string(i);
      term = (a == 1) ? power : rational_str(a) + "*" + power;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

IntegerRelationBasis q_linear_relation_lattice(const std::vector<FieldElement>& elems) {
  if (elems.empty())
    throw PreconditionError("ArityMismatch", "relation lattice of an empty list");
  const FieldPtr& field = elems[0].field();
  for (const auto& e : elems) require_same_field(field, e.field(), "q_linear_relation_lattice");

  const int d = field->degree();
  const int n = static_cast<int>(elems.size());

  // Row per basis coordinate, column per element; clear each row to integers.
  std::vector<std::vector<Integer>> mat(d, std::vector<Integer>(n));
  for (int r = 0; r < d; ++r) {
    Integer den_lcm = 1;
    for (int c = 0; c < n; ++c)
      den_lcm = lcm(den_lcm, Integer(elems[c].coords()[r].get_den()));
    for (int c = 0; c < n; ++c) {
      const Rational& q = elems[c].coords()[r];
      mat[r][c] = Integer(q.get_num()) * (den_lcm / Integer(q.get_den()));
    }
  }

  IntegerRelationBasis out;
  out.relations = integer_kernel(std::move(mat), n);
  return out;
}

}  // namespace folkit
