#include "folkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "folkit/errors.hpp"

namespace folkit {

namespace {

std::string default_var_name(int i) {
  return "x" + std::to_string(i + 1);
}

// Highest variable index occurring with positive exponent, -1 for constants.
int max_active_var(const Poly& p) {
  int v = -1;
  for (const auto& [m, c] : p.terms())
    for (int i = static_cast<int>(m.size()) - 1; i > v; --i)
      if (m[i] > 0) v = i;
  return v;
}

// Coefficients of p viewed in (K[other vars])[x_v], index = x_v exponent.
// Each entry keeps the full arity with the x_v exponent zeroed out.
std::vector<Poly> coeffs_in_var(const Poly& p, int v) {
  std::vector<Poly> out(static_cast<size_t>(p.degree_in(v)) + 1,
                        Poly::zero(p.field(), p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int e = rest[v];
    rest[v] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

Poly shift_in_var(const Poly& p, int v, int e) {
  Poly out(p.field(), p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial full = m;
    full[v] += e;
    out.add_term(full, c);
  }
  return out;
}

// gcd of the x_v coefficients; dividing by it makes p primitive in x_v.
Poly content_in_var(const Poly& p, int v) {
  Poly g = Poly::zero(p.field(), p.nvars());
  for (const Poly& c : coeffs_in_var(p, v)) g = poly_gcd(g, c);
  return g;
}

Poly exact_divide(const Poly& p, const Poly& d, const char* where) {
  auto q = Poly::try_divide(p, d);
  if (!q) throw PreconditionError("InexactDivision", where);
  return *q;
}

// Pseudo-remainder of f by g in the variable x_v: repeatedly cancels the
// leading x_v term after scaling f by the leading coefficient of g.
Poly pseudo_rem(Poly f, const Poly& g, int v) {
  int dg = g.degree_in(v);
  auto gc = coeffs_in_var(g, v);
  const Poly& lg = gc.back();
  while (!f.is_zero() && f.degree_in(v) >= dg) {
    auto fc = coeffs_in_var(f, v);
    int df = f.degree_in(v);
    f = lg * f - shift_in_var(fc.back() * g, v, df - dg);
  }
  return f;
}

}  // namespace

void require_compatible(const Poly& a, const Poly& b, const char* where) {
  require_same_field(a.field(), b.field(), where);
  if (a.nvars() != b.nvars())
    throw PreconditionError("ArityMismatch", std::string(where) + ": operands have " +
                                                 std::to_string(a.nvars()) + " and " +
                                                 std::to_string(b.nvars()) + " variables");
}

Poly::Poly() : field_(NumberField::rationals()), nvars_(0) {}

Poly::Poly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars_ < 0) throw PreconditionError("ArityMismatch", "negative variable count");
}

Poly Poly::zero(FieldPtr field, int nvars) { return Poly(std::move(field), nvars); }

Poly Poly::constant(FieldPtr field, int nvars, const FieldElement& c) {
  Poly p(std::move(field), nvars);
  require_same_field(p.field_, c.field(), "Poly::constant");
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::from_rational(FieldPtr field, int nvars, const Rational& q) {
  FieldElement c = FieldElement::from_rational(field, q);
  return constant(std::move(field), nvars, c);
}

Poly Poly::variable(FieldPtr field, int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw PreconditionError("IndexOutOfRange", "variable index " + std::to_string(index + 1) +
                                                   " with " + std::to_string(nvars) + " variables");
  Poly p(field, nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, FieldElement::one(field));
  return p;
}

Poly Poly::monomial_term(FieldPtr field, int nvars, const Monomial& m, const FieldElement& c) {
  if (static_cast<int>(m.size()) != nvars)
    throw PreconditionError("ArityMismatch", "monomial arity does not match variable count");
  for (int e : m)
    if (e < 0) throw PreconditionError("IndexOutOfRange", "negative exponent in monomial");
  Poly p(std::move(field), nvars);
  require_same_field(p.field_, c.field(), "Poly::monomial_term");
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

FieldElement Poly::constant_value() const {
  if (!is_constant()) throw PreconditionError("NotConstant", "polynomial has positive degree");
  if (terms_.empty()) return FieldElement::zero(field_);
  return terms_.begin()->second;
}

bool Poly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return terms_.empty() ? -1 : std::max(d, 0);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  return total_degree(terms_.rbegin()->first) == d;
}

FieldElement Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("ZeroPolynomial", "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const FieldElement& Poly::leading_coeff() const {
  if (terms_.empty()) throw PreconditionError("ZeroPolynomial", "zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(field_, nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::operator+(const Poly& rhs) const {
  require_compatible(*this, rhs, "Poly::operator+");
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  require_compatible(*this, rhs, "Poly::operator-");
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  *this = *this + rhs;
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  *this = *this - rhs;
  return *this;
}

Poly Poly::operator*(const Poly& rhs) const {
  require_compatible(*this, rhs, "Poly::operator*");
  Poly out(field_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::operator*(const FieldElement& c) const {
  require_same_field(field_, c.field(), "Poly::operator*");
  Poly out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, a] : terms_) out.add_term(m, a * c);
  return out;
}

bool Poly::operator==(const Poly& rhs) const {
  return same_field(field_, rhs.field()) && nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw PreconditionError("NegativeExponent", "Poly::pow wants a nonnegative exponent");
  Poly acc = Poly::constant(field_, nvars_, FieldElement::one(field_));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= nvars_)
    throw PreconditionError("IndexOutOfRange", "derivative variable index " + std::to_string(var + 1));
  Poly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    out.add_term(dm, c * FieldElement::from_rational(field_, Rational(m[var])));
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw PreconditionError("ArityMismatch", "substitution needs one image per variable");
  FieldPtr tf = field_;
  int tn = nvars_;
  if (!images.empty()) {
    tf = images[0].field();
    tn = images[0].nvars();
    for (const Poly& im : images) require_compatible(images[0], im, "Poly::substitute");
    require_same_field(field_, tf, "Poly::substitute");
  }
  Poly out(tf, tn);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(tf, tn, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) term = term * images[i].pow(m[i]);
    out += term;
  }
  return out;
}

Poly Poly::initial_part() const {
  if (terms_.empty()) throw PreconditionError("ZeroPolynomial", "zero polynomial has no initial part");
  int d = total_degree(terms_.begin()->first);
  Poly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) != d) break;
    out.terms_.emplace(m, c);
  }
  return out;
}

Poly Poly::truncate(int order) const {
  Poly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) >= order) break;
    out.terms_.emplace(m, c);
  }
  return out;
}

std::optional<Poly> Poly::try_divide(const Poly& p, const Poly& d) {
  require_compatible(p, d, "Poly::try_divide");
  if (d.is_zero()) throw Error(ErrorClass::Precondition, "DivisionByZero", "division by the zero polynomial");
  Poly rem = p;
  Poly quot(p.field(), p.nvars());
  const Monomial& dm = d.leading_monomial();
  const FieldElement& dc = d.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!mono_divides(dm, rm)) return std::nullopt;
    Monomial qm = mono_div(rm, dm);
    FieldElement qc = rem.leading_coeff() / dc;
    Poly t = Poly::monomial_term(p.field(), p.nvars(), qm, qc);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

Poly Poly::normalized() const {
  if (terms_.empty()) return *this;
  return *this * leading_coeff().inverse();
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex so the leading term prints first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < var_names.size() ? var_names[i] : default_var_name(static_cast<int>(i));
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      negative = q < 0;
      Rational a = abs(q);
      if (a != 1 || mono.empty()) coeff = a.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (!coeff.empty()) {
      os << coeff;
      if (!mono.empty()) os << "*";
    }
    os << mono;
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  require_compatible(a, b, "poly_gcd");
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  int v = std::max(max_active_var(a), max_active_var(b));
  if (v < 0) return Poly::constant(a.field(), a.nvars(), FieldElement::one(a.field()));

  Poly cont_a = content_in_var(a, v);
  Poly cont_b = content_in_var(b, v);
  Poly pp_a = exact_divide(a, cont_a, "poly_gcd");
  Poly pp_b = exact_divide(b, cont_b, "poly_gcd");
  Poly c = poly_gcd(cont_a, cont_b);

  Poly r0 = pp_a, r1 = pp_b;
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  while (!r1.is_zero()) {
    Poly r = pseudo_rem(r0, r1, v);
    r0 = r1;
    r1 = r.is_zero() ? r : exact_divide(r, content_in_var(r, v), "poly_gcd");
  }
  return (c * r0).normalized();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  require_compatible(a, b, "poly_lcm");
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field(), a.nvars());
  Poly g = poly_gcd(a, b);
  return exact_divide(a * b, g, "poly_lcm").normalized();
}

Poly poly_gcd_list(const std::vector<Poly>& polys, const FieldPtr& field, int nvars) {
  Poly g = Poly::zero(field, nvars);
  for (const Poly& p : polys) {
    g = poly_gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

}  // namespace folkit
