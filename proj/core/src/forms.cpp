#include "folkit/forms.hpp"

#include <algorithm>
#include <sstream>

#include "folkit/errors.hpp"

namespace folkit {

namespace {

void require_index_set(const MeroForm::IndexSet& idx, int nvars, int degree) {
  if (static_cast<int>(idx.size()) != degree)
    throw PreconditionError("DegreeMismatch", "index tuple size does not match the form degree");
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= nvars)
      throw PreconditionError("IndexOutOfRange", "form index " + std::to_string(idx[i] + 1));
    if (i > 0 && idx[i] <= idx[i - 1])
      throw PreconditionError("IndexOutOfRange", "form indices must be strictly increasing");
  }
}

// Merges two strictly increasing disjoint tuples, tracking the permutation
// sign needed to sort the concatenation.  Returns sign 0 on a collision.
int merge_indices(const MeroForm::IndexSet& a, const MeroForm::IndexSet& b,
                  MeroForm::IndexSet& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a.
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return inversions % 2 == 0 ? 1 : -1;
}

std::string wedge_name(const MeroForm::IndexSet& idx, const std::vector<std::string>& var_names) {
  std::string s;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) s += "^^";
    s += "d";
    s += idx[i] < static_cast<int>(var_names.size()) ? var_names[idx[i]]
                                                     : "x" + std::to_string(idx[i] + 1);
  }
  return s;
}

}  // namespace

void require_compatible(const MeroForm& a, const MeroForm& b, const char* where) {
  require_same_field(a.field(), b.field(), where);
  if (a.nvars() != b.nvars())
    throw PreconditionError("ArityMismatch", std::string(where) + ": forms live in different arities");
}

MeroForm::MeroForm() : field_(NumberField::rationals()), nvars_(0), degree_(0) {}

MeroForm::MeroForm(FieldPtr field, int nvars, int degree)
    : field_(std::move(field)), nvars_(nvars), degree_(degree) {
  if (nvars_ < 0) throw PreconditionError("ArityMismatch", "negative variable count");
  if (degree_ < 0) throw PreconditionError("DegreeMismatch", "negative form degree");
}

MeroForm MeroForm::zero(FieldPtr field, int nvars, int degree) {
  return MeroForm(std::move(field), nvars, degree);
}

MeroForm MeroForm::function(const RatFunc& f) {
  MeroForm w(f.field(), f.nvars(), 0);
  w.add_coeff({}, f);
  return w;
}

MeroForm MeroForm::differential(FieldPtr field, int nvars, int index) {
  MeroForm w(field, nvars, 1);
  w.add_coeff({index}, RatFunc::one(std::move(field), nvars));
  return w;
}

bool MeroForm::is_polynomial() const {
  for (const auto& [idx, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

RatFunc MeroForm::coeff(const IndexSet& idx) const {
  require_index_set(idx, nvars_, degree_);
  auto it = terms_.find(idx);
  return it == terms_.end() ? RatFunc::zero(field_, nvars_) : it->second;
}

void MeroForm::set_coeff(const IndexSet& idx, const RatFunc& value) {
  require_index_set(idx, nvars_, degree_);
  require_same_field(field_, value.field(), "MeroForm::set_coeff");
  if (value.nvars() != nvars_)
    throw PreconditionError("ArityMismatch", "coefficient arity does not match the form");
  if (value.is_zero())
    terms_.erase(idx);
  else
    terms_[idx] = value;
}

void MeroForm::add_coeff(const IndexSet& idx, const RatFunc& value) {
  if (value.is_zero()) {
    require_index_set(idx, nvars_, degree_);
    return;
  }
  set_coeff(idx, coeff(idx) + value);
}

MeroForm MeroForm::operator-() const {
  MeroForm out(field_, nvars_, degree_);
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

MeroForm MeroForm::operator+(const MeroForm& rhs) const {
  require_compatible(*this, rhs, "MeroForm::operator+");
  if (degree_ != rhs.degree_)
    throw PreconditionError("DegreeMismatch", "cannot add forms of different degrees");
  MeroForm out = *this;
  for (const auto& [idx, c] : rhs.terms_) out.add_coeff(idx, c);
  return out;
}

MeroForm MeroForm::operator-(const MeroForm& rhs) const { return *this + (-rhs); }

MeroForm& MeroForm::operator+=(const MeroForm& rhs) {
  *this = *this + rhs;
  return *this;
}

MeroForm MeroForm::operator*(const RatFunc& scale) const {
  require_same_field(field_, scale.field(), "MeroForm::operator*");
  if (scale.nvars() != nvars_)
    throw PreconditionError("ArityMismatch", "scale arity does not match the form");
  MeroForm out(field_, nvars_, degree_);
  if (scale.is_zero()) return out;
  for (const auto& [idx, c] : terms_) out.add_coeff(idx, c * scale);
  return out;
}

bool MeroForm::operator==(const MeroForm& rhs) const {
  return same_field(field_, rhs.field_) && nvars_ == rhs.nvars_ && degree_ == rhs.degree_ &&
         terms_ == rhs.terms_;
}

std::string MeroForm::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    // Pull a sign out of single-monomial rational coefficients so the output
    // joins with " - " instead of stacking explicit negations.
    bool negative = false;
    RatFunc body = c;
    if (c.is_polynomial() && c.num().terms().size() == 1 &&
        c.num().leading_coeff().is_rational() &&
        c.num().leading_coeff().rational_value() < 0) {
      negative = true;
      body = -c;
    }
    std::string coeff_str = body.to_string(var_names);
    bool atomic = body.is_polynomial() ? body.num().terms().size() <= 1 : true;
    if (!atomic) coeff_str = "(" + coeff_str + ")";
    std::string wedge_str = wedge_name(idx, var_names);
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (wedge_str.empty()) {
      os << coeff_str;
    } else if (coeff_str == "1") {
      os << wedge_str;
    } else {
      os << coeff_str << "*" << wedge_str;
    }
  }
  return os.str();
}

VectorField::VectorField() : field_(NumberField::rationals()) {}

VectorField::VectorField(FieldPtr field, int nvars) : field_(std::move(field)) {
  if (nvars < 0) throw PreconditionError("ArityMismatch", "negative variable count");
  comps_.assign(nvars, RatFunc::zero(field_, nvars));
}

VectorField::VectorField(std::vector<RatFunc> components) : comps_(std::move(components)) {
  if (comps_.empty())
    throw PreconditionError("ArityMismatch", "a vector field needs at least one component");
  field_ = comps_[0].field();
  for (const RatFunc& c : comps_) {
    require_same_field(field_, c.field(), "VectorField");
    if (c.nvars() != nvars())
      throw PreconditionError("ArityMismatch", "component arity does not match the field count");
  }
}

VectorField VectorField::diagonal(FieldPtr field, const std::vector<FieldElement>& alphas) {
  int n = static_cast<int>(alphas.size());
  VectorField x(field, n);
  for (int i = 0; i < n; ++i) {
    require_same_field(field, alphas[i].field(), "VectorField::diagonal");
    x.comps_[i] = RatFunc::constant(field, n, alphas[i]) * RatFunc::variable(field, n, i);
  }
  return x;
}

const RatFunc& VectorField::component(int i) const {
  if (i < 0 || i >= nvars())
    throw PreconditionError("IndexOutOfRange", "component index " + std::to_string(i + 1));
  return comps_[i];
}

bool VectorField::is_zero() const {
  for (const RatFunc& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField out = *this;
  for (RatFunc& c : out.comps_) c = -c;
  return out;
}

VectorField VectorField::operator+(const VectorField& rhs) const {
  require_same_field(field_, rhs.field_, "VectorField::operator+");
  if (nvars() != rhs.nvars())
    throw PreconditionError("ArityMismatch", "vector fields live in different arities");
  VectorField out = *this;
  for (int i = 0; i < nvars(); ++i) out.comps_[i] = out.comps_[i] + rhs.comps_[i];
  return out;
}

VectorField VectorField::operator-(const VectorField& rhs) const { return *this + (-rhs); }

VectorField VectorField::operator*(const RatFunc& scale) const {
  VectorField out = *this;
  for (RatFunc& c : out.comps_) c = c * scale;
  return out;
}

bool VectorField::operator==(const VectorField& rhs) const {
  return same_field(field_, rhs.field_) && comps_ == rhs.comps_;
}

std::string VectorField::to_string(const std::vector<std::string>& var_names) const {
  std::string s = "vf(";
  for (int i = 0; i < nvars(); ++i) {
    if (i > 0) s += ", ";
    s += comps_[i].to_string(var_names);
  }
  return s + ")";
}

MeroForm wedge(const MeroForm& a, const MeroForm& b) {
  require_compatible(a, b, "wedge");
  MeroForm out(a.field(), a.nvars(), a.degree() + b.degree());
  MeroForm::IndexSet merged;
  for (const auto& [ia, ca] : a.coefficients())
    for (const auto& [ib, cb] : b.coefficients()) {
      int sign = merge_indices(ia, ib, merged);
      if (sign == 0) continue;
      RatFunc c = ca * cb;
      out.add_coeff(merged, sign > 0 ? c : -c);
    }
  return out;
}

MeroForm ext_derivative(const MeroForm& w) {
  MeroForm out(w.field(), w.nvars(), w.degree() + 1);
  MeroForm::IndexSet merged;
  for (const auto& [idx, c] : w.coefficients())
    for (int j = 0; j < w.nvars(); ++j) {
      RatFunc dj = c.derivative(j);
      if (dj.is_zero()) continue;
      int sign = merge_indices({j}, idx, merged);
      if (sign == 0) continue;
      out.add_coeff(merged, sign > 0 ? dj : -dj);
    }
  return out;
}

MeroForm interior_product(const VectorField& x, const MeroForm& w) {
  require_same_field(x.field(), w.field(), "interior_product");
  if (x.nvars() != w.nvars())
    throw PreconditionError("ArityMismatch", "vector field and form live in different arities");
  // Contraction annihilates functions.
  if (w.degree() == 0) return MeroForm::zero(w.field(), w.nvars(), 0);
  MeroForm out(w.field(), w.nvars(), w.degree() - 1);
  for (const auto& [idx, c] : w.coefficients())
    for (size_t t = 0; t < idx.size(); ++t) {
      const RatFunc& xt = x.component(idx[t]);
      if (xt.is_zero()) continue;
      MeroForm::IndexSet rest;
      rest.reserve(idx.size() - 1);
      for (size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      RatFunc term = c * xt;
      out.add_coeff(rest, t % 2 == 0 ? term : -term);
    }
  return out;
}

RatFunc directional_derivative(const VectorField& x, const RatFunc& f) {
  require_same_field(x.field(), f.field(), "directional_derivative");
  if (x.nvars() != f.nvars())
    throw PreconditionError("ArityMismatch", "vector field and function live in different arities");
  RatFunc out = RatFunc::zero(f.field(), f.nvars());
  for (int i = 0; i < x.nvars(); ++i) {
    if (x.component(i).is_zero()) continue;
    out += x.component(i) * f.derivative(i);
  }
  return out;
}

bool is_first_integral(const VectorField& x, const RatFunc& f) {
  return !f.is_constant() && directional_derivative(x, f).is_zero();
}

bool is_tangent(const VectorField& x, const MeroForm& w) {
  return interior_product(x, w).is_zero();
}

bool is_integrable(const MeroForm& w) {
  return wedge(w, ext_derivative(w)).is_zero();
}

Poly denominator_lcm(const MeroForm& w) {
  Poly l = Poly::constant(w.field(), w.nvars(), FieldElement::one(w.field()));
  for (const auto& [idx, c] : w.coefficients()) l = poly_lcm(l, c.den());
  return l;
}

Poly form_content(const MeroForm& w) {
  std::vector<Poly> nums;
  for (const auto& [idx, c] : w.coefficients()) {
    if (!c.is_polynomial())
      throw PreconditionError("NotPolynomial", "content of a form with true denominators");
    nums.push_back(c.num());
  }
  return poly_gcd_list(nums, w.field(), w.nvars());
}

MeroForm clear_denominators(const MeroForm& w) {
  return w * RatFunc(denominator_lcm(w));
}

MeroForm remove_codim1(const MeroForm& w) {
  if (w.is_zero())
    throw PreconditionError("ZeroForm", "cannot normalize the zero form");
  MeroForm cleared = clear_denominators(w);
  Poly content = form_content(cleared);
  MeroForm out(w.field(), w.nvars(), w.degree());
  for (const auto& [idx, c] : cleared.coefficients())
    out.set_coeff(idx, RatFunc(*Poly::try_divide(c.num(), content)));
  return out;
}

}  // namespace folkit
