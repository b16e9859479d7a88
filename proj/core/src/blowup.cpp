#include "folkit/blowup.hpp"

#include <algorithm>

#include "folkit/errors.hpp"

namespace folkit {

namespace {

void require_polynomial(const VectorField& x, const char* where) {
  for (const RatFunc& c : x.components())
    if (!c.is_polynomial())
      throw PreconditionError("NotPolynomial", std::string(where) + ": components must be polynomial");
}

void require_polynomial(const MeroForm& w, const char* where) {
  if (!w.is_polynomial())
    throw PreconditionError("NotPolynomial", std::string(where) + ": coefficients must be polynomial");
}

}  // namespace

std::vector<Poly> chart_images(const BlowupChart& chart, const FieldPtr& field, int nvars) {
  require_valid_chart(chart, nvars);
  std::vector<Poly> images;
  images.reserve(nvars);
  for (int i = 0; i < nvars; ++i) images.push_back(Poly::variable(field, nvars, i));
  if (chart.kind == BlowupChart::Kind::Punctual) {
    for (int j = 0; j < nvars; ++j)
      if (j != chart.chart - 1) images[j] = images[chart.chart - 1] * images[j];
  } else {
    images[chart.axis - 1] = images[chart.chart - 1] * images[chart.axis - 1];
  }
  return images;
}

int exceptional_index(const BlowupChart& chart) { return chart.chart - 1; }

int variable_valuation(const Poly& p, int var) {
  if (p.is_zero()) return -1;
  int v = -1;
  for (const auto& [m, c] : p.terms()) v = v < 0 ? m[var] : std::min(v, m[var]);
  return v;
}

MeroForm pullback_form(const MeroForm& w, const BlowupChart& chart) {
  require_polynomial(w, "pullback_form");
  if (w.degree() != 1)
    throw PreconditionError("DegreeMismatch", "pullback_form handles 1-forms");
  std::vector<Poly> images = chart_images(chart, w.field(), w.nvars());
  MeroForm out = MeroForm::zero(w.field(), w.nvars(), 1);
  for (const auto& [idx, c] : w.coefficients()) {
    Poly pulled = c.num().substitute(images);
    MeroForm dpi = ext_derivative(MeroForm::function(RatFunc(images[idx[0]])));
    out += dpi * RatFunc(pulled);
  }
  return out;
}

StrictTransformResult<VectorField> transform_vector_field(const VectorField& x,
                                                          const BlowupChart& chart) {
  require_polynomial(x, "transform_vector_field");
  if (x.is_zero())
    throw PreconditionError("ZeroField", "cannot transform the zero vector field");
  int n = x.nvars();
  require_valid_chart(chart, n);
  const FieldPtr& field = x.field();
  int e = exceptional_index(chart);

  // Chart coordinates as rational functions of the old ones.
  std::vector<RatFunc> inverse;
  for (int m = 0; m < n; ++m) inverse.push_back(RatFunc::variable(field, n, m));
  if (chart.kind == BlowupChart::Kind::Punctual) {
    for (int j = 0; j < n; ++j)
      if (j != e) inverse[j] = inverse[j] / RatFunc::variable(field, n, e);
  } else {
    inverse[chart.axis - 1] = inverse[chart.axis - 1] / RatFunc::variable(field, n, e);
  }

  std::vector<Poly> images = chart_images(chart, field, n);
  std::vector<RatFunc> rimages;
  for (const Poly& p : images) rimages.push_back(RatFunc(p));

  // Push each chart coordinate through X, then rewrite in chart coordinates.
  std::vector<RatFunc> comps;
  for (int j = 0; j < n; ++j)
    comps.push_back(directional_derivative(x, inverse[j]).substitute(rimages));

  Poly lcm = Poly::constant(field, n, FieldElement::one(field));
  for (const RatFunc& c : comps) lcm = poly_lcm(lcm, c.den());
  std::vector<Poly> cleared;
  for (const RatFunc& c : comps) cleared.push_back((c * RatFunc(lcm)).num());
  int denominator_power = variable_valuation(lcm, e);

  Poly g = poly_gcd_list(cleared, field, n);
  int stripped_power = variable_valuation(g, e);
  std::vector<RatFunc> strict;
  for (const Poly& c : cleared)
    strict.push_back(RatFunc(c.is_zero() ? c : *Poly::try_divide(c, g)));

  StrictTransformResult<VectorField> result{VectorField(std::move(strict)),
                                            stripped_power - denominator_power, false};
  int val = variable_valuation(result.object.component(e).num(), e);
  result.dicritical = val == 0;
  return result;
}

StrictTransformResult<MeroForm> transform_form(const MeroForm& w, const BlowupChart& chart) {
  if (w.is_zero()) throw PreconditionError("ZeroForm", "cannot transform the zero form");
  require_valid_chart(chart, w.nvars());
  int e = exceptional_index(chart);

  MeroForm pulled = pullback_form(w, chart);
  Poly g = form_content(pulled);
  MeroForm strict = MeroForm::zero(w.field(), w.nvars(), 1);
  for (const auto& [idx, c] : pulled.coefficients())
    strict.set_coeff(idx, RatFunc(*Poly::try_divide(c.num(), g)));

  bool dicritical = false;
  for (const auto& [idx, c] : strict.coefficients())
    if (idx[0] != e && variable_valuation(c.num(), e) == 0) dicritical = true;

  return StrictTransformResult<MeroForm>{std::move(strict), variable_valuation(g, e), dicritical};
}

bool axis_invariance(const VectorField& x, int axis) {
  require_polynomial(x, "axis_invariance");
  int n = x.nvars();
  if (axis < 1 || axis > n)
    throw PreconditionError("IndexOutOfRange", "axis index " + std::to_string(axis));
  const FieldPtr& field = x.field();
  std::vector<Poly> onto_axis;
  for (int i = 0; i < n; ++i)
    onto_axis.push_back(i == axis - 1 ? Poly::variable(field, n, i) : Poly::zero(field, n));
  for (int j = 0; j < n; ++j) {
    if (j == axis - 1) continue;
    if (!x.component(j).num().substitute(onto_axis).is_zero()) return false;
  }
  return true;
}

}  // namespace folkit
