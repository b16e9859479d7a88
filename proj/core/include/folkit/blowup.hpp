#pragma once

#include <vector>

#include "folkit/forms.hpp"
#include "folkit/resonance.hpp"

namespace folkit {

// Outcome of a strict transform in one chart: the transformed object with
// coprime polynomial coefficients, the net power of the exceptional
// coordinate divided out, and whether the exceptional divisor fails to be
// invariant.  The multiplicity is nonnegative whenever the input vanishes
// at the blow-up center.
template <class T>
struct StrictTransformResult {
  T object;
  int exceptional_multiplicity;
  bool dicritical;
};

// Old coordinates as polynomials in the chart coordinates.  Punctual chart
// i sends x_i to y_i and every other x_j to y_i*y_j; the monoidal transform
// rewrites x_axis as y_chart*y_axis only.
std::vector<Poly> chart_images(const BlowupChart& chart, const FieldPtr& field, int nvars);

// 0-based index of the coordinate cutting out the exceptional divisor.
int exceptional_index(const BlowupChart& chart);

// Largest k such that x_var^k divides p; -1 for the zero polynomial.
int variable_valuation(const Poly& p, int var);

// Exact pullback of a 1-form through the chart substitution, before any
// strict division.
MeroForm pullback_form(const MeroForm& w, const BlowupChart& chart);

// Pushforward of a polynomial vector field to the chart, with denominators
// cleared and the component gcd divided out.  Dicritical iff the component
// along the exceptional coordinate is not divisible by it.
StrictTransformResult<VectorField> transform_vector_field(const VectorField& x,
                                                          const BlowupChart& chart);

// Pullback of a polynomial 1-form with the coefficient gcd divided out.
// Dicritical iff some coefficient other than the exceptional differential's
// is not divisible by the exceptional coordinate, i.e. the divisor is not
// invariant.
StrictTransformResult<MeroForm> transform_form(const MeroForm& w, const BlowupChart& chart);

// Whether the given coordinate axis (1-based) is invariant: every other
// component vanishes identically on the axis.
bool axis_invariance(const VectorField& x, int axis);

}  // namespace folkit
