#pragma once

#include <optional>
#include <string>
#include <utility>

#include "folkit/forms.hpp"

namespace folkit {

// Exact test of w1 ^ dw2 + w2 ^ dw1 = 0, the condition for every linear
// combination of two integrable 1-forms to stay integrable.
bool pencil_condition(const MeroForm& w1, const MeroForm& w2);

// Writes w3 = l1*w1 + l2*w2 by coefficient ratios of wedges and verifies
// the residual vanishes.  Throws DegenerateGenerators when w1 ^ w2 = 0 and
// NotCoplanar when no such decomposition exists.
std::pair<RatFunc, RatFunc> decompose_over_pair(const MeroForm& w3, const MeroForm& w1,
                                                const MeroForm& w2);

// Which variable the auxiliary field Y contracts in the connection-form
// construction.  Either choice must produce the same form; exposing both
// makes the uniqueness claim testable.
enum class YVariableChoice { First, Last };

// The unique 1-form theta with dw = theta ^ w for both generators of a
// generator pair satisfying the pencil condition.  Verified against both
// generators before returning.
MeroForm connection_form_for(const MeroForm& g1, const MeroForm& g2, YVariableChoice choice);

// Two-generator family of integrable 1-forms.  Construction validates the
// full invariant set: degree-1 polynomial generators in at least three
// variables, independence, integrability of both, the pencil condition,
// coprime cross-contents, and it resolves the connection form eagerly so
// values are immutable afterwards.
class Pencil {
 public:
  Pencil(MeroForm gen1, MeroForm gen2);

  const MeroForm& gen1() const { return gen1_; }
  const MeroForm& gen2() const { return gen2_; }
  const MeroForm& theta() const { return theta_; }
  const FieldPtr& field() const { return gen1_.field(); }
  int nvars() const { return gen1_.nvars(); }

  // The plain combination a*gen1 + b*gen2.  The connection-form identity
  // dw = theta ^ w replays exactly on these.
  MeroForm member_raw(const FieldElement& a, const FieldElement& b) const;
  // The combination with its coefficient gcd divided out: the canonical
  // representative of the member foliation.
  MeroForm member(const FieldElement& a, const FieldElement& b) const;
  // gcd of the coefficients of the combination of content-stripped
  // generators; a unit exactly when the member's singular set has
  // codimension at least two.
  Poly member_codim1_locus(const FieldElement& a, const FieldElement& b) const;

  // gen1 ^ gen2 with the coefficient gcd divided out: the 2-form cutting
  // out the codimension-two foliation tangent to every member.
  MeroForm axis_2form() const;

  // d(theta).
  MeroForm curvature() const;
  // The factor alpha with d(theta) = alpha * gen1 ^ gen2, zero for flat
  // pencils, verified exactly.
  RatFunc curvature_factor() const;

 private:
  MeroForm gen1_;
  MeroForm gen2_;
  MeroForm theta_;
};

// Builds the pencil spanned by three pairwise independent integrable forms
// tangent to a common nonzero 2-form eta: decomposes w3 over (w1, w2),
// scales the pair to clear the decomposition denominators, and validates
// the result.  Inputs are normalized to coprime polynomial coefficients
// first.  Local decomposability of eta is an assumed hypothesis; it is not
// checked pointwise, and a violation surfaces through NotCoplanar or a
// failed pencil invariant rather than silently.
Pencil pencil_from_three(const MeroForm& w1, const MeroForm& w2, const MeroForm& w3,
                         const MeroForm& eta);

// Outcome of the curvature-based classification.  Every carried object has
// been re-verified against its defining identity:
//   theta_primitive: d(primitive) = theta,
//   closed_member:   d(member) = 0,
//   axis_first_integral: nonconstant with d(phi) ^ gen1 ^ gen2 = 0.
struct PencilClassification {
  enum class Case {
    FlatMeromorphic,
    FlatHolomorphicFirstIntegral,
    ConstantCurvatureFactor,
    NonconstantCurvatureFactor,
  };

  Case kind;
  MeroForm theta;
  RatFunc alpha;  // zero iff flat

  std::optional<Poly> theta_primitive;
  std::optional<RatFunc> mu1, mu2;  // theta = mu1*gen1 + mu2*gen2 (constant alpha)
  std::optional<std::pair<FieldElement, FieldElement>> closed_member_params;
  std::optional<MeroForm> closed_member;
  std::optional<RatFunc> k1, k2;  // d(alpha)/(2 alpha) + theta = k1*gen1 + k2*gen2
  std::optional<RatFunc> axis_first_integral;

  std::string case_name() const;
};

PencilClassification classify(const Pencil& p);

// Whether the hypersurface f = 0 is invariant by the axis foliation: every
// coefficient of df ^ axis_2form is divisible by f.
bool verify_axis_invariant_hypersurface(const Pencil& p, const Poly& f);

}  // namespace folkit
