#pragma once

// Singularity analysis for foliation germs: recognition of the logarithmic
// normal forms attached to a strongly diagonalizable linear part, the pencil
// of logarithmic forms tangent to a diagonal field, and exact searches for
// invariant hypersurfaces of polynomial vector fields.

#include <optional>
#include <string>
#include <vector>

#include "folkit/forms.hpp"
#include "folkit/pencil.hpp"
#include "folkit/resonance.hpp"

namespace folkit {

// The 1-form sum_i b_i * (x_1...x_n / x_i) dx_i, the cleared form of the
// closed logarithmic form sum_i b_i dx_i / x_i. Residues with value zero are
// allowed; they drop the corresponding term.
MeroForm logarithmic_form(const FieldPtr& field, const std::vector<FieldElement>& residues);

// Pencil spanned by two cleared logarithmic forms whose residue vectors span
// the kernel of b -> b.a. Every member is tangent to the diagonal field with
// eigenvalues a. Requires three nonzero eigenvalues (ArityMismatch,
// ZeroEigenvalue).
Pencil tangent_log_pencil(const Eigenvalues& a);

// Checks the pairwise coefficient identities
//   c_j X(c_i) - c_i X(c_j) = (a_j - a_i) c_i c_j
// on a polynomial 1-form w in three variables, where X is the diagonal field
// with eigenvalues a. They hold for every 1-form that is integrable and
// tangent to X, and pin down the coefficient ratios of the normal forms.
bool verify_coefficient_ratio_invariance(const MeroForm& w, const Eigenvalues& a);

// Outcome of matching a 1-form against the two logarithmic normal forms
//   I:  b_1 x_2 dx_1 + b_2 x_1 dx_2            (dimensional type 2)
//   II: sum_i b_i (x_1 x_2 x_3 / x_i) dx_i     (dimensional type 3)
// up to multiplication by a unit power series.
struct SimpleSingularityReport {
  enum class NormalForm { None, I, II };

  NormalForm matched_normal_form = NormalForm::None;
  // 2 or 3 when matched, 0 otherwise.
  int dimensional_type = 0;
  // Residues b_i in ascending variable order, empty when unmatched. For
  // form I only the two participating variables contribute.
  std::vector<FieldElement> residues;
  // Unit factor certified up to the truncation order, normalized to constant
  // term one; the form agrees with unit times the matched pattern below that
  // order. Present only for recognize_normal_form matches.
  std::optional<Poly> unit;
  // Matched and the residues admit no nonnegative integer relation with
  // coordinates up to resonance_bound.
  bool complex_hyperbolic = false;
  // Witness relation when one exists.
  std::optional<std::vector<Integer>> resonance;
  int resonance_bound = 0;
  // Order used for the unit comparison, 0 when only lowest-order terms were
  // inspected.
  int truncation_order = 0;

  std::string form_name() const;
};

// Matches w against the normal forms up to a unit, with all power series
// comparisons truncated below the given order. Requires w polynomial,
// integrable, tangent to the diagonal field of a, and the eigenvalues
// nonzero and pairwise distinct, the field-visible consequence of strong
// diagonalizability (NotPolynomial, ZeroForm, NotIntegrable, NotTangent,
// NotStronglyDiagonalizable, ArityMismatch, InvalidOrder). The form is
// matched as given: a shared unit factor lands in the reported unit, while a
// shared factor vanishing at the origin (coefficients that are not coprime
// as power series) defeats the match. A report with NormalForm::None means
// the data below the order does not certify either shape.
SimpleSingularityReport recognize_normal_form(const MeroForm& w, const Eigenvalues& a,
                                              int order, int bound = 50);

// Reads only the lowest-order part of a polynomial 1-form in three variables
// and reports whether it matches the initial part of form I or II, together
// with the resonance verdict on the residues. Never throws on shape
// mismatches; a zero form yields an unmatched report.
SimpleSingularityReport simple_ch_check(const MeroForm& w, int bound);

// The degree-m field x_3^m d_1 + x_1^m d_2 + x_2^m d_3 together with the
// 1-form i_R i_X (dx_1 ^ dx_2 ^ dx_3) it annihilates, R the radial field.
// Both contractions are replayed exactly before returning (BadDegree for
// m < 2, CertificateError if the identities fail).
struct JouanolouPair {
  VectorField field;
  MeroForm form;
};
JouanolouPair jouanolou(const FieldPtr& field, int m);

// Exact divisibility test f | X(f) for a polynomial field and a nonconstant
// polynomial (ZeroPoly, ConstantPoly, NotPolynomial).
bool invariant_hypersurface_check(const VectorField& x, const Poly& f);

// Searches for invariant hypersurfaces f = 0 with f homogeneous of degree at
// most degree_cap and X(f) = g f for a monomial-times-constant cofactor g.
// Diagonal fields take a fast path where every monomial qualifies (linear
// combinations inside one weight class stay invariant but only the monomial
// basis is listed). Otherwise each cofactor monomial yields an eigenvalue
// problem over the coefficient field; eigenvalues are searched among
// rational values, which finds every cofactor over Q and may miss cofactor
// constants living in a proper extension. Every returned f is verified by
// exact division, so false positives are impossible. Results are monic and
// sorted by degree then rendering.
std::vector<Poly> invariant_hypersurface_search(const VectorField& x, int degree_cap);

}  // namespace folkit
