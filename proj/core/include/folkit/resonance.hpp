#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folkit/number_field.hpp"

namespace folkit {

// Eigenvalue tuple of a diagonal linear part, at least two entries over one
// scalar field.
class Eigenvalues {
 public:
  explicit Eigenvalues(std::vector<FieldElement> values);

  const std::vector<FieldElement>& values() const { return vals_; }
  const FieldElement& operator[](size_t i) const { return vals_[i]; }
  int size() const { return static_cast<int>(vals_.size()); }
  const FieldPtr& field() const { return vals_[0].field(); }

  bool operator==(const Eigenvalues& rhs) const { return vals_ == rhs.vals_; }
  bool operator!=(const Eigenvalues& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  std::vector<FieldElement> vals_;
};

// Basis of the lattice of integer vectors annihilating the tuple.  Empty
// basis means the tuple admits no nontrivial integer relation at all.
IntegerRelationBasis strong_resonances(const Eigenvalues& a);
bool is_strongly_diagonalizable(const Eigenvalues& a);

// Searches for a nonzero m with nonnegative entries, max entry <= bound and
// sum m_i a_i = 0.  Walks the relation lattice intersected with the box, so
// absence is only certified up to the bound.
std::optional<std::vector<Integer>> nonneg_resonance_search(const Eigenvalues& a, int bound);

// Chart selection for the two blow-up shapes.  Indices are 1-based, as in
// the command line interface.  A punctual chart i divides every coordinate
// by x_i; a monoidal transform rewrites x_axis as x_chart * x_axis and
// leaves the rest alone, with x_chart the exceptional coordinate.
struct BlowupChart {
  enum class Kind { Punctual, Monoidal };

  Kind kind;
  int chart;
  int axis;  // meaningful for the monoidal kind only

  static BlowupChart punctual(int chart) { return BlowupChart{Kind::Punctual, chart, 0}; }
  static BlowupChart monoidal(int axis, int chart) {
    return BlowupChart{Kind::Monoidal, chart, axis};
  }

  std::string to_string() const;
};

// How a blow-up acts on the eigenvalues of a diagonal field: the punctual
// chart i keeps alpha_i and shifts every other entry by -alpha_i; the
// monoidal (axis j, chart k) shifts alpha_j by -alpha_k only.
Eigenvalues blowup_eigenvalue_law(const Eigenvalues& a, const BlowupChart& chart);

// Validates chart/axis indices against the ambient variable count.
void require_valid_chart(const BlowupChart& chart, int nvars);

}  // namespace folkit
