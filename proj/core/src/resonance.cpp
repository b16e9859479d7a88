#include "folkit/resonance.hpp"

#include <sstream>

#include "folkit/errors.hpp"
#include "folkit/linalg.hpp"

namespace folkit {

namespace {

// Smallest c with c * den >= num, for positive den.
Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

bool in_box(const std::vector<Integer>& v, const Integer& bound, bool& nonzero) {
  nonzero = false;
  for (const Integer& x : v) {
    if (x < 0 || x > bound) return false;
    if (x != 0) nonzero = true;
  }
  return true;
}

// Depth-first walk over lattice coefficients.  Row `level` is the only
// remaining contributor to its pivot column, so the box constraint there
// pins the coefficient to an exact interval.
bool search_level(const std::vector<std::vector<Integer>>& hnf, const std::vector<int>& pivots,
                  size_t level, const Integer& bound, std::vector<Integer>& point,
                  std::vector<Integer>& found) {
  if (level == hnf.size()) {
    bool nonzero = false;
    if (in_box(point, bound, nonzero) && nonzero) {
      found = point;
      return true;
    }
    return false;
  }
  const std::vector<Integer>& row = hnf[level];
  const Integer& pivot = row[pivots[level]];
  Integer lo = ceil_div(-point[pivots[level]], pivot);
  Integer hi = floor_div(bound - point[pivots[level]], pivot);
  for (Integer c = lo; c <= hi; ++c) {
    for (size_t j = 0; j < point.size(); ++j) point[j] += c * row[j];
    if (search_level(hnf, pivots, level + 1, bound, point, found)) return true;
    for (size_t j = 0; j < point.size(); ++j) point[j] -= c * row[j];
  }
  return false;
}

}  // namespace

Eigenvalues::Eigenvalues(std::vector<FieldElement> values) : vals_(std::move(values)) {
  if (vals_.size() < 2)
    throw PreconditionError("TooFewEigenvalues", "an eigenvalue tuple needs at least two entries");
  for (const FieldElement& v : vals_)
    require_same_field(vals_[0].field(), v.field(), "Eigenvalues");
}

std::string Eigenvalues::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) os << ", ";
    os << vals_[i].to_string();
  }
  os << ")";
  return os.str();
}

IntegerRelationBasis strong_resonances(const Eigenvalues& a) {
  return q_linear_relation_lattice(a.values());
}

bool is_strongly_diagonalizable(const Eigenvalues& a) { return strong_resonances(a).empty(); }

std::optional<std::vector<Integer>> nonneg_resonance_search(const Eigenvalues& a, int bound) {
  if (bound < 1)
    throw PreconditionError("InvalidBound", "resonance search bound must be at least 1");
  IntegerRelationBasis basis = strong_resonances(a);
  if (basis.empty()) return std::nullopt;
  Integer box(bound);

  if (basis.relations.size() == 1) {
    // Rank one: every relation is a multiple of the generator, so a
    // nonnegative one exists iff the generator or its negation is
    // componentwise nonnegative.
    for (int sign : {1, -1}) {
      std::vector<Integer> g = basis.relations[0];
      if (sign < 0)
        for (Integer& x : g) x = -x;
      bool nonneg = true;
      Integer top(0);
      for (const Integer& x : g) {
        if (x < 0) nonneg = false;
        if (x > top) top = x;
      }
      if (nonneg && top <= box) return g;
      if (nonneg) return std::nullopt;
    }
    return std::nullopt;
  }

  std::vector<std::vector<Integer>> hnf = hnf_rows(basis.relations, a.size());
  std::vector<int> pivots;
  for (const auto& row : hnf) {
    int p = 0;
    while (row[p] == 0) ++p;
    pivots.push_back(p);
  }
  std::vector<Integer> point(a.size(), Integer(0)), found;
  if (search_level(hnf, pivots, 0, box, point, found)) return found;
  return std::nullopt;
}

std::string BlowupChart::to_string() const {
  if (kind == Kind::Punctual) return "punctual chart " + std::to_string(chart);
  return "monoidal axis " + std::to_string(axis) + " chart " + std::to_string(chart);
}

void require_valid_chart(const BlowupChart& chart, int nvars) {
  if (chart.chart < 1 || chart.chart > nvars)
    throw PreconditionError("BadChart", "chart index " + std::to_string(chart.chart) +
                                            " with " + std::to_string(nvars) + " variables");
  if (chart.kind == BlowupChart::Kind::Monoidal) {
    if (chart.axis < 1 || chart.axis > nvars)
      throw PreconditionError("BadChart", "axis index " + std::to_string(chart.axis) + " with " +
                                              std::to_string(nvars) + " variables");
    if (chart.axis == chart.chart)
      throw PreconditionError("BadChart", "monoidal axis and chart must differ");
  }
}

Eigenvalues blowup_eigenvalue_law(const Eigenvalues& a, const BlowupChart& chart) {
  require_valid_chart(chart, a.size());
  std::vector<FieldElement> out = a.values();
  if (chart.kind == BlowupChart::Kind::Punctual) {
    const FieldElement& base = a[chart.chart - 1];
    for (int j = 0; j < a.size(); ++j)
      if (j != chart.chart - 1) out[j] = out[j] - base;
  } else {
    out[chart.axis - 1] = out[chart.axis - 1] - a[chart.chart - 1];
  }
  return Eigenvalues(std::move(out));
}

}  // namespace folkit
