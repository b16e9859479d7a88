#include "folkit/foliation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "folkit/linalg.hpp"

namespace folkit {

namespace {

using Mat = std::vector<std::vector<FieldElement>>;

Poly con(const FieldPtr& field, int nvars, const FieldElement& c) {
  return Poly::constant(field, nvars, c);
}

// Terms of total degree exactly d.
Poly homogeneous_part(const Poly& p, int d) {
  Poly out = Poly::zero(p.field(), p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) == d) out = out + Poly::monomial_term(p.field(), p.nvars(), m, c);
  }
  return out;
}

// Minimal total degree of a term; the term map is graded, so it sits first.
int lowest_degree(const Poly& p) {
  if (p.is_zero()) return -1;
  return total_degree(p.terms().begin()->first);
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur[var] = left;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[var] = e;
      rec(var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

void require_polynomial_components(const VectorField& x, const char* where) {
  for (const RatFunc& c : x.components()) {
    if (!c.is_polynomial())
      throw PreconditionError("NotPolynomial",
                              std::string(where) + ": vector field components must be polynomial");
  }
}

// Eigenvalues when every component is a scalar multiple of its own variable.
std::optional<std::vector<FieldElement>> diagonal_eigenvalues(const VectorField& x) {
  std::vector<FieldElement> out;
  for (int i = 0; i < x.nvars(); ++i) {
    const Poly& p = x.component(i).num();
    if (p.is_zero()) {
      out.push_back(FieldElement::zero(x.field()));
      continue;
    }
    if (p.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *p.terms().begin();
    Monomial want(x.nvars(), 0);
    want[i] = 1;
    if (m != want) return std::nullopt;
    out.push_back(c);
  }
  return out;
}

Mat transpose(const Mat& a, int ncols, const FieldElement& zero) {
  Mat out(ncols, std::vector<FieldElement>(a.size(), zero));
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < ncols; ++j) out[j][i] = a[i][j];
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b, const FieldElement& zero) {
  size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  Mat out(rows, std::vector<FieldElement>(cols, zero));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

std::vector<FieldElement> mat_vec(const Mat& a, const std::vector<FieldElement>& v,
                                  const FieldElement& zero) {
  std::vector<FieldElement> out(a.size(), zero);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] = out[i] + a[i][j] * v[j];
  return out;
}

FieldElement trace(const Mat& a, const FieldElement& zero) {
  FieldElement t = zero;
  for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
  return t;
}

// Solves b * a = t for a full column rank b; the call sites only reach this
// with t in the column span.
std::vector<FieldElement> solve_columns(const Mat& b, const std::vector<FieldElement>& t,
                                        const FieldPtr& field) {
  const FieldElement zero = FieldElement::zero(field);
  int rows = static_cast<int>(b.size());
  int cols = rows ? static_cast<int>(b[0].size()) : 0;
  Mat aug(rows, std::vector<FieldElement>(cols + 1, zero));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = b[i][j];
    aug[i][cols] = t[i];
  }
  std::vector<int> pivot_row(cols, -1);
  int rank = 0;
  for (int col = 0; col < cols; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!aug[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[piv], aug[rank]);
    FieldElement inv = aug[rank][col].inverse();
    for (int j = col; j <= cols; ++j) aug[rank][j] = aug[rank][j] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || aug[r][col].is_zero()) continue;
      FieldElement f = aug[r][col];
      for (int j = col; j <= cols; ++j) aug[r][j] = aug[r][j] - f * aug[rank][j];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (!aug[r][cols].is_zero())
      throw CertificateError("invariant hypersurface search: eigenvector left the subspace");
  std::vector<FieldElement> a(cols, zero);
  for (int col = 0; col < cols; ++col)
    if (pivot_row[col] >= 0) a[col] = aug[pivot_row[col]][cols];
  return a;
}

// Characteristic polynomial coefficients in descending order, monic, via the
// trace recurrence M_j = A M_{j-1} + c_{j-1} I, c_j = -tr(A M_j) / j.
std::vector<FieldElement> char_poly_desc(const Mat& a, const FieldPtr& field) {
  int k = static_cast<int>(a.size());
  const FieldElement zero = FieldElement::zero(field);
  std::vector<FieldElement> c(k + 1, zero);
  c[0] = FieldElement::one(field);
  Mat m(k, std::vector<FieldElement>(k, zero));
  for (int j = 1; j <= k; ++j) {
    m = mat_mul(a, m, zero);
    for (int i = 0; i < k; ++i) m[i][i] = m[i][i] + c[j - 1];
    c[j] = -(trace(mat_mul(a, m, zero), zero) / FieldElement::from_int(field, j));
  }
  return c;
}

std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> out;
  for (Integer i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      out.push_back(i);
      if (i * i != v) out.push_back(v / i);
    }
  }
  return out;
}

// Rational roots of a monic polynomial over the field, found through the
// leading power-basis coordinate (a rational root annihilates every
// coordinate slot) and confirmed against the full coefficients.
std::vector<FieldElement> rational_roots_desc(const std::vector<FieldElement>& cs,
                                              const FieldPtr& field) {
  int k = static_cast<int>(cs.size()) - 1;
  std::vector<Rational> q(k + 1);
  for (int i = 0; i <= k; ++i) q[i] = cs[i].coords()[0];
  Integer den = 1;
  for (int i = 0; i <= k; ++i) {
    Integer d = q[i].get_den();
    den = den / gcd(den, d) * d;
  }
  std::vector<Integer> a(k + 1);
  for (int i = 0; i <= k; ++i) a[i] = q[i].get_num() * (den / q[i].get_den());
  int last = k;
  bool zero_candidate = false;
  while (last >= 0 && a[last] == 0) {
    zero_candidate = true;
    --last;
  }
  std::set<Rational> cands;
  if (zero_candidate) cands.insert(Rational(0));
  if (last >= 1) {
    for (const Integer& p : positive_divisors(a[last]))
      for (const Integer& s : positive_divisors(a[0])) {
        Rational r(p, s);
        r.canonicalize();
        cands.insert(r);
        cands.insert(-r);
      }
  }
  std::vector<FieldElement> roots;
  for (const Rational& r : cands) {
    FieldElement c = FieldElement::from_rational(field, r);
    FieldElement acc = FieldElement::zero(field);
    for (int i = 0; i <= k; ++i) acc = acc * c + cs[i];
    if (acc.is_zero()) roots.push_back(c);
  }
  return roots;
}

}  // namespace

MeroForm logarithmic_form(const FieldPtr& field, const std::vector<FieldElement>& residues) {
  int n = static_cast<int>(residues.size());
  if (n < 2)
    throw PreconditionError("ArityMismatch", "logarithmic_form needs at least two residues");
  MeroForm w(field, n, 1);
  for (int i = 0; i < n; ++i) {
    if (residues[i].is_zero()) continue;
    require_same_field(field, residues[i].field(), "logarithmic_form");
    Monomial m(n, 1);
    m[i] = 0;
    w.add_coeff({i}, RatFunc(Poly::monomial_term(field, n, m, residues[i])));
  }
  return w;
}

Pencil tangent_log_pencil(const Eigenvalues& a) {
  if (a.size() != 3)
    throw PreconditionError("ArityMismatch", "tangent_log_pencil expects three eigenvalues");
  const FieldPtr& field = a.field();
  for (int i = 0; i < 3; ++i) {
    if (a[i].is_zero())
      throw PreconditionError("ZeroEigenvalue",
                              "tangent_log_pencil needs nonzero eigenvalues");
  }
  const FieldElement zero = FieldElement::zero(field), one = FieldElement::one(field);
  Mat row{{a[0], a[1], a[2]}};
  Mat basis = field_kernel(row, 3, zero, one);
  // one nonzero relation row leaves a plane of residue vectors
  return Pencil(logarithmic_form(field, basis[0]), logarithmic_form(field, basis[1]));
}

bool verify_coefficient_ratio_invariance(const MeroForm& w, const Eigenvalues& a) {
  if (w.degree() != 1)
    throw PreconditionError("DegreeMismatch", "ratio invariance applies to 1-forms");
  if (a.size() != w.nvars())
    throw PreconditionError("ArityMismatch",
                            "eigenvalue count must match the form's variable count");
  require_same_field(w.field(), a.field(), "verify_coefficient_ratio_invariance");
  if (!w.is_polynomial())
    throw PreconditionError("NotPolynomial", "ratio invariance applies to polynomial forms");
  const FieldPtr& field = w.field();
  int n = w.nvars();
  VectorField x = VectorField::diagonal(field, a.values());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RatFunc ci = w.coeff({i}), cj = w.coeff({j});
      RatFunc lhs = cj * directional_derivative(x, ci) - ci * directional_derivative(x, cj);
      RatFunc rhs = RatFunc::constant(field, n, a[j] - a[i]) * ci * cj;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::string SimpleSingularityReport::form_name() const {
  switch (matched_normal_form) {
    case NormalForm::I:
      return "logarithmic normal form I";
    case NormalForm::II:
      return "logarithmic normal form II";
    default:
      return "unmatched";
  }
}

SimpleSingularityReport recognize_normal_form(const MeroForm& w, const Eigenvalues& a,
                                              int order, int bound) {
  if (w.degree() != 1)
    throw PreconditionError("DegreeMismatch", "normal form recognition applies to 1-forms");
  if (w.nvars() != 3 || a.size() != 3)
    throw PreconditionError("ArityMismatch",
                            "normal form recognition works in three variables");
  require_same_field(w.field(), a.field(), "recognize_normal_form");
  if (order < 1) throw PreconditionError("InvalidOrder", "truncation order must be positive");
  if (bound < 1) throw PreconditionError("InvalidBound", "resonance bound must be positive");
  if (!w.is_polynomial())
    throw PreconditionError("NotPolynomial", "normal form recognition needs a polynomial form");
  if (w.is_zero())
    throw PreconditionError("ZeroForm", "the zero form matches no normal form");
  // recognition needs the consequences of strong diagonalizability that are
  // visible over any scalar field: nonzero, pairwise distinct eigenvalues
  for (int i = 0; i < 3; ++i) {
    if (a[i].is_zero())
      throw PreconditionError("NotStronglyDiagonalizable",
                              "the diagonal field must have nonzero eigenvalues");
    for (int j = i + 1; j < 3; ++j)
      if (a[i] == a[j])
        throw PreconditionError("NotStronglyDiagonalizable",
                                "the diagonal field must have pairwise distinct eigenvalues");
  }

  const FieldPtr& field = w.field();
  if (!is_integrable(w))
    throw PreconditionError("NotIntegrable", "the form fails the integrability identity");
  VectorField x = VectorField::diagonal(field, a.values());
  if (!is_tangent(x, w))
    throw PreconditionError("NotTangent", "the form is not tangent to the diagonal field");

  SimpleSingularityReport rep;
  rep.truncation_order = order;
  rep.resonance_bound = bound;

  std::vector<int> support;
  for (int i = 0; i < 3; ++i)
    if (!w.coeff({i}).is_zero()) support.push_back(i);

  std::vector<Monomial> pattern(3, Monomial(3, 0));
  SimpleSingularityReport::NormalForm shape;
  if (support.size() == 3) {
    shape = SimpleSingularityReport::NormalForm::II;
    for (int i = 0; i < 3; ++i) {
      pattern[i] = Monomial(3, 1);
      pattern[i][i] = 0;
    }
  } else if (support.size() == 2) {
    shape = SimpleSingularityReport::NormalForm::I;
    pattern[support[0]][support[1]] = 1;
    pattern[support[1]][support[0]] = 1;
  } else {
    // a single surviving coefficient matches neither shape
    return rep;
  }

  const FieldElement one = FieldElement::one(field);
  std::vector<Poly> quotients;
  std::vector<FieldElement> residues;
  for (int s : support) {
    Poly trunc = w.coeff({s}).num().truncate(order);
    auto q = Poly::try_divide(trunc, Poly::monomial_term(field, 3, pattern[s], one));
    if (!q) return rep;
    FieldElement b = q->evaluate_origin();
    if (b.is_zero()) return rep;
    quotients.push_back(*q);
    residues.push_back(b);
  }
  // the quotients must be one shared unit series, up to the residue scale
  for (size_t u = 1; u < quotients.size(); ++u) {
    Poly lhs = quotients[0] * con(field, 3, residues[u]);
    Poly rhs = quotients[u] * con(field, 3, residues[0]);
    if (!(lhs - rhs).is_zero()) return rep;
  }

  rep.matched_normal_form = shape;
  rep.dimensional_type = static_cast<int>(support.size());
  rep.residues = residues;
  rep.unit = quotients[0] * con(field, 3, residues[0].inverse());
  rep.resonance = nonneg_resonance_search(Eigenvalues(residues), bound);
  rep.complex_hyperbolic = !rep.resonance.has_value();
  return rep;
}

SimpleSingularityReport simple_ch_check(const MeroForm& w, int bound) {
  if (w.degree() != 1)
    throw PreconditionError("DegreeMismatch", "the simple singularity check applies to 1-forms");
  if (w.nvars() != 3)
    throw PreconditionError("ArityMismatch", "the simple singularity check works in three variables");
  if (bound < 1) throw PreconditionError("InvalidBound", "resonance bound must be positive");

  SimpleSingularityReport rep;
  rep.resonance_bound = bound;
  if (w.is_zero() || !w.is_polynomial()) return rep;

  int nu = -1;
  for (int i = 0; i < 3; ++i) {
    Poly c = w.coeff({i}).num();
    if (c.is_zero()) continue;
    int d = lowest_degree(c);
    if (nu < 0 || d < nu) nu = d;
  }
  std::vector<Poly> init;
  std::vector<int> support;
  for (int i = 0; i < 3; ++i) {
    init.push_back(homogeneous_part(w.coeff({i}).num(), nu));
    if (!init[i].is_zero()) support.push_back(i);
  }

  auto single_term_is = [&](const Poly& p, const Monomial& want) {
    return p.terms().size() == 1 && p.terms().begin()->first == want;
  };

  std::vector<FieldElement> residues;
  if (nu == 2 && support.size() == 3) {
    for (int i = 0; i < 3; ++i) {
      Monomial want(3, 1);
      want[i] = 0;
      if (!single_term_is(init[i], want)) return rep;
      residues.push_back(init[i].terms().begin()->second);
    }
    rep.matched_normal_form = SimpleSingularityReport::NormalForm::II;
    rep.dimensional_type = 3;
  } else if (nu == 1 && support.size() == 2) {
    Monomial want0(3, 0), want1(3, 0);
    want0[support[1]] = 1;
    want1[support[0]] = 1;
    if (!single_term_is(init[support[0]], want0) || !single_term_is(init[support[1]], want1))
      return rep;
    residues.push_back(init[support[0]].terms().begin()->second);
    residues.push_back(init[support[1]].terms().begin()->second);
    rep.matched_normal_form = SimpleSingularityReport::NormalForm::I;
    rep.dimensional_type = 2;
  } else {
    return rep;
  }

  rep.residues = residues;
  rep.resonance = nonneg_resonance_search(Eigenvalues(residues), bound);
  rep.complex_hyperbolic = !rep.resonance.has_value();
  return rep;
}

JouanolouPair jouanolou(const FieldPtr& field, int m) {
  if (m < 2) throw PreconditionError("BadDegree", "jouanolou needs degree at least 2");
  const FieldElement one = FieldElement::one(field);
  auto power = [&](int var) {
    Monomial mm(3, 0);
    mm[var] = m;
    return RatFunc(Poly::monomial_term(field, 3, mm, one));
  };
  VectorField x({power(2), power(0), power(1)});
  VectorField radial({RatFunc(Poly::variable(field, 3, 0)), RatFunc(Poly::variable(field, 3, 1)),
                      RatFunc(Poly::variable(field, 3, 2))});
  MeroForm omega = wedge(wedge(MeroForm::differential(field, 3, 0),
                               MeroForm::differential(field, 3, 1)),
                         MeroForm::differential(field, 3, 2));
  MeroForm w = interior_product(radial, interior_product(x, omega));
  if (!interior_product(x, w).is_zero() || !interior_product(radial, w).is_zero())
    throw CertificateError("jouanolou: contraction identities failed to replay");
  return {x, w};
}

bool invariant_hypersurface_check(const VectorField& x, const Poly& f) {
  require_same_field(x.field(), f.field(), "invariant_hypersurface_check");
  if (x.nvars() != f.nvars())
    throw PreconditionError("ArityMismatch",
                            "the polynomial and the field must share the variable count");
  require_polynomial_components(x, "invariant_hypersurface_check");
  if (f.is_zero()) throw PreconditionError("ZeroPoly", "the zero locus of 0 is everything");
  if (f.is_constant())
    throw PreconditionError("ConstantPoly", "a constant cuts out no hypersurface");
  RatFunc xf = directional_derivative(x, RatFunc(f));
  return Poly::try_divide(xf.num(), f).has_value();
}

std::vector<Poly> invariant_hypersurface_search(const VectorField& x, int degree_cap) {
  if (degree_cap < 1)
    throw PreconditionError("InvalidBound", "the degree cap must be positive");
  require_polynomial_components(x, "invariant_hypersurface_search");
  if (x.is_zero())
    throw PreconditionError("ZeroField", "the zero field leaves every hypersurface invariant");

  const FieldPtr& field = x.field();
  const int n = x.nvars();
  const FieldElement zero = FieldElement::zero(field), one = FieldElement::one(field);

  std::vector<Poly> found;
  std::set<std::string> seen;
  auto push = [&](const Poly& f) {
    Poly g = f.normalized();
    if (seen.insert(g.to_string()).second) found.push_back(g);
  };
  auto finish = [&]() {
    std::sort(found.begin(), found.end(), [](const Poly& a, const Poly& b) {
      int da = total_degree(a.leading_monomial()), db = total_degree(b.leading_monomial());
      if (da != db) return da < db;
      return a.to_string() < b.to_string();
    });
    return found;
  };

  if (diagonal_eigenvalues(x)) {
    // every monomial is an eigenvector of a diagonal field, so each one cuts
    // out an invariant union of coordinate hyperplanes; combinations inside
    // one weight class stay invariant but the monomials already span them
    for (int d = 1; d <= degree_cap; ++d)
      for (const Monomial& m : monomials_of_degree(n, d))
        push(Poly::monomial_term(field, n, m, one));
    return finish();
  }

  // split the field into graded derivations; the piece of component degree k
  // sends a degree d polynomial to degree d + k - 1
  std::map<int, VectorField> graded;
  {
    std::map<int, std::vector<RatFunc>> parts;
    for (int i = 0; i < n; ++i) {
      for (const auto& [mono, c] : x.component(i).num().terms()) {
        int k = total_degree(mono);
        auto it = parts.find(k);
        if (it == parts.end())
          it = parts.emplace(k, std::vector<RatFunc>(n, RatFunc(Poly::zero(field, n)))).first;
        it->second[i] = it->second[i] + RatFunc(Poly::monomial_term(field, n, mono, c));
      }
    }
    for (auto& [k, comps] : parts) graded.emplace(k, VectorField(comps));
  }

  for (int d = 1; d <= degree_cap; ++d) {
    const std::vector<Monomial> basis = monomials_of_degree(n, d);
    const int dim = static_cast<int>(basis.size());
    std::map<Monomial, int> index;
    for (int c = 0; c < dim; ++c) index.emplace(basis[c], c);

    auto apply = [&](const VectorField& v, int c) {
      return directional_derivative(v, RatFunc(Poly::monomial_term(field, n, basis[c], one))).num();
    };

    for (const auto& [k, vk] : graded) {
      if (k < 1) continue;  // a constant piece can only appear as a constraint
      // constraints: every other graded piece must annihilate the candidate
      Mat constraints;
      for (const auto& [k2, vk2] : graded) {
        if (k2 == k) continue;
        std::map<Monomial, std::vector<FieldElement>> rows;
        for (int c = 0; c < dim; ++c) {
          Poly im = apply(vk2, c);
          for (const auto& [tm, tc] : im.terms()) {
            auto& row = rows[tm];
            if (row.empty()) row.assign(dim, zero);
            row[c] = tc;
          }
        }
        for (auto& [tm, row] : rows) constraints.push_back(std::move(row));
      }

      for (const Monomial& e : monomials_of_degree(n, k - 1)) {
        // the k-piece must act as multiplication by a multiple of x^e, so its
        // matrix splits into an aligned square block and residual rows
        Mat rows = constraints;
        Mat t(dim, std::vector<FieldElement>(dim, zero));
        std::map<Monomial, std::vector<FieldElement>> off;
        for (int c = 0; c < dim; ++c) {
          Poly im = apply(vk, c);
          for (const auto& [tm, tc] : im.terms()) {
            Monomial shifted(n, 0);
            bool aligned = true;
            for (int i = 0; i < n; ++i) {
              shifted[i] = tm[i] - e[i];
              if (shifted[i] < 0) aligned = false;
            }
            auto it = aligned ? index.find(shifted) : index.end();
            if (it != index.end()) {
              t[it->second][c] = tc;
            } else {
              auto& row = off[tm];
              if (row.empty()) row.assign(dim, zero);
              row[c] = tc;
            }
          }
        }
        for (auto& [tm, row] : off) rows.push_back(std::move(row));

        Mat v;
        if (rows.empty()) {
          v.assign(dim, std::vector<FieldElement>(dim, zero));
          for (int i = 0; i < dim; ++i) v[i][i] = one;
        } else {
          v = field_kernel(rows, dim, zero, one);
        }
        if (v.empty()) continue;

        // shrink to the largest subspace the aligned block maps into itself
        Mat b;
        while (true) {
          int r = static_cast<int>(v.size());
          b.assign(dim, std::vector<FieldElement>(r, zero));
          for (int j = 0; j < r; ++j)
            for (int i = 0; i < dim; ++i) b[i][j] = v[j][i];
          Mat ann = field_kernel(transpose(b, r, zero), dim, zero, one);
          if (ann.empty()) break;
          Mat cond = mat_mul(ann, mat_mul(t, b, zero), zero);
          bool trivial = true;
          for (const auto& row : cond)
            for (const auto& entry : row)
              if (!entry.is_zero()) trivial = false;
          if (trivial) break;
          Mat z = field_kernel(cond, r, zero, one);
          if (z.empty()) {
            v.clear();
            break;
          }
          Mat next;
          for (const auto& zc : z) next.push_back(mat_vec(b, zc, zero));
          v = std::move(next);
        }
        if (v.empty()) continue;

        const int r = static_cast<int>(v.size());
        Mat a(r, std::vector<FieldElement>(r, zero));
        for (int j = 0; j < r; ++j) {
          std::vector<FieldElement> col = solve_columns(b, mat_vec(t, v[j], zero), field);
          for (int i = 0; i < r; ++i) a[i][j] = col[i];
        }

        for (const FieldElement& c0 : rational_roots_desc(char_poly_desc(a, field), field)) {
          Mat shift = a;
          for (int i = 0; i < r; ++i) shift[i][i] = shift[i][i] - c0;
          for (const auto& zc : field_kernel(shift, r, zero, one)) {
            std::vector<FieldElement> coords = mat_vec(b, zc, zero);
            Poly f = Poly::zero(field, n);
            for (int i = 0; i < dim; ++i) {
              if (coords[i].is_zero()) continue;
              f = f + Poly::monomial_term(field, n, basis[i], coords[i]);
            }
            if (f.is_zero()) continue;
            // exact replay against the full field keeps false positives out
            RatFunc xf = directional_derivative(x, RatFunc(f));
            if (Poly::try_divide(xf.num(), f)) push(f);
          }
        }
      }
    }
  }
  return finish();
}

}  // namespace folkit
