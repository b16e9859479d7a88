#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "folkit/errors.hpp"
#include "folkit/foliation.hpp"

using namespace folkit;

namespace {

const FieldPtr& QQ() { return NumberField::rationals(); }

FieldPtr cbrt2_field() {
  // t^3 - 2
  return NumberField::create({Rational(-2), Rational(0), Rational(0), Rational(1)});
}

FieldElement fe(long num, long den = 1) {
  return FieldElement::from_rational(QQ(), Rational(num, den));
}

Poly var(int i) { return Poly::variable(QQ(), 3, i); }

MeroForm dx(int i) { return MeroForm::differential(QQ(), 3, i); }

MeroForm one_form(const Poly& c0, const Poly& c1, const Poly& c2) {
  MeroForm w(QQ(), 3, 1);
  w.add_coeff({0}, RatFunc(c0));
  w.add_coeff({1}, RatFunc(c1));
  w.add_coeff({2}, RatFunc(c2));
  return w;
}

Eigenvalues triple(long a, long b, long c) {
  return Eigenvalues({fe(a), fe(b), fe(c)});
}

VectorField diag3(long a, long b, long c) {
  return VectorField::diagonal(QQ(), {fe(a), fe(b), fe(c)});
}

bool homogeneous_of_degree(const Poly& p, int d) {
  for (const auto& [m, c] : p.terms())
    if (total_degree(m) != d) return false;
  return true;
}

bool valid_nonneg_relation(const std::vector<Integer>& m, const std::vector<FieldElement>& vals) {
  bool nontrivial = false;
  FieldElement acc = FieldElement::zero(vals[0].field());
  for (size_t i = 0; i < vals.size(); ++i) {
    if (m[i] < 0) return false;
    if (m[i] != 0) nontrivial = true;
    acc = acc + FieldElement(vals[i].field(), {Rational(m[i])}) * vals[i];
  }
  return nontrivial && acc.is_zero();
}

template <class F>
std::string kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("logarithmic forms clear the residue denominators") {
  MeroForm w = logarithmic_form(QQ(), {fe(1), fe(1), fe(-1)});
  CHECK(w == one_form(var(1) * var(2), var(0) * var(2), -(var(0) * var(1))));

  MeroForm dropped = logarithmic_form(QQ(), {fe(1), fe(0), fe(-1)});
  CHECK(dropped.coeff({1}).is_zero());
  CHECK(dropped.coeff({0}) == RatFunc(var(1) * var(2)));

  MeroForm plane = logarithmic_form(QQ(), {fe(2), fe(3)});
  CHECK(plane.nvars() == 2);
  CHECK(plane.coeff({0}) == RatFunc(Poly::variable(QQ(), 2, 1) * Poly::constant(QQ(), 2, fe(2))));

  CHECK(kind_of([&] { logarithmic_form(QQ(), {fe(1)}); }) == "ArityMismatch");
}

TEST_CASE("tangent log pencils are tangent by construction") {
  Pencil p = tangent_log_pencil(triple(1, 2, 3));
  // kernel basis of (1,2,3) in reduced echelon convention
  CHECK(p.gen1() == logarithmic_form(QQ(), {fe(-2), fe(1), fe(0)}));
  CHECK(p.gen2() == logarithmic_form(QQ(), {fe(-3), fe(0), fe(1)}));

  VectorField x = diag3(1, 2, 3);
  CHECK(is_tangent(x, p.gen1()));
  CHECK(is_tangent(x, p.gen2()));
  CHECK(pencil_condition(p.gen1(), p.gen2()));

  std::mt19937 rng(515);
  std::uniform_int_distribution<long> pick(-6, 6);
  for (int trial = 0; trial < 10; ++trial) {
    FieldElement a = fe(pick(rng)), b = fe(pick(rng));
    if (a.is_zero() && b.is_zero()) a = fe(1);
    CHECK(is_tangent(x, p.member(a, b)));
  }

  // repeated eigenvalues are fine here, only zero ones are excluded
  Pencil q = tangent_log_pencil(triple(1, 1, -2));
  CHECK(q.gen1() == logarithmic_form(QQ(), {fe(-1), fe(1), fe(0)}));
  CHECK(is_tangent(diag3(1, 1, -2), q.gen1()));
  CHECK(is_tangent(diag3(1, 1, -2), q.gen2()));

  // over an extension the eigenvalues can be genuinely relation-free
  FieldPtr k3 = cbrt2_field();
  FieldElement t = FieldElement::generator(k3);
  Eigenvalues irr({FieldElement::one(k3), t, t * t});
  CHECK(is_strongly_diagonalizable(irr));
  Pencil r = tangent_log_pencil(irr);
  VectorField xi = VectorField::diagonal(k3, irr.values());
  CHECK(is_tangent(xi, r.gen1()));
  CHECK(is_tangent(xi, r.gen2()));

  CHECK(kind_of([&] { tangent_log_pencil(Eigenvalues({fe(1), fe(2)})); }) == "ArityMismatch");
  CHECK(kind_of([&] { tangent_log_pencil(triple(1, 0, 2)); }) == "ZeroEigenvalue");
}

TEST_CASE("coefficient ratios obey the diagonal invariance identities") {
  Eigenvalues a = triple(1, 2, 3);
  Pencil p = tangent_log_pencil(a);
  CHECK(verify_coefficient_ratio_invariance(p.gen1(), a));
  CHECK(verify_coefficient_ratio_invariance(p.gen2(), a));

  std::mt19937 rng(516);
  std::uniform_int_distribution<long> pick(-5, 5);
  for (int trial = 0; trial < 5; ++trial) {
    FieldElement s = fe(pick(rng)), u = fe(pick(rng));
    if (s.is_zero() && u.is_zero()) s = fe(2);
    CHECK(verify_coefficient_ratio_invariance(p.member(s, u), a));
  }

  // radial-type coefficients break the identity
  MeroForm bad(QQ(), 3, 1);
  bad.add_coeff({0}, RatFunc(var(0)));
  bad.add_coeff({1}, RatFunc(var(1)));
  CHECK(!verify_coefficient_ratio_invariance(bad, a));

  MeroForm mero(QQ(), 3, 1);
  mero.add_coeff({0}, RatFunc(Poly::constant(QQ(), 3, fe(1)), var(2)));
  CHECK(kind_of([&] { verify_coefficient_ratio_invariance(mero, a); }) == "NotPolynomial");
  CHECK(kind_of([&] { verify_coefficient_ratio_invariance(bad, Eigenvalues({fe(1), fe(2)})); }) ==
        "ArityMismatch");
}

TEST_CASE("normal form recognition extracts residues and units") {
  Eigenvalues a = triple(1, 2, 3);

  MeroForm form2 =
      one_form(var(1) * var(2), var(0) * var(2), -(var(0) * var(1)));
  for (int order : {3, 8}) {
    SimpleSingularityReport rep = recognize_normal_form(form2, a, order);
    CHECK(rep.matched_normal_form == SimpleSingularityReport::NormalForm::II);
    CHECK(rep.dimensional_type == 3);
    CHECK(rep.residues == std::vector<FieldElement>{fe(1), fe(1), fe(-1)});
    CHECK(*rep.unit == Poly::constant(QQ(), 3, fe(1)));
    CHECK(rep.truncation_order == order);
    CHECK(rep.form_name() == "logarithmic normal form II");
    // residues (1, 1, -1) are resonant, so not complex hyperbolic
    CHECK(!rep.complex_hyperbolic);
    REQUIRE(rep.resonance.has_value());
    CHECK(valid_nonneg_relation(*rep.resonance, rep.residues));
  }

  MeroForm form1(QQ(), 3, 1);
  form1.add_coeff({0}, RatFunc(var(1) * Poly::constant(QQ(), 3, fe(2))));
  form1.add_coeff({1}, RatFunc(-var(0)));
  SimpleSingularityReport rep1 = recognize_normal_form(form1, a, 4);
  CHECK(rep1.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(rep1.dimensional_type == 2);
  CHECK(rep1.residues == std::vector<FieldElement>{fe(2), fe(-1)});
  CHECK(rep1.form_name() == "logarithmic normal form I");
  CHECK(!rep1.complex_hyperbolic);

  // a unit multiple of form I is recognized and the unit reported
  Poly unit = Poly::constant(QQ(), 3, fe(1)) + var(2);
  MeroForm scaled(QQ(), 3, 1);
  scaled.add_coeff({0}, RatFunc(var(1) * unit));
  scaled.add_coeff({1}, RatFunc(var(0) * unit * Poly::constant(QQ(), 3, fe(-1, 2))));
  SimpleSingularityReport repu = recognize_normal_form(scaled, a, 4);
  CHECK(repu.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(repu.residues == std::vector<FieldElement>{fe(1), fe(-1, 2)});
  CHECK(*repu.unit == unit);

  // complex hyperbolic residues: same-sign pair admits no nonneg relation
  MeroForm ch(QQ(), 3, 1);
  ch.add_coeff({0}, RatFunc(var(1)));
  ch.add_coeff({1}, RatFunc(var(0) * Poly::constant(QQ(), 3, fe(1, 2))));
  SimpleSingularityReport repc = recognize_normal_form(ch, triple(1, -2, 5), 4);
  CHECK(repc.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(repc.residues == std::vector<FieldElement>{fe(1), fe(1, 2)});
  CHECK(repc.complex_hyperbolic);
  CHECK(!repc.resonance.has_value());

  // a shared factor vanishing at the origin defeats the match
  MeroForm blocked(QQ(), 3, 1);
  blocked.add_coeff({0}, RatFunc(var(1) * var(2)));
  blocked.add_coeff({1}, RatFunc(var(0) * var(2) * Poly::constant(QQ(), 3, fe(1, 2))));
  SimpleSingularityReport repb = recognize_normal_form(blocked, triple(1, -2, 5), 4);
  CHECK(repb.matched_normal_form == SimpleSingularityReport::NormalForm::None);
  CHECK(repb.form_name() == "unmatched");
  CHECK(repb.residues.empty());

  CHECK(kind_of([&] { recognize_normal_form(dx(0), a, 4); }) == "NotTangent");
  CHECK(kind_of([&] { recognize_normal_form(form2, triple(1, 1, -2), 4); }) ==
        "NotStronglyDiagonalizable");
  CHECK(kind_of([&] { recognize_normal_form(form2, triple(1, 0, 2), 4); }) ==
        "NotStronglyDiagonalizable");
  CHECK(kind_of([&] { recognize_normal_form(form2, a, 0); }) == "InvalidOrder");
  CHECK(kind_of([&] { recognize_normal_form(form2, a, 4, 0); }) == "InvalidBound");
  CHECK(kind_of([&] { recognize_normal_form(MeroForm::zero(QQ(), 3, 1), a, 4); }) == "ZeroForm");
  CHECK(kind_of([&] { recognize_normal_form(wedge(dx(0), dx(1)), a, 4); }) == "DegreeMismatch");
  MeroForm mero(QQ(), 3, 1);
  mero.add_coeff({0}, RatFunc(Poly::constant(QQ(), 3, fe(1)), var(2)));
  CHECK(kind_of([&] { recognize_normal_form(mero, a, 4); }) == "NotPolynomial");

  // tangent but not integrable: a function multiple of one log form plus
  // another log form
  MeroForm mixed = logarithmic_form(QQ(), {fe(1), fe(1), fe(-1)}) * RatFunc(var(0)) +
                   logarithmic_form(QQ(), {fe(2), fe(-1), fe(0)});
  REQUIRE(is_tangent(diag3(1, 2, 3), mixed));
  REQUIRE(!is_integrable(mixed));
  CHECK(kind_of([&] { recognize_normal_form(mixed, a, 4); }) == "NotIntegrable");
}

TEST_CASE("pencil members recognize as normal forms at every order") {
  Eigenvalues a = triple(1, 2, 3);
  Pencil p = tangent_log_pencil(a);

  // a generic member keeps all three residues, so it matches form II at
  // every order that can see the degree-two pattern
  for (int order : {3, 5, 9}) {
    SimpleSingularityReport rep = recognize_normal_form(p.member(fe(1), fe(1)), a, order);
    CHECK(rep.matched_normal_form == SimpleSingularityReport::NormalForm::II);
    CHECK(rep.residues == std::vector<FieldElement>{fe(-5), fe(1), fe(1)});

    SimpleSingularityReport mixed = recognize_normal_form(p.member(fe(1), fe(2)), a, order);
    CHECK(mixed.matched_normal_form == SimpleSingularityReport::NormalForm::II);
    CHECK(mixed.residues == std::vector<FieldElement>{fe(-8), fe(1), fe(2)});
  }

  // below the pattern degree there is nothing to certify
  CHECK(recognize_normal_form(p.member(fe(1), fe(1)), a, 2).matched_normal_form ==
        SimpleSingularityReport::NormalForm::None);

  // the generators themselves lose one residue after normalization
  SimpleSingularityReport r1 = recognize_normal_form(p.member(fe(1), fe(0)), a, 5);
  CHECK(r1.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(r1.residues == std::vector<FieldElement>{fe(-2), fe(1)});

  SimpleSingularityReport r2 = recognize_normal_form(p.member(fe(0), fe(1)), a, 5);
  CHECK(r2.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(r2.residues == std::vector<FieldElement>{fe(-3), fe(1)});

  // the coordinate planes cutting Sing(w) are invariant under the field
  VectorField x = diag3(1, 2, 3);
  for (int i = 0; i < 3; ++i) CHECK(invariant_hypersurface_check(x, var(i)));
  CHECK(invariant_hypersurface_check(x, var(0) * var(1) * var(2)));
}

TEST_CASE("simple complex hyperbolic checks read the lowest order") {
  MeroForm node(QQ(), 3, 1);
  node.add_coeff({0}, RatFunc(var(1) * Poly::constant(QQ(), 3, fe(2))));
  node.add_coeff({1}, RatFunc(var(0) * Poly::constant(QQ(), 3, fe(3))));
  SimpleSingularityReport rep = simple_ch_check(node, 50);
  CHECK(rep.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(rep.dimensional_type == 2);
  CHECK(rep.residues == std::vector<FieldElement>{fe(2), fe(3)});
  CHECK(rep.complex_hyperbolic);
  CHECK(!rep.resonance.has_value());
  CHECK(rep.resonance_bound == 50);
  CHECK(rep.truncation_order == 0);

  // higher-order noise in the remaining coefficient does not disturb it
  MeroForm noisy = node;
  noisy.add_coeff({2}, RatFunc(var(0) * var(0) * var(1)));
  SimpleSingularityReport repn = simple_ch_check(noisy, 50);
  CHECK(repn.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(repn.residues == std::vector<FieldElement>{fe(2), fe(3)});

  MeroForm saddle(QQ(), 3, 1);
  saddle.add_coeff({0}, RatFunc(var(1)));
  saddle.add_coeff({1}, RatFunc(-var(0)));
  SimpleSingularityReport reps = simple_ch_check(saddle, 50);
  CHECK(reps.matched_normal_form == SimpleSingularityReport::NormalForm::I);
  CHECK(reps.residues == std::vector<FieldElement>{fe(1), fe(-1)});
  CHECK(!reps.complex_hyperbolic);
  REQUIRE(reps.resonance.has_value());
  CHECK(*reps.resonance == std::vector<Integer>{Integer(1), Integer(1)});

  MeroForm log3 = one_form(var(1) * var(2), var(0) * var(2), -(var(0) * var(1)));
  SimpleSingularityReport rep3 = simple_ch_check(log3, 50);
  CHECK(rep3.matched_normal_form == SimpleSingularityReport::NormalForm::II);
  CHECK(rep3.dimensional_type == 3);
  CHECK(rep3.residues == std::vector<FieldElement>{fe(1), fe(1), fe(-1)});
  CHECK(!rep3.complex_hyperbolic);
  REQUIRE(rep3.resonance.has_value());
  CHECK(valid_nonneg_relation(*rep3.resonance, rep3.residues));

  // mismatches come back unmatched instead of throwing
  MeroForm radial(QQ(), 3, 1);
  radial.add_coeff({0}, RatFunc(var(0)));
  CHECK(simple_ch_check(radial, 50).matched_normal_form ==
        SimpleSingularityReport::NormalForm::None);
  radial.add_coeff({1}, RatFunc(var(1)));
  CHECK(simple_ch_check(radial, 50).matched_normal_form ==
        SimpleSingularityReport::NormalForm::None);
  MeroForm wrong2 = one_form(var(1) * var(2), var(0) * var(2), var(0) * var(0));
  CHECK(simple_ch_check(wrong2, 50).matched_normal_form ==
        SimpleSingularityReport::NormalForm::None);
  CHECK(simple_ch_check(MeroForm::zero(QQ(), 3, 1), 50).matched_normal_form ==
        SimpleSingularityReport::NormalForm::None);
  MeroForm mero(QQ(), 3, 1);
  mero.add_coeff({0}, RatFunc(Poly::constant(QQ(), 3, fe(1)), var(2)));
  CHECK(simple_ch_check(mero, 50).matched_normal_form ==
        SimpleSingularityReport::NormalForm::None);

  CHECK(kind_of([&] { simple_ch_check(wedge(dx(0), dx(1)), 50); }) == "DegreeMismatch");
  CHECK(kind_of([&] { simple_ch_check(node, 0); }) == "InvalidBound");
}

TEST_CASE("jouanolou fields annihilate their defining form") {
  JouanolouPair jp = jouanolou(QQ(), 2);
  CHECK(jp.field.component(0) == RatFunc(var(2) * var(2)));
  CHECK(jp.field.component(1) == RatFunc(var(0) * var(0)));
  CHECK(jp.field.component(2) == RatFunc(var(1) * var(1)));
  MeroForm expected = one_form(var(0) * var(0) * var(2) - var(1) * var(1) * var(1),
                               var(0) * var(1) * var(1) - var(2) * var(2) * var(2),
                               var(1) * var(2) * var(2) - var(0) * var(0) * var(0));
  CHECK(jp.form == expected);

  VectorField radial({RatFunc(var(0)), RatFunc(var(1)), RatFunc(var(2))});
  for (int m : {2, 3, 4}) {
    JouanolouPair j = jouanolou(QQ(), m);
    CHECK(interior_product(j.field, j.form).is_zero());
    CHECK(interior_product(radial, j.form).is_zero());
    CHECK(is_integrable(j.form));
    for (int i = 0; i < 3; ++i)
      CHECK(homogeneous_of_degree(j.form.coeff({i}).num(), m + 1));
  }

  CHECK(kind_of([&] { jouanolou(QQ(), 1); }) == "BadDegree");
}

TEST_CASE("invariant hypersurface checks divide exactly") {
  VectorField x = diag3(1, 2, 3);
  CHECK(invariant_hypersurface_check(x, var(0)));
  CHECK(invariant_hypersurface_check(x, var(0) * var(1) * var(1)));
  // mixed monomials of one weight still work
  CHECK(invariant_hypersurface_check(x, var(0) * var(0) + var(1)));
  CHECK(!invariant_hypersurface_check(x, var(0) + var(1)));
  CHECK(!invariant_hypersurface_check(x, var(0) + var(2)));

  VectorField bent({RatFunc(var(0) + var(1) * var(1)),
                    RatFunc(var(1) * Poly::constant(QQ(), 3, fe(2))), RatFunc(var(2))});
  CHECK(invariant_hypersurface_check(bent, var(1)));
  CHECK(invariant_hypersurface_check(bent, var(2)));
  CHECK(!invariant_hypersurface_check(bent, var(0)));

  JouanolouPair jp = jouanolou(QQ(), 2);
  CHECK(!invariant_hypersurface_check(jp.field, var(0)));

  CHECK(kind_of([&] { invariant_hypersurface_check(x, Poly::zero(QQ(), 3)); }) == "ZeroPoly");
  CHECK(kind_of([&] { invariant_hypersurface_check(x, Poly::constant(QQ(), 3, fe(7))); }) ==
        "ConstantPoly");
  VectorField mero({RatFunc(Poly::constant(QQ(), 3, fe(1)), var(0)), RatFunc(var(1)),
                    RatFunc(var(2))});
  CHECK(kind_of([&] { invariant_hypersurface_check(mero, var(0)); }) == "NotPolynomial");
  CHECK(kind_of([&] { invariant_hypersurface_check(x, Poly::variable(QQ(), 2, 0)); }) ==
        "ArityMismatch");
}

TEST_CASE("invariant hypersurface search enumerates the ansatz") {
  std::vector<Poly> planes = invariant_hypersurface_search(diag3(1, 2, 3), 1);
  CHECK(planes == std::vector<Poly>{var(0), var(1), var(2)});

  // a diagonal field keeps every monomial invariant
  std::vector<Poly> quads = invariant_hypersurface_search(diag3(1, 2, 3), 2);
  CHECK(quads.size() == 9);
  for (const Poly& f : quads) CHECK(invariant_hypersurface_check(diag3(1, 2, 3), f));

  std::vector<Poly> res = invariant_hypersurface_search(diag3(1, 1, -2), 3);
  auto contains = [&](const Poly& f) {
    for (const Poly& g : res)
      if (g == f) return true;
    return false;
  };
  CHECK(contains(var(0)));
  CHECK(contains(var(1)));
  CHECK(contains(var(2)));
  Poly fiber = var(0) * var(1) * var(2);
  CHECK(contains(fiber));
  CHECK(is_first_integral(diag3(1, 1, -2), RatFunc(fiber)));

  // Jouanolou fields leave no low-degree homogeneous surface invariant
  for (int m : {2, 3}) {
    JouanolouPair jp = jouanolou(QQ(), m);
    CHECK(invariant_hypersurface_search(jp.field, 2).empty());
  }

  // mixed-degree components exercise the graded constraints
  VectorField bent({RatFunc(var(0) + var(1) * var(1)),
                    RatFunc(var(1) * Poly::constant(QQ(), 3, fe(2))), RatFunc(var(2))});
  std::vector<Poly> lin = invariant_hypersurface_search(bent, 1);
  CHECK(lin == std::vector<Poly>{var(1), var(2)});
  std::vector<Poly> deep = invariant_hypersurface_search(bent, 2);
  std::vector<Poly> expect = {var(1), var(2), var(1) * var(2), var(1) * var(1),
                              var(2) * var(2)};
  std::sort(expect.begin(), expect.end(), [](const Poly& a, const Poly& b) {
    int da = total_degree(a.leading_monomial()), db = total_degree(b.leading_monomial());
    if (da != db) return da < db;
    return a.to_string() < b.to_string();
  });
  CHECK(deep == expect);

  // a nilpotent off-diagonal block keeps only part of the eigenplane
  VectorField jordan({RatFunc(var(0) + var(1)), RatFunc(var(1)), RatFunc(var(2))});
  std::vector<Poly> shear = invariant_hypersurface_search(jordan, 1);
  CHECK(shear == std::vector<Poly>{var(1), var(2)});

  // scaling the variables by a single degree-two piece
  VectorField cone({RatFunc(var(0) * var(0)), RatFunc(var(0) * var(1)),
                    RatFunc(var(0) * var(2))});
  std::vector<Poly> rays = invariant_hypersurface_search(cone, 1);
  CHECK(rays == std::vector<Poly>{var(0), var(1), var(2)});

  CHECK(kind_of([&] { invariant_hypersurface_search(diag3(1, 2, 3), 0); }) == "InvalidBound");
  CHECK(kind_of([&] { invariant_hypersurface_search(VectorField(QQ(), 3), 1); }) == "ZeroField");
  VectorField mero({RatFunc(Poly::constant(QQ(), 3, fe(1)), var(0)), RatFunc(var(1)),
                    RatFunc(var(2))});
  CHECK(kind_of([&] { invariant_hypersurface_search(mero, 1); }) == "NotPolynomial");
}
