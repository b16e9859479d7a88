#include "folkit/pencil.hpp"

#include "folkit/errors.hpp"

namespace folkit {

namespace {

void require_degree1(const MeroForm& w, const char* where) {
  if (w.degree() != 1)
    throw PreconditionError("DegreeMismatch", std::string(where) + " expects 1-forms");
}

// -i_Y(dw) for Y = (1/c) d/dx_j, with x_j the first or last variable whose
// coefficient c of w is nonzero.  Satisfies dw = theta ^ w for integrable w
// because i_Y w = 1.
MeroForm single_form_theta(const MeroForm& w, YVariableChoice choice) {
  const auto& terms = w.coefficients();
  if (terms.empty())
    throw PreconditionError("ZeroForm", "connection form of the zero form");
  MeroForm::IndexSet idx =
      choice == YVariableChoice::First ? terms.begin()->first : terms.rbegin()->first;
  RatFunc c = w.coeff(idx);
  std::vector<RatFunc> comps(w.nvars(), RatFunc::zero(w.field(), w.nvars()));
  comps[idx[0]] = c.inverse();
  return -interior_product(VectorField(std::move(comps)), ext_derivative(w));
}

FieldElement fe_zero(const Pencil& p) { return FieldElement::zero(p.field()); }

}  // namespace

bool pencil_condition(const MeroForm& w1, const MeroForm& w2) {
  require_compatible(w1, w2, "pencil_condition");
  require_degree1(w1, "pencil_condition");
  require_degree1(w2, "pencil_condition");
  if (w1.nvars() < 3)
    throw PreconditionError("TooFewVariables", "the pencil condition lives in 3 or more variables");
  MeroForm mixed = wedge(w1, ext_derivative(w2)) + wedge(w2, ext_derivative(w1));
  return mixed.is_zero();
}

std::pair<RatFunc, RatFunc> decompose_over_pair(const MeroForm& w3, const MeroForm& w1,
                                                const MeroForm& w2) {
  require_compatible(w1, w2, "decompose_over_pair");
  require_compatible(w3, w1, "decompose_over_pair");
  require_degree1(w1, "decompose_over_pair");
  require_degree1(w2, "decompose_over_pair");
  require_degree1(w3, "decompose_over_pair");

  MeroForm w12 = wedge(w1, w2);
  if (w12.is_zero())
    throw PreconditionError("DegenerateGenerators", "decomposition base pair is dependent");
  // If w3 = l1 w1 + l2 w2 then w3 ^ w2 = l1 (w1 ^ w2) coefficientwise, so
  // the first nonzero base coefficient determines both factors.
  const auto& [idx, base] = *w12.coefficients().begin();
  RatFunc l1 = wedge(w3, w2).coeff(idx) / base;
  RatFunc l2 = -(wedge(w3, w1).coeff(idx) / base);
  MeroForm residual = w3 - w1 * l1 - w2 * l2;
  if (!residual.is_zero())
    throw PreconditionError("NotCoplanar", "form does not lie in the span of the pair");
  return {l1, l2};
}

MeroForm connection_form_for(const MeroForm& g1, const MeroForm& g2, YVariableChoice choice) {
  MeroForm theta1 = single_form_theta(g1, choice);
  MeroForm theta2 = single_form_theta(g2, choice);
  MeroForm diff = theta1 - theta2;
  MeroForm theta = theta1;
  if (!diff.is_zero()) {
    std::pair<RatFunc, RatFunc> lambda;
    try {
      lambda = decompose_over_pair(diff, g1, g2);
    } catch (const Error& e) {
      throw CertificateError(std::string("connection form construction: ") + e.what());
    }
    theta = theta1 - g1 * lambda.first;
  }
  if (ext_derivative(g1) != wedge(theta, g1) || ext_derivative(g2) != wedge(theta, g2))
    throw CertificateError("connection form does not reproduce both derivatives");
  return theta;
}

Pencil::Pencil(MeroForm gen1, MeroForm gen2) : gen1_(std::move(gen1)), gen2_(std::move(gen2)) {
  require_compatible(gen1_, gen2_, "Pencil");
  require_degree1(gen1_, "Pencil");
  require_degree1(gen2_, "Pencil");
  if (gen1_.nvars() < 3)
    throw PreconditionError("TooFewVariables", "pencils live in 3 or more variables");
  if (!gen1_.is_polynomial() || !gen2_.is_polynomial())
    throw PreconditionError("NotPolynomial", "pencil generators must have polynomial coefficients");
  if (wedge(gen1_, gen2_).is_zero())
    throw PreconditionError("DegeneratePencil", "generators are linearly dependent");
  if (!is_integrable(gen1_) || !is_integrable(gen2_))
    throw PreconditionError("NotIntegrable", "pencil generators must be integrable");
  if (!pencil_condition(gen1_, gen2_))
    throw PreconditionError("PencilConditionFailed",
                            "generators do not satisfy the pencil condition");
  if (!poly_gcd(form_content(gen1_), form_content(gen2_)).is_one())
    throw PreconditionError("NotCoprime", "generator contents share a common factor");
  theta_ = connection_form_for(gen1_, gen2_, YVariableChoice::First);
}

MeroForm Pencil::member_raw(const FieldElement& a, const FieldElement& b) const {
  require_same_field(field(), a.field(), "Pencil::member_raw");
  require_same_field(field(), b.field(), "Pencil::member_raw");
  if (a.is_zero() && b.is_zero())
    throw PreconditionError("ZeroParameters", "member parameters must not both vanish");
  RatFunc ra = RatFunc::constant(field(), nvars(), a);
  RatFunc rb = RatFunc::constant(field(), nvars(), b);
  return gen1_ * ra + gen2_ * rb;
}

MeroForm Pencil::member(const FieldElement& a, const FieldElement& b) const {
  return remove_codim1(member_raw(a, b));
}

Poly Pencil::member_codim1_locus(const FieldElement& a, const FieldElement& b) const {
  require_same_field(field(), a.field(), "Pencil::member_codim1_locus");
  require_same_field(field(), b.field(), "Pencil::member_codim1_locus");
  if (a.is_zero() && b.is_zero())
    throw PreconditionError("ZeroParameters", "member parameters must not both vanish");
  MeroForm s1 = remove_codim1(gen1_);
  MeroForm s2 = remove_codim1(gen2_);
  RatFunc ra = RatFunc::constant(field(), nvars(), a);
  RatFunc rb = RatFunc::constant(field(), nvars(), b);
  return form_content(s1 * ra + s2 * rb);
}

MeroForm Pencil::axis_2form() const { return remove_codim1(wedge(gen1_, gen2_)); }

MeroForm Pencil::curvature() const { return ext_derivative(theta_); }

RatFunc Pencil::curvature_factor() const {
  MeroForm k = curvature();
  MeroForm base = wedge(gen1_, gen2_);
  if (k.is_zero()) return RatFunc::zero(field(), nvars());
  const auto& [idx, c] = *base.coefficients().begin();
  RatFunc alpha = k.coeff(idx) / c;
  if (k != base * alpha)
    throw CertificateError("curvature is not a multiple of the generator wedge");
  return alpha;
}

Pencil pencil_from_three(const MeroForm& w1, const MeroForm& w2, const MeroForm& w3,
                         const MeroForm& eta) {
  require_compatible(w1, w2, "pencil_from_three");
  require_compatible(w1, w3, "pencil_from_three");
  require_compatible(w1, eta, "pencil_from_three");
  require_degree1(w1, "pencil_from_three");
  require_degree1(w2, "pencil_from_three");
  require_degree1(w3, "pencil_from_three");
  if (eta.degree() != 2)
    throw PreconditionError("DegreeMismatch", "the common tangent form must have degree 2");
  if (eta.is_zero()) throw PreconditionError("ZeroForm", "the common tangent form is zero");

  // Work with the canonical coprime representatives of the three foliations.
  MeroForm f1 = remove_codim1(w1);
  MeroForm f2 = remove_codim1(w2);
  MeroForm f3 = remove_codim1(w3);
  for (const MeroForm* f : {&f1, &f2, &f3}) {
    if (!is_integrable(*f))
      throw PreconditionError("NotIntegrable", "all three forms must be integrable");
    if (!wedge(eta, *f).is_zero())
      throw PreconditionError("NotTangentToEta", "a form is not tangent to the given 2-form");
  }
  if (wedge(f1, f2).is_zero() || wedge(f1, f3).is_zero() || wedge(f2, f3).is_zero())
    throw PreconditionError("DegenerateGenerators", "the three forms must be pairwise independent");

  auto [l1, l2] = decompose_over_pair(f3, f1, f2);
  // Scale the pair so both factors turn polynomial: with l_i = psi_i/phi_i
  // in lowest terms and phi = lcm(phi1, phi2), the generators become
  // (phi/phi1) psi1 w1 and (phi/phi2) psi2 w2, whose sum is phi * w3.
  Poly phi = poly_lcm(l1.den(), l2.den());
  Poly s1 = *Poly::try_divide(phi, l1.den()) * l1.num();
  Poly s2 = *Poly::try_divide(phi, l2.den()) * l2.num();
  MeroForm g1 = f1 * RatFunc(s1);
  MeroForm g2 = f2 * RatFunc(s2);
  if (g1.is_zero() || g2.is_zero() || wedge(g1, g2).is_zero())
    throw PreconditionError("DegeneratePencil", "the scaled generators are dependent");
  return Pencil(std::move(g1), std::move(g2));
}

std::string PencilClassification::case_name() const {
  switch (kind) {
    case Case::FlatMeromorphic:
      return "flat, closed meromorphic connection form";
    case Case::FlatHolomorphicFirstIntegral:
      return "flat, exact holomorphic connection form";
    case Case::ConstantCurvatureFactor:
      return "constant curvature factor";
    case Case::NonconstantCurvatureFactor:
      return "nonconstant curvature factor";
  }
  return "";
}

namespace {

// Radial primitive of a closed polynomial 1-form: each term c x^m dx_i
// integrates to c x^m x_i / (|m| + 1).  Closedness makes d of the result
// reproduce the form exactly.
Poly polynomial_primitive(const MeroForm& theta) {
  Poly h = Poly::zero(theta.field(), theta.nvars());
  for (const auto& [idx, c] : theta.coefficients())
    for (const auto& [m, a] : c.num().terms()) {
      Monomial mm = m;
      mm[idx[0]] += 1;
      Rational scale(1, total_degree(m) + 1);
      h.add_term(mm, a * FieldElement::from_rational(theta.field(), scale));
    }
  return h;
}

bool tangent_to_axis(const Pencil& p, const RatFunc& phi) {
  MeroForm dphi = ext_derivative(MeroForm::function(phi));
  return wedge(dphi, wedge(p.gen1(), p.gen2())).is_zero();
}

RatFunc require_axis_integral(const Pencil& p, const RatFunc& phi, const char* what) {
  if (phi.is_constant())
    throw CertificateError(std::string(what) + ": candidate first integral is constant");
  if (!tangent_to_axis(p, phi))
    throw CertificateError(std::string(what) + ": candidate is not constant on the axis leaves");
  return phi;
}

}  // namespace

PencilClassification classify(const Pencil& p) {
  PencilClassification out{PencilClassification::Case::FlatMeromorphic,
                           p.theta(),
                           RatFunc::zero(p.field(), p.nvars()),
                           {},
                           {},
                           {},
                           {},
                           {},
                           {},
                           {},
                           {}};
  MeroForm curvature = p.curvature();

  if (curvature.is_zero()) {
    if (p.theta().is_polynomial()) {
      out.kind = PencilClassification::Case::FlatHolomorphicFirstIntegral;
      Poly h = polynomial_primitive(p.theta());
      if (ext_derivative(MeroForm::function(RatFunc(h))) != p.theta())
        throw CertificateError("primitive does not differentiate back to the connection form");
      out.theta_primitive = h;
    }
    return out;
  }

  out.alpha = p.curvature_factor();
  if (out.alpha.is_constant()) {
    out.kind = PencilClassification::Case::ConstantCurvatureFactor;
    std::pair<RatFunc, RatFunc> mu;
    try {
      mu = decompose_over_pair(p.theta(), p.gen1(), p.gen2());
    } catch (const Error& e) {
      throw CertificateError(std::string("connection form decomposition: ") + e.what());
    }
    out.mu1 = mu.first;
    out.mu2 = mu.second;
    FieldElement one = FieldElement::one(p.field());
    if (mu.first.is_zero()) {
      // theta = mu2 * gen2 forces d(gen2) = 0: the second generator itself
      // is the closed member.
      out.closed_member_params = std::make_pair(fe_zero(p), one);
      out.closed_member = p.gen2();
    } else {
      RatFunc ratio = mu.second / mu.first;
      if (!ratio.is_constant()) {
        out.axis_first_integral = require_axis_integral(p, ratio, "constant factor case");
        return out;
      }
      out.closed_member_params = std::make_pair(one, ratio.constant_value());
      out.closed_member = p.member_raw(one, ratio.constant_value());
    }
    if (!ext_derivative(*out.closed_member).is_zero())
      throw CertificateError("closed member certificate fails d = 0");
    return out;
  }

  out.kind = PencilClassification::Case::NonconstantCurvatureFactor;
  MeroForm dalpha = ext_derivative(MeroForm::function(out.alpha));
  RatFunc half = RatFunc::from_rational(p.field(), p.nvars(), Rational(1, 2));
  MeroForm shifted = dalpha * (half / out.alpha) + p.theta();
  std::pair<RatFunc, RatFunc> k;
  try {
    k = decompose_over_pair(shifted, p.gen1(), p.gen2());
  } catch (const Error& e) {
    throw CertificateError(std::string("curvature factor decomposition: ") + e.what());
  }
  out.k1 = k.first;
  out.k2 = k.second;
  RatFunc phi1 = k.first * k.first / out.alpha;
  RatFunc phi2 = k.second * k.second / out.alpha;
  if (!phi1.is_constant())
    out.axis_first_integral = require_axis_integral(p, phi1, "nonconstant factor case");
  else if (!phi2.is_constant())
    out.axis_first_integral = require_axis_integral(p, phi2, "nonconstant factor case");
  else
    throw CertificateError("both candidate axis first integrals are constant");
  return out;
}

bool verify_axis_invariant_hypersurface(const Pencil& p, const Poly& f) {
  if (f.is_zero())
    throw PreconditionError("ZeroPolynomial", "invariance test needs a nonzero polynomial");
  MeroForm df = ext_derivative(MeroForm::function(RatFunc(f)));
  MeroForm obstruction = wedge(df, p.axis_2form());
  for (const auto& [idx, c] : obstruction.coefficients()) {
    if (!c.is_polynomial())
      throw PreconditionError("NotPolynomial", "axis form is not polynomial");
    if (!Poly::try_divide(c.num(), f).has_value()) return false;
  }
  return true;
}

}  // namespace folkit
