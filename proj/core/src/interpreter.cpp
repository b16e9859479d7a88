#include "folkit/interpreter.hpp"

#include <chrono>
#include <limits>
#include <map>
#include <sstream>
#include <variant>

#include "json.hpp"

#include "folkit/blowup.hpp"
#include "folkit/errors.hpp"
#include "folkit/foliation.hpp"
#include "folkit/forms.hpp"
#include "folkit/pencil.hpp"
#include "folkit/resonance.hpp"

namespace folkit {

namespace {

using nlohmann::ordered_json;

// The command line fixes the ambient dimension.
constexpr int kVars = 3;

using Value = std::variant<FieldElement, RatFunc, MeroForm, VectorField>;

struct Env {
  FieldPtr field = NumberField::rationals();
  std::string generator;
  std::map<std::string, Value> bindings;
};

[[noreturn]] void type_error(const std::string& msg) {
  throw PreconditionError("TypeMismatch", msg);
}

RatFunc to_ratfunc(const Value& v, const Env& env, const std::string& where) {
  if (const auto* c = std::get_if<FieldElement>(&v))
    return RatFunc::constant(env.field, kVars, *c);
  if (const auto* f = std::get_if<RatFunc>(&v)) return *f;
  type_error(where + " needs a scalar or a function");
}

MeroForm to_form(const Value& v, const Env& env, const std::string& where) {
  if (const auto* w = std::get_if<MeroForm>(&v)) return *w;
  if (std::holds_alternative<VectorField>(v))
    type_error(where + " needs a differential form, not a vector field");
  return MeroForm::function(to_ratfunc(v, env, where));
}

VectorField as_field(const Value& v, const std::string& where) {
  if (const auto* x = std::get_if<VectorField>(&v)) return *x;
  type_error(where + " needs a vector field");
}

FieldElement as_scalar(const Value& v, const std::string& where) {
  if (const auto* c = std::get_if<FieldElement>(&v)) return *c;
  if (const auto* f = std::get_if<RatFunc>(&v))
    if (f->is_constant()) return f->constant_value();
  type_error(where + " needs a scalar");
}

long as_integer(const Value& v, const std::string& where) {
  FieldElement c = as_scalar(v, where);
  if (!c.is_rational()) type_error(where + " needs an integer");
  Rational q = c.rational_value();
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) type_error(where + " needs an integer");
  return q.get_num().get_si();
}

Value eval(const Expr& e, const Env& env);

Value eval_add_sub(const Expr& e, const Env& env) {
  Value l = eval(*e.args[0], env);
  Value r = eval(*e.args[1], env);
  bool add = e.kind == Expr::Kind::Add;
  if (std::holds_alternative<VectorField>(l) || std::holds_alternative<VectorField>(r)) {
    if (!std::holds_alternative<VectorField>(l) || !std::holds_alternative<VectorField>(r))
      type_error("vector fields only add to vector fields");
    const auto& a = std::get<VectorField>(l);
    const auto& b = std::get<VectorField>(r);
    return add ? a + b : a - b;
  }
  if (std::holds_alternative<MeroForm>(l) || std::holds_alternative<MeroForm>(r)) {
    MeroForm a = to_form(l, env, "addition");
    MeroForm b = to_form(r, env, "addition");
    return add ? a + b : a - b;
  }
  if (std::holds_alternative<RatFunc>(l) || std::holds_alternative<RatFunc>(r)) {
    RatFunc a = to_ratfunc(l, env, "addition");
    RatFunc b = to_ratfunc(r, env, "addition");
    return add ? a + b : a - b;
  }
  const auto& a = std::get<FieldElement>(l);
  const auto& b = std::get<FieldElement>(r);
  return add ? a + b : a - b;
}

Value eval_mul(const Expr& e, const Env& env) {
  Value l = eval(*e.args[0], env);
  Value r = eval(*e.args[1], env);
  bool lv = std::holds_alternative<VectorField>(l), rv = std::holds_alternative<VectorField>(r);
  if (lv && rv) type_error("vector fields do not multiply");
  if (lv || rv) {
    const VectorField& x = std::get<VectorField>(lv ? l : r);
    return x * to_ratfunc(lv ? r : l, env, "scaling a vector field");
  }
  bool lf = std::holds_alternative<MeroForm>(l), rf = std::holds_alternative<MeroForm>(r);
  if (lf && rf) {
    // a genuine product of forms is a wedge; 0-forms act as functions
    const MeroForm& a = std::get<MeroForm>(l);
    const MeroForm& b = std::get<MeroForm>(r);
    if (a.degree() > 0 && b.degree() > 0) type_error("use ^^ to multiply two forms");
    if (a.degree() == 0) return b * a.coeff({});
    return a * b.coeff({});
  }
  if (lf || rf) {
    const MeroForm& w = std::get<MeroForm>(lf ? l : r);
    return w * to_ratfunc(lf ? r : l, env, "scaling a form");
  }
  if (std::holds_alternative<RatFunc>(l) || std::holds_alternative<RatFunc>(r))
    return to_ratfunc(l, env, "multiplication") * to_ratfunc(r, env, "multiplication");
  return std::get<FieldElement>(l) * std::get<FieldElement>(r);
}

Value eval_div(const Expr& e, const Env& env) {
  Value l = eval(*e.args[0], env);
  Value r = eval(*e.args[1], env);
  if (std::holds_alternative<FieldElement>(l) && std::holds_alternative<FieldElement>(r))
    return std::get<FieldElement>(l) / std::get<FieldElement>(r);
  RatFunc den = to_ratfunc(r, env, "division");
  if (const auto* x = std::get_if<VectorField>(&l)) return *x * den.inverse();
  if (const auto* w = std::get_if<MeroForm>(&l)) return *w * den.inverse();
  return to_ratfunc(l, env, "division") / den;
}

Value eval_call(const Expr& e, const Env& env) {
  if (e.name == "d") return ext_derivative(to_form(eval(*e.args[0], env), env, "d()"));
  if (e.name == "ip")
    return interior_product(as_field(eval(*e.args[0], env), "ip()"),
                            to_form(eval(*e.args[1], env), env, "ip()"));
  if (e.name == "vf") {
    std::vector<RatFunc> comps;
    for (const ExprPtr& arg : e.args) comps.push_back(to_ratfunc(eval(*arg, env), env, "vf()"));
    return VectorField(std::move(comps));
  }
  std::vector<FieldElement> alphas;
  for (const ExprPtr& arg : e.args) alphas.push_back(as_scalar(eval(*arg, env), "diag()"));
  return VectorField::diagonal(env.field, alphas);
}

Value eval(const Expr& e, const Env& env) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return FieldElement::from_rational(env.field, Rational(e.number));
    case Expr::Kind::Name: {
      if (!env.generator.empty() && e.name == env.generator)
        return FieldElement::generator(env.field);
      auto it = env.bindings.find(e.name);
      if (it == env.bindings.end())
        throw Error(ErrorClass::Usage, "UnboundName", "unknown name '" + e.name + "'");
      return it->second;
    }
    case Expr::Kind::Variable:
      return RatFunc::variable(env.field, kVars, e.index);
    case Expr::Kind::Negate:
      return std::visit([](const auto& x) -> Value { return -x; }, eval(*e.args[0], env));
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return eval_add_sub(e, env);
    case Expr::Kind::Mul:
      return eval_mul(e, env);
    case Expr::Kind::Div:
      return eval_div(e, env);
    case Expr::Kind::Wedge:
      return wedge(to_form(eval(*e.args[0], env), env, "wedge"),
                   to_form(eval(*e.args[1], env), env, "wedge"));
    case Expr::Kind::Power: {
      Value base = eval(*e.args[0], env);
      if (const auto* c = std::get_if<FieldElement>(&base)) {
        FieldElement out = FieldElement::one(c->field());
        for (int i = 0; i < e.exponent; ++i) out = out * *c;
        return out;
      }
      if (const auto* f = std::get_if<RatFunc>(&base)) return f->pow(e.exponent);
      type_error("powers apply to scalars and functions");
    }
    case Expr::Kind::Call:
      return eval_call(e, env);
  }
  type_error("unreachable expression kind");
}

std::optional<long> flag_value(const Statement& s, const char* name) {
  for (const CommandFlag& f : s.flags)
    if (f.name == name) return f.value;
  return std::nullopt;
}

bool has_flag(const Statement& s, const char* name) {
  for (const CommandFlag& f : s.flags)
    if (f.name == name) return true;
  return false;
}

int int_flag(const Statement& s, const char* name, int fallback) {
  std::optional<long> v = flag_value(s, name);
  if (!v) return fallback;
  if (*v > std::numeric_limits<int>::max() || *v < std::numeric_limits<int>::min())
    throw PreconditionError("InvalidArgument", std::string("--") + name + " value out of range");
  return static_cast<int>(*v);
}

ordered_json scalars_json(const std::vector<FieldElement>& vals) {
  ordered_json out = ordered_json::array();
  for (const FieldElement& v : vals) out.push_back(v.to_string());
  return out;
}

ordered_json integers_json(const std::vector<Integer>& vals) {
  ordered_json out = ordered_json::array();
  for (const Integer& v : vals) out.push_back(v.get_str());
  return out;
}

Eigenvalues eval_eigenvalues(const Statement& s, size_t from, const Env& env) {
  std::vector<FieldElement> vals;
  for (size_t i = from; i < s.args.size(); ++i)
    vals.push_back(as_scalar(eval(*s.args[i], env), s.name));
  return Eigenvalues(std::move(vals));
}

// Shared rendering of a normal form report.
void fill_singularity_report(ordered_json& j, const SimpleSingularityReport& rep) {
  j["normal_form"] = rep.form_name();
  j["matched"] = rep.matched_normal_form != SimpleSingularityReport::NormalForm::None;
  j["dimensional_type"] = rep.dimensional_type;
  j["residues"] = scalars_json(rep.residues);
  if (rep.unit)
    j["unit"] = rep.unit->to_string();
  else
    j["unit"] = nullptr;
  j["complex_hyperbolic"] = rep.complex_hyperbolic;
  if (rep.resonance)
    j["resonance_witness"] = integers_json(*rep.resonance);
  else
    j["resonance_witness"] = nullptr;
  j["resonance_bound"] = rep.resonance_bound;
  j["truncation_order"] = rep.truncation_order;
}

ordered_json exec_command(const Statement& s, Env& env, const RunOptions& opts) {
  ordered_json j;
  j["command"] = s.name;
  auto arg = [&](size_t i) { return eval(*s.args[i], env); };

  if (s.name == "check-tangent") {
    VectorField x = as_field(arg(0), s.name);
    MeroForm w = to_form(arg(1), env, s.name);
    j["vector_field"] = x.to_string();
    j["form"] = w.to_string();
    j["tangent"] = is_tangent(x, w);
  } else if (s.name == "check-integrable") {
    MeroForm w = to_form(arg(0), env, s.name);
    j["form"] = w.to_string();
    j["integrable"] = is_integrable(w);
  } else if (s.name == "remove-codim1") {
    MeroForm w = to_form(arg(0), env, s.name);
    j["form"] = w.to_string();
    j["content"] = form_content(clear_denominators(w)).to_string();
    j["result"] = remove_codim1(w).to_string();
  } else if (s.name == "resonance") {
    Eigenvalues a = eval_eigenvalues(s, 0, env);
    j["eigenvalues"] = scalars_json(a.values());
    if (has_flag(s, "strong")) {
      j["mode"] = "strong";
      IntegerRelationBasis basis = strong_resonances(a);
      j["strongly_diagonalizable"] = basis.empty();
      ordered_json rels = ordered_json::array();
      for (const auto& rel : basis.relations) rels.push_back(integers_json(rel));
      j["relations"] = rels;
    } else {
      int bound = int_flag(s, "bound", opts.bound);
      j["mode"] = "nonneg";
      j["bound"] = bound;
      auto witness = nonneg_resonance_search(a, bound);
      j["found"] = witness.has_value();
      if (witness) {
        j["witness"] = integers_json(*witness);
      } else {
        j["witness"] = nullptr;
        // the verdict is bound-qualified, never an absolute claim
        j["note"] = "no resonance up to bound " + std::to_string(bound);
      }
    }
  } else if (s.name == "blowup") {
    bool punctual = has_flag(s, "punctual");
    int chart_idx = int_flag(s, "chart", 0);
    BlowupChart chart = punctual ? BlowupChart::punctual(chart_idx)
                                 : BlowupChart::monoidal(int_flag(s, "axis", 0), chart_idx);
    j["kind"] = punctual ? "punctual" : "monoidal";
    if (!punctual) j["axis"] = chart.axis;
    j["chart"] = chart.chart;
    Value v = arg(0);
    if (const auto* x = std::get_if<VectorField>(&v)) {
      auto res = transform_vector_field(*x, chart);
      j["object"] = "vector_field";
      j["input"] = x->to_string();
      j["result"] = res.object.to_string();
      j["exceptional_multiplicity"] = res.exceptional_multiplicity;
      j["dicritical"] = res.dicritical;
    } else {
      MeroForm w = to_form(v, env, s.name);
      auto res = transform_form(w, chart);
      j["object"] = "form";
      j["input"] = w.to_string();
      j["result"] = res.object.to_string();
      j["exceptional_multiplicity"] = res.exceptional_multiplicity;
      j["dicritical"] = res.dicritical;
    }
  } else if (s.name == "pencil-check") {
    MeroForm w1 = to_form(arg(0), env, s.name);
    MeroForm w2 = to_form(arg(1), env, s.name);
    j["form1"] = w1.to_string();
    j["form2"] = w2.to_string();
    bool independent = !wedge(w1, w2).is_zero();
    bool int1 = is_integrable(w1);
    bool int2 = is_integrable(w2);
    bool condition = pencil_condition(w1, w2);
    j["independent"] = independent;
    j["integrable1"] = int1;
    j["integrable2"] = int2;
    j["pencil_condition"] = condition;
    j["verdict"] = independent && int1 && int2 && condition;
  } else if (s.name == "pencil-theta" || s.name == "pencil-curvature" ||
             s.name == "pencil-classify") {
    Pencil p(to_form(arg(0), env, s.name), to_form(arg(1), env, s.name));
    j["gen1"] = p.gen1().to_string();
    j["gen2"] = p.gen2().to_string();
    if (s.name == "pencil-theta") {
      j["theta"] = p.theta().to_string();
    } else if (s.name == "pencil-curvature") {
      j["theta"] = p.theta().to_string();
      j["curvature"] = p.curvature().to_string();
      RatFunc alpha = p.curvature_factor();
      j["flat"] = alpha.is_zero();
      j["curvature_factor"] = alpha.to_string();
    } else {
      PencilClassification c = classify(p);
      switch (c.kind) {
        case PencilClassification::Case::FlatMeromorphic:
          j["case"] = "FlatMeromorphic";
          break;
        case PencilClassification::Case::FlatHolomorphicFirstIntegral:
          j["case"] = "FlatHolomorphicFirstIntegral";
          break;
        case PencilClassification::Case::ConstantCurvatureFactor:
          j["case"] = "ConstantCurvatureFactor";
          break;
        case PencilClassification::Case::NonconstantCurvatureFactor:
          j["case"] = "NonconstantCurvatureFactor";
          break;
      }
      j["description"] = c.case_name();
      j["theta"] = c.theta.to_string();
      j["alpha"] = c.alpha.to_string();
      if (c.theta_primitive) j["theta_primitive"] = c.theta_primitive->to_string();
      if (c.mu1) j["mu1"] = c.mu1->to_string();
      if (c.mu2) j["mu2"] = c.mu2->to_string();
      if (c.closed_member_params) {
        j["closed_member_params"] = ordered_json::array(
            {c.closed_member_params->first.to_string(), c.closed_member_params->second.to_string()});
      }
      if (c.closed_member) j["closed_member"] = c.closed_member->to_string();
      if (c.k1) j["k1"] = c.k1->to_string();
      if (c.k2) j["k2"] = c.k2->to_string();
      if (c.axis_first_integral) j["axis_first_integral"] = c.axis_first_integral->to_string();
    }
  } else if (s.name == "pencil-from-three") {
    MeroForm w1 = to_form(arg(0), env, s.name);
    MeroForm w2 = to_form(arg(1), env, s.name);
    MeroForm w3 = to_form(arg(2), env, s.name);
    MeroForm eta = to_form(arg(3), env, s.name);
    Pencil p = pencil_from_three(w1, w2, w3, eta);
    j["gen1"] = p.gen1().to_string();
    j["gen2"] = p.gen2().to_string();
    j["theta"] = p.theta().to_string();
  } else if (s.name == "log-pencil") {
    Eigenvalues a = eval_eigenvalues(s, 0, env);
    j["eigenvalues"] = scalars_json(a.values());
    Pencil p = tangent_log_pencil(a);
    j["gen1"] = p.gen1().to_string();
    j["gen2"] = p.gen2().to_string();
    j["theta"] = p.theta().to_string();
  } else if (s.name == "normal-form") {
    MeroForm w = to_form(arg(0), env, s.name);
    Eigenvalues a = eval_eigenvalues(s, 1, env);
    int order = int_flag(s, "order", opts.order);
    int bound = int_flag(s, "bound", opts.bound);
    j["form"] = w.to_string();
    j["eigenvalues"] = scalars_json(a.values());
    j["order"] = order;
    fill_singularity_report(j, recognize_normal_form(w, a, order, bound));
  } else if (s.name == "ch-check") {
    MeroForm w = to_form(arg(0), env, s.name);
    int bound = int_flag(s, "bound", opts.bound);
    j["form"] = w.to_string();
    fill_singularity_report(j, simple_ch_check(w, bound));
  } else if (s.name == "jouanolou") {
    long m = as_integer(arg(0), s.name);
    if (m > 64) throw PreconditionError("BadDegree", "jouanolou degree too large for a report");
    JouanolouPair pair = jouanolou(env.field, static_cast<int>(m));
    j["m"] = m;
    j["vector_field"] = pair.field.to_string();
    j["form"] = pair.form.to_string();
    // construction replays the contraction identities before returning
    j["verified"] = true;
  } else if (s.name == "first-integral") {
    VectorField x = as_field(arg(0), s.name);
    RatFunc f = to_ratfunc(arg(1), env, s.name);
    j["vector_field"] = x.to_string();
    j["function"] = f.to_string();
    j["first_integral"] = is_first_integral(x, f);
  } else if (s.name == "surface-check") {
    VectorField x = as_field(arg(0), s.name);
    RatFunc f = to_ratfunc(arg(1), env, s.name);
    if (!f.is_polynomial())
      throw PreconditionError("NotPolynomial", "surface-check needs a polynomial");
    j["vector_field"] = x.to_string();
    j["poly"] = f.num().to_string();
    j["invariant"] = invariant_hypersurface_check(x, f.num());
  } else if (s.name == "surface-search") {
    VectorField x = as_field(arg(0), s.name);
    int cap = int_flag(s, "cap", 2);
    j["vector_field"] = x.to_string();
    j["cap"] = cap;
    std::vector<Poly> found = invariant_hypersurface_search(x, cap);
    j["count"] = found.size();
    ordered_json items = ordered_json::array();
    for (const Poly& p : found) {
      ordered_json item;
      item["poly"] = p.to_string();
      item["first_integral"] = is_first_integral(x, RatFunc(p));
      items.push_back(item);
    }
    j["found"] = items;
  } else {
    // parser admits only table commands, so this is unreachable
    throw PreconditionError("UnknownCommand", s.name);
  }
  return j;
}

void render_value(std::ostream& os, const ordered_json& v) {
  if (v.is_string())
    os << v.get<std::string>();
  else if (v.is_null())
    os << "none";
  else
    os << v.dump();
}

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  os << "foliation-kit report\n";
  const ordered_json& o = report["options"];
  os << "options: order=" << o["order"] << " bound=" << o["bound"] << " samples=" << o["samples"]
     << " seed=" << o["seed"] << '\n';
  const ordered_json& f = report["field"];
  if (f["generator"].is_null()) {
    os << "field: rationals\n";
  } else {
    os << "field: generator " << f["generator"].get<std::string>() << ", minimal polynomial "
       << f["minimal_polynomial"].get<std::string>() << '\n';
  }
  int k = 0;
  for (const ordered_json& r : report["results"]) {
    os << '[' << ++k << "] " << r["command"].get<std::string>() << '\n';
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.key() == "command") continue;
      os << "  " << it.key() << ": ";
      render_value(os, it.value());
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace

RunOutcome run_script(const Script& script, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  ordered_json report;
  report["version"] = "0.1.0";
  report["tool"] = "foliation-kit";
  report["options"] =
      ordered_json{{"order", opts.order}, {"bound", opts.bound}, {"samples", opts.samples},
                   {"seed", opts.seed}};
  report["field"] = ordered_json{{"generator", nullptr}, {"minimal_polynomial", nullptr}};
  report["results"] = ordered_json::array();

  Env env;
  int exit_code = 0;
  for (const Statement& s : script.statements) {
    std::string label = s.kind == Statement::Kind::Field ? "field"
                        : s.kind == Statement::Kind::Let ? "let"
                                                         : s.name;
    try {
      switch (s.kind) {
        case Statement::Kind::Field:
          env.field = NumberField::create(s.min_poly, s.name);
          env.generator = s.name;
          report["field"] =
              ordered_json{{"generator", s.name}, {"minimal_polynomial", expr_to_string(*s.expr)}};
          break;
        case Statement::Kind::Let:
          env.bindings.insert_or_assign(s.name, eval(*s.expr, env));
          break;
        case Statement::Kind::Command:
          report["results"].push_back(exec_command(s, env, opts));
          break;
      }
    } catch (const Error& e) {
      ordered_json err;
      err["command"] = label;
      err["error"] = ordered_json{{"kind", e.kind()}, {"message", e.what()}};
      report["results"].push_back(err);
      exit_code = static_cast<int>(e.error_class());
      break;
    }
  }

  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report["timing_ms"] = elapsed.count();

  RunOutcome out;
  out.text = render_text(report);
  out.json = report.dump(2) + "\n";
  out.exit_code = exit_code;
  return out;
}

}  // namespace folkit
