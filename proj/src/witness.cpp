#include "areg/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace areg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }
}  // namespace

ExprPtr expr_const(double c) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::kConst;
  e->value = c;
  return e;
}

ExprPtr expr_re_phase(int coord) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::kRePhase;
  e->coord = coord;
  return e;
}

ExprPtr expr_im_phase(int coord) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::kImPhase;
  e->coord = coord;
  return e;
}

ExprPtr expr_ramp(double t, double r, ExprPtr child) {
  if (!(r > 0)) throw invalid_argument("ramp half-width must be positive");
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::kRamp;
  e->t = t;
  e->r = r;
  e->children = {std::move(child)};
  return e;
}

ExprPtr expr_sum(std::vector<ExprPtr> children) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::kSum;
  e->children = std::move(children);
  return e;
}

ExprPtr expr_prod(std::vector<ExprPtr> children) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::kProd;
  e->children = std::move(children);
  return e;
}

ExprPtr expr_clamp(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::kClamp;
  e->children = {std::move(child)};
  return e;
}

ExprPtr expr_one_minus(ExprPtr child) {
  return expr_sum({expr_const(1.0), expr_prod({expr_const(-1.0), std::move(child)})});
}

double expr_eval(const Expr& e, const std::vector<double>& x) {
  switch (e.op) {
    case ExprOp::kConst:
      return e.value;
    case ExprOp::kRePhase:
      return std::cos(kTwoPi * x.at(e.coord));
    case ExprOp::kImPhase:
      return std::sin(kTwoPi * x.at(e.coord));
    case ExprOp::kRamp: {
      double v = expr_eval(*e.children[0], x);
      return clamp01((v - (e.t - e.r)) / (2.0 * e.r));
    }
    case ExprOp::kSum: {
      double s = 0;
      for (const auto& c : e.children) s += expr_eval(*c, x);
      return s;
    }
    case ExprOp::kProd: {
      double p = 1;
      for (const auto& c : e.children) p *= expr_eval(*c, x);
      return p;
    }
    case ExprOp::kClamp:
      return clamp01(expr_eval(*e.children[0], x));
  }
  throw std::logic_error("unreachable expr op");
}

ExprBounds expr_bounds(const Expr& e) {
  switch (e.op) {
    case ExprOp::kConst:
      return {std::abs(e.value), 0.0};
    case ExprOp::kRePhase:
    case ExprOp::kImPhase:
      // |cos(2pi a) - cos(2pi b)| <= 2pi * d_T(a, b)
      return {1.0, kTwoPi};
    case ExprOp::kRamp: {
      ExprBounds c = expr_bounds(*e.children[0]);
      return {1.0, c.semi / (2.0 * e.r)};
    }
    case ExprOp::kSum: {
      ExprBounds b{0, 0};
      for (const auto& c : e.children) {
        ExprBounds cb = expr_bounds(*c);
        b.sup += cb.sup;
        b.semi += cb.semi;
      }
      return b;
    }
    case ExprOp::kProd: {
      // lip(fg) <= sup(f) lip(g) + sup(g) lip(f), folded left
      ExprBounds b{1, 0};
      for (const auto& c : e.children) {
        ExprBounds cb = expr_bounds(*c);
        b.semi = b.sup * cb.semi + cb.sup * b.semi;
        b.sup = b.sup * cb.sup;
      }
      return b;
    }
    case ExprOp::kClamp: {
      ExprBounds c = expr_bounds(*e.children[0]);
      return {std::min(c.sup, 1.0), c.semi};
    }
  }
  throw std::logic_error("unreachable expr op");
}

ExprPtr expr_remap(const ExprPtr& e, int offset) {
  if (offset == 0) return e;
  auto out = std::make_shared<Expr>(*e);
  if (e->op == ExprOp::kRePhase || e->op == ExprOp::kImPhase) out->coord += offset;
  out->children.clear();
  for (const auto& c : e->children) out->children.push_back(expr_remap(c, offset));
  return out;
}

ordered_json expr_to_json(const Expr& e) {
  ordered_json j;
  switch (e.op) {
    case ExprOp::kConst:
      j["op"] = "const";
      j["value"] = e.value;
      break;
    case ExprOp::kRePhase:
      j["op"] = "re_phase";
      j["coord"] = e.coord;
      break;
    case ExprOp::kImPhase:
      j["op"] = "im_phase";
      j["coord"] = e.coord;
      break;
    case ExprOp::kRamp:
      j["op"] = "ramp";
      j["t"] = e.t;
      j["r"] = e.r;
      j["child"] = expr_to_json(*e.children[0]);
      break;
    case ExprOp::kSum:
    case ExprOp::kProd: {
      j["op"] = e.op == ExprOp::kSum ? "sum" : "prod";
      ordered_json arr = ordered_json::array();
      for (const auto& c : e.children) arr.push_back(expr_to_json(*c));
      j["children"] = arr;
      break;
    }
    case ExprOp::kClamp:
      j["op"] = "clamp";
      j["child"] = expr_to_json(*e.children[0]);
      break;
  }
  return j;
}

ExprPtr expr_from_json(const ordered_json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "const") return expr_const(j.at("value").get<double>());
  if (op == "re_phase") return expr_re_phase(j.at("coord").get<int>());
  if (op == "im_phase") return expr_im_phase(j.at("coord").get<int>());
  if (op == "ramp")
    return expr_ramp(j.at("t").get<double>(), j.at("r").get<double>(),
                     expr_from_json(j.at("child")));
  if (op == "sum" || op == "prod") {
    std::vector<ExprPtr> children;
    for (const auto& c : j.at("children")) children.push_back(expr_from_json(c));
    return op == "sum" ? expr_sum(std::move(children)) : expr_prod(std::move(children));
  }
  if (op == "clamp") return expr_clamp(expr_from_json(j.at("child")));
  throw invalid_argument("unknown expression op '" + op + "'");
}

StructureWitness StructureWitness::make(TorusPoint theta, ExprPtr expr) {
  StructureWitness w;
  w.dim = theta.dim();
  w.theta = std::move(theta);
  w.expr = std::move(expr);
  ExprBounds b = expr_bounds(*w.expr);
  w.lip_bound = b.sup + b.semi;
  w.complexity = std::max(static_cast<double>(w.dim), w.lip_bound);
  return w;
}

double StructureWitness::eval_point(const std::vector<double>& x) const {
  return expr_eval(*expr, x);
}

double StructureWitness::eval_at(long n) const { return eval_point(theta.orbit(n)); }

IntervalFunction StructureWitness::eval_on(int n_max, int modulus) const {
  std::vector<double> vals(n_max);
  for (int n = 1; n <= n_max; ++n) vals[n - 1] = eval_at(n);
  return IntervalFunction(std::move(vals), modulus);
}

ordered_json StructureWitness::to_json() const {
  ordered_json j;
  j["dim"] = dim;
  j["theta"] = theta.to_json();
  j["expr"] = expr_to_json(*expr);
  j["lip_bound"] = lip_bound;
  j["complexity"] = complexity;
  return j;
}

StructureWitness StructureWitness::from_json(const ordered_json& j) {
  StructureWitness w = make(TorusPoint::from_json(j.at("theta")), expr_from_json(j.at("expr")));
  if (w.dim != j.at("dim").get<int>())
    throw invalid_argument("witness: dim does not match theta");
  return w;
}

const char* to_string(PhiVariant v) {
  switch (v) {
    case PhiVariant::kRePos: return "re_pos";
    case PhiVariant::kReNeg: return "re_neg";
    case PhiVariant::kImPos: return "im_pos";
    case PhiVariant::kImNeg: return "im_neg";
  }
  return "?";
}

PhiVariant phi_variant_from_string(const std::string& s) {
  if (s == "re_pos") return PhiVariant::kRePos;
  if (s == "re_neg") return PhiVariant::kReNeg;
  if (s == "im_pos") return PhiVariant::kImPos;
  if (s == "im_neg") return PhiVariant::kImNeg;
  throw invalid_argument("unknown phi variant '" + s + "'");
}

namespace {

// F with F(frac(theta n)) = variant(e(-theta n)); all four fit the grammar
// because |Re|, |Im| <= 1 makes the positive part a clamp.
ExprPtr variant_expr(PhiVariant v) {
  switch (v) {
    case PhiVariant::kRePos:  // (Re e(-x))^+ = clamp(cos 2pi x)
      return expr_clamp(expr_re_phase(0));
    case PhiVariant::kReNeg:
      return expr_clamp(expr_prod({expr_const(-1.0), expr_re_phase(0)}));
    case PhiVariant::kImPos:  // (Im e(-x))^+ = clamp(-sin 2pi x)
      return expr_clamp(expr_prod({expr_const(-1.0), expr_im_phase(0)}));
    case PhiVariant::kImNeg:
      return expr_clamp(expr_im_phase(0));
  }
  throw std::logic_error("unreachable variant");
}

double variant_value(PhiVariant v, double frac_theta_n) {
  double ang = kTwoPi * frac_theta_n;
  switch (v) {
    case PhiVariant::kRePos: return std::max(std::cos(ang), 0.0);
    case PhiVariant::kReNeg: return std::max(-std::cos(ang), 0.0);
    case PhiVariant::kImPos: return std::max(-std::sin(ang), 0.0);
    case PhiVariant::kImNeg: return std::max(std::sin(ang), 0.0);
  }
  throw std::logic_error("unreachable variant");
}

}  // namespace

IntervalFunction LevelSetProvenance::phi(int n_max, int modulus) const {
  TorusPoint tp({theta});
  std::vector<double> vals(n_max);
  for (int n = 1; n <= n_max; ++n) vals[n - 1] = variant_value(variant, tp.orbit(n)[0]);
  return IntervalFunction(std::move(vals), modulus);
}

double LevelSetProvenance::ramp_width(double target, double floor) const {
  double m_target = 1.0 / target;
  double width = maximal_value > 0
                     ? 1.0 / (4.0 * maximal_value * m_target * m_target)
                     : 0.25;
  return std::min(0.25, std::max(floor, width));
}

StructureWitness LevelSetProvenance::ramp_witness(double width) const {
  return StructureWitness::make(TorusPoint({theta}),
                                expr_ramp(threshold, width, variant_expr(variant)));
}

ordered_json LevelSetProvenance::to_json() const {
  ordered_json j;
  auto [p, q] = rational_to_strings(theta);
  j["theta"] = ordered_json::array({p, q});
  j["variant"] = to_string(variant);
  j["threshold"] = threshold;
  j["maximal_value"] = maximal_value;
  return j;
}

LevelSetProvenance LevelSetProvenance::from_json(const ordered_json& j) {
  LevelSetProvenance p;
  p.theta = rational_from_strings(j.at("theta")[0].get<std::string>(),
                                  j.at("theta")[1].get<std::string>());
  p.variant = phi_variant_from_string(j.at("variant").get<std::string>());
  p.threshold = j.at("threshold").get<double>();
  p.maximal_value = j.at("maximal_value").get<double>();
  return p;
}

ordered_json WitnessRecord::to_json() const {
  ordered_json j;
  j["target_error"] = target_error;
  j["achieved_l2_error"] = achieved_l2_error;
  j["witness"] = witness.to_json();
  return j;
}

WitnessRecord WitnessRecord::from_json(const ordered_json& j) {
  WitnessRecord r;
  r.target_error = j.at("target_error").get<double>();
  r.achieved_l2_error = j.at("achieved_l2_error").get<double>();
  r.witness = StructureWitness::from_json(j.at("witness"));
  return r;
}

MeasurableSet MeasurableSet::whole(int n_max, int modulus) {
  MeasurableSet s;
  s.indicator = IntervalFunction(std::vector<double>(n_max, 1.0), modulus);
  WitnessRecord r;
  r.target_error = 0;
  r.witness = StructureWitness::make(TorusPoint({Rational(0)}), expr_const(1.0));
  r.achieved_l2_error = 0;
  s.witnesses.push_back(std::move(r));
  return s;
}

ordered_json MeasurableSet::to_json() const {
  ordered_json j;
  j["indicator"] = indicator.to_json();
  ordered_json arr = ordered_json::array();
  for (const auto& w : witnesses) arr.push_back(w.to_json());
  j["witnesses"] = arr;
  if (provenance) j["provenance"] = provenance->to_json();
  return j;
}

MeasurableSet MeasurableSet::from_json(const ordered_json& j) {
  MeasurableSet s;
  s.indicator = IntervalFunction::from_json(j.at("indicator"));
  for (const auto& w : j.at("witnesses")) s.witnesses.push_back(WitnessRecord::from_json(w));
  if (j.contains("provenance")) s.provenance = LevelSetProvenance::from_json(j.at("provenance"));
  return s;
}

WitnessRecord witness_for_target(const MeasurableSet& set, double target, double ramp_floor) {
  if (!set.provenance)
    throw invalid_argument("set has no level-set provenance to refine from");
  double width = set.provenance->ramp_width(target, ramp_floor);
  WitnessRecord rec;
  rec.target_error = target;
  rec.witness = set.provenance->ramp_witness(width);
  IntervalFunction approx =
      rec.witness.eval_on(set.indicator.n(), set.indicator.ambient_modulus());
  rec.achieved_l2_error = l2_norm(subtract(set.indicator, approx));
  return rec;
}

}  // namespace areg
