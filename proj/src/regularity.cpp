#include "areg/regularity.hpp"

#include <algorithm>
#include <cmath>

#include "areg/rng.hpp"

namespace areg {

CellApproximation approximate_conditional_expectation(const IntervalFunction& g,
                                                      const Factor& b, double target,
                                                      const RegularityConfig& cfg) {
  if (g.n() != b.n)
    throw invalid_argument("approximate_conditional_expectation: size mismatch");
  CellApproximation out;
  out.target = target;

  if (b.complexity() == 1) {
    double c = g(1);
    out.witness = StructureWitness::make(TorusPoint{}, expr_clamp(expr_const(c)));
    out.values = out.witness.eval_on(g.n(), g.ambient_modulus());
    out.achieved_error = l2_norm(subtract(g, out.values));
    out.ok = out.achieved_error <= target;
    return out;
  }

  const int k = static_cast<int>(b.generators.size());
  if (k == 0)
    throw invalid_argument("factor has multiple cells but no generator witnesses");
  for (const auto& gen : b.generators)
    if (!gen.provenance)
      throw invalid_argument("factor generator lacks level-set provenance");

  std::vector<Rational> theta_coords;
  for (const auto& gen : b.generators) theta_coords.push_back(gen.provenance->theta);
  TorusPoint theta(theta_coords);

  double tau = target / (2.0 * k);
  double best_err = -1;
  for (int attempt = 0; attempt < cfg.ace_attempts; ++attempt) {
    std::vector<WitnessRecord> recs;
    std::vector<ExprPtr> gen_exprs, gen_complements;
    for (int j = 0; j < k; ++j) {
      WitnessRecord rec = witness_for_target(b.generators[j], tau, cfg.ace_ramp_floor);
      ExprPtr e = expr_remap(rec.witness.expr, j);
      gen_exprs.push_back(e);
      gen_complements.push_back(expr_one_minus(e));
      recs.push_back(std::move(rec));
    }
    std::vector<ExprPtr> cell_terms;
    for (size_t c = 0; c < b.cells.size(); ++c) {
      if (static_cast<int>(b.patterns[c].size()) != k)
        throw invalid_argument("factor cell pattern out of sync with generators");
      std::vector<ExprPtr> factors{expr_const(g(b.cells[c].front()))};
      for (int j = 0; j < k; ++j)
        factors.push_back(b.patterns[c][j] ? gen_exprs[j] : gen_complements[j]);
      cell_terms.push_back(expr_prod(std::move(factors)));
    }
    StructureWitness w =
        StructureWitness::make(theta, expr_clamp(expr_sum(std::move(cell_terms))));
    IntervalFunction values = w.eval_on(g.n(), g.ambient_modulus());
    double err = l2_norm(subtract(g, values));
    if (best_err < 0 || err < best_err) {
      best_err = err;
      out.witness = std::move(w);
      out.values = std::move(values);
      out.generator_witnesses = std::move(recs);
    }
    if (best_err <= target) break;
    tau /= 4.0;
  }
  out.achieved_error = best_err;
  out.ok = best_err <= target;
  return out;
}

namespace {

ordered_json stage_telemetry(const RegularityCertificate& cert) {
  ordered_json t;
  t["stages"] = cert.stages;
  t["stage_energies"] = cert.stage_energies;
  t["stage_m"] = cert.stage_m;
  t["ace_errors"] = cert.ace_errors;
  t["weak_steps"] = cert.weak_steps;
  t["factor_complexities"] = cert.factor_complexities;
  t["energy_trajectory"] = cert.energy_trajectory;
  return t;
}

}  // namespace

RegularityCertificate regularize(const IntervalFunction& f, double epsilon,
                                 const GrowthFunction& growth,
                                 const RegularityConfig& cfg) {
  if (!f.in_range(0.0, 1.0))
    throw invalid_argument("regularize: values must lie in [0,1]");
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw invalid_argument("regularize: epsilon must lie in (0,1]");

  RegularityCertificate cert;
  cert.n = f.n();
  cert.modulus = f.ambient_modulus();
  cert.epsilon = epsilon;
  cert.growth = growth;

  const int max_stages = static_cast<int>(std::ceil(4.0 / (epsilon * epsilon))) + 1;
  const int max_weak_steps = f.n() + cfg.max_weak_steps_margin;

  Factor b = Factor::trivial(f.n());
  double m_prev = 1.0;
  double energy_prev = energy(f, b);
  cert.stage_energies.push_back(energy_prev);
  cert.energy_trajectory.push_back(energy_prev);

  for (int stage = 0; stage < max_stages; ++stage) {
    IntervalFunction g = conditional_expectation(f, b);
    CellApproximation ace =
        approximate_conditional_expectation(g, b, epsilon / 2.0, cfg);
    if (!ace.ok) {
      ordered_json t = stage_telemetry(cert);
      t["ace_best_error"] = ace.achieved_error;
      t["ace_target"] = ace.target;
      throw pipeline_error("structured approximation missed its L2 target", t.dump());
    }
    double m_next = std::max(m_prev, ace.witness.complexity);
    double growth_val = growth.eval(m_next);
    double delta = growth_val > 0 && std::isfinite(growth_val) ? 1.0 / growth_val : 0.0;

    WeakRegResult wr = weak_regularize(f, b, delta, max_weak_steps, cfg.inverse);
    cert.energy_trajectory.insert(cert.energy_trajectory.end(), wr.energies.begin() + 1,
                                  wr.energies.end());
    if (!wr.ok()) {
      ordered_json t = stage_telemetry(cert);
      t["weak_regularize"] = wr.telemetry();
      throw pipeline_error(std::string("weak regularization failed: ") +
                               to_string(wr.status),
                           t.dump());
    }

    double energy_next = energy(f, wr.factor);
    double gain = energy_next - energy_prev;

    cert.stages = stage + 1;
    cert.stage_m.push_back(m_next);
    cert.ace_errors.push_back(ace.achieved_error);
    cert.weak_steps.push_back(wr.steps);
    cert.factor_complexities.push_back(wr.factor.complexity());
    cert.stage_energies.push_back(energy_next);

    if (gain <= epsilon * epsilon / 4.0) {
      IntervalFunction projection = conditional_expectation(f, wr.factor);
      cert.m_value = m_next;
      cert.f_str = ace.values;
      std::vector<double> sml(f.n()), unf(f.n());
      for (int i = 0; i < f.n(); ++i) {
        sml[i] = projection.values()[i] - cert.f_str.values()[i];
        unf[i] = (f.values()[i] - cert.f_str.values()[i]) - sml[i];
      }
      cert.f_sml = IntervalFunction(std::move(sml), f.ambient_modulus());
      cert.f_unf = IntervalFunction(std::move(unf), f.ambient_modulus());
      cert.witness = ace.witness;
      cert.sml_l2 = l2_norm(cert.f_sml);
      cert.unf_u2 = u2_norm_interval(cert.f_unf);
      cert.u2_bound = delta;
      cert.final_factor = wr.factor;
      return cert;
    }
    b = std::move(wr.factor);
    energy_prev = energy_next;
    m_prev = m_next;
  }
  // energies rise by > eps^2/4 per continuing stage and live in [0,1]
  throw pipeline_error("outer iteration exhausted its stage budget",
                       stage_telemetry(cert).dump());
}

const ClauseResult* VerificationReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.pass) return &c;
  return nullptr;
}

ordered_json VerificationReport::to_json() const {
  ordered_json arr = ordered_json::array();
  for (const auto& c : clauses) {
    ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["measured"] = c.measured;
    j["bound"] = c.bound;
    arr.push_back(j);
  }
  ordered_json out;
  out["ok"] = ok;
  out["clauses"] = arr;
  return out;
}

VerificationReport verify_certificate(const RegularityCertificate& cert,
                                      const IntervalFunction& f, double epsilon,
                                      const GrowthFunction& growth) {
  VerificationReport rep;
  auto add = [&rep](std::string name, bool pass, double measured, double bound) {
    rep.clauses.push_back({std::move(name), pass, measured, bound});
    rep.ok = rep.ok && rep.clauses.back().pass;
  };
  const Tolerances& tol = tolerances();

  // decomposition identity, exact: f_unf is the residual (f - f_str) - f_sml
  double sum_dev = 0;
  bool shapes = cert.f_str.n() == f.n() && cert.f_sml.n() == f.n() && cert.f_unf.n() == f.n();
  if (shapes) {
    for (int i = 0; i < f.n(); ++i) {
      double residual = (f.values()[i] - cert.f_str.values()[i]) - cert.f_sml.values()[i];
      if (cert.f_unf.values()[i] != residual) sum_dev = std::max(sum_dev, 1.0);
    }
  }
  add("sum_exact", shapes && sum_dev == 0.0, sum_dev, 0.0);

  double sml = shapes ? l2_norm(cert.f_sml) : 0;
  add("sml_l2", shapes && sml <= epsilon + tol.identity, sml, epsilon);

  double bound = 1.0 / growth.eval(cert.m_value);
  double unf = shapes ? u2_norm_interval(cert.f_unf) : 0;
  add("unf_u2", shapes && unf <= bound + tol.norm, unf, bound);

  double str_lo = 0, str_hi = 0, both_lo = 0, both_hi = 0;
  if (shapes) {
    for (int i = 0; i < f.n(); ++i) {
      double s = cert.f_str.values()[i];
      double b2 = s + cert.f_sml.values()[i];
      str_lo = std::min(str_lo, s);
      str_hi = std::max(str_hi, s - 1.0);
      both_lo = std::min(both_lo, b2);
      both_hi = std::max(both_hi, b2 - 1.0);
    }
  }
  double str_violation = std::max(-str_lo, str_hi);
  double both_violation = std::max(-both_lo, both_hi);
  add("str_range", shapes && str_violation <= tol.identity, str_violation, 0.0);
  add("str_sml_range", shapes && both_violation <= tol.identity, both_violation, 0.0);

  add("witness_complexity", cert.witness.complexity <= cert.m_value + tol.identity,
      cert.witness.complexity, cert.m_value);

  double eval_dev = 0;
  if (shapes)
    for (int n = 1; n <= f.n(); ++n)
      eval_dev = std::max(eval_dev, std::abs(cert.f_str(n) - cert.witness.eval_at(n)));
  add("witness_eval", shapes && eval_dev <= tol.norm, eval_dev, tol.norm);

  // Lipschitz bound spot-check on deterministic sample pairs
  double lip_excess = 0;
  if (cert.witness.dim > 0) {
    Rng rng(0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 64; ++trial) {
      std::vector<double> x(cert.witness.dim), y(cert.witness.dim);
      double dist_sq = 0;
      for (int j = 0; j < cert.witness.dim; ++j) {
        x[j] = rng.uniform();
        y[j] = rng.uniform();
        double d = std::abs(x[j] - y[j]);
        d = std::min(d, 1.0 - d);
        dist_sq += d * d;
      }
      double lhs = std::abs(cert.witness.eval_point(x) - cert.witness.eval_point(y));
      lip_excess = std::max(
          lip_excess, lhs - cert.witness.lip_bound * std::sqrt(dist_sq));
    }
  }
  add("witness_lip_spot", lip_excess <= tol.norm, lip_excess, 0.0);

  return rep;
}

ordered_json RegularityCertificate::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["modulus"] = modulus;
  j["epsilon"] = epsilon;
  j["growth"] = growth.to_string();
  j["m_value"] = m_value;
  j["f_str"] = f_str.to_json();
  j["f_sml"] = f_sml.to_json();
  j["f_unf"] = f_unf.to_json();
  j["witness"] = witness.to_json();
  ordered_json measured;
  measured["sml_l2"] = sml_l2;
  measured["unf_u2"] = unf_u2;
  measured["u2_bound"] = u2_bound;
  j["measured"] = measured;
  j["telemetry"] = stage_telemetry(*this);
  j["factor"] = final_factor.to_json();
  ordered_json sets = ordered_json::array();
  for (const auto& gen : final_factor.generators) sets.push_back(gen.to_json());
  j["generator_sets"] = sets;
  return j;
}

RegularityCertificate RegularityCertificate::from_json(const ordered_json& j) {
  RegularityCertificate c;
  c.n = j.at("n").get<int>();
  c.modulus = j.at("modulus").get<int>();
  c.epsilon = j.at("epsilon").get<double>();
  c.growth = GrowthFunction::parse(j.at("growth").get<std::string>());
  c.m_value = j.at("m_value").get<double>();
  c.f_str = IntervalFunction::from_json(j.at("f_str"));
  c.f_sml = IntervalFunction::from_json(j.at("f_sml"));
  c.f_unf = IntervalFunction::from_json(j.at("f_unf"));
  c.witness = StructureWitness::from_json(j.at("witness"));
  const auto& measured = j.at("measured");
  c.sml_l2 = measured.at("sml_l2").get<double>();
  c.unf_u2 = measured.at("unf_u2").get<double>();
  c.u2_bound = measured.at("u2_bound").get<double>();
  const auto& t = j.at("telemetry");
  c.stages = t.at("stages").get<int>();
  c.stage_energies = t.at("stage_energies").get<std::vector<double>>();
  c.stage_m = t.at("stage_m").get<std::vector<double>>();
  c.ace_errors = t.at("ace_errors").get<std::vector<double>>();
  c.weak_steps = t.at("weak_steps").get<std::vector<int>>();
  c.factor_complexities = t.at("factor_complexities").get<std::vector<int>>();
  c.energy_trajectory = t.at("energy_trajectory").get<std::vector<double>>();
  const auto& fj = j.at("factor");
  std::vector<std::vector<int>> cells;
  for (const auto& cell : fj.at("cells")) cells.push_back(cell.get<std::vector<int>>());
  c.final_factor = Factor::from_cells(fj.at("n").get<int>(), std::move(cells));
  for (const auto& s : j.at("generator_sets"))
    c.final_factor.generators.push_back(MeasurableSet::from_json(s));
  return c;
}

}  // namespace areg
