#include "areg/irrational_regularity.hpp"

#include <cmath>

namespace areg {

namespace {

// small signed lift of the smooth part, one coordinate
Rational smooth_lift(const Rational& coord) { return signed_frac(coord); }

double frac_double(double v) {
  double f = v - std::floor(v);
  return f < 1.0 ? f : 0.0;
}

}  // namespace

ordered_json GrowthAudit::to_json() const {
  ordered_json j;
  j["c1"] = c1;
  j["c2"] = c2;
  j["m1"] = m1.get_str();
  j["m2"] = m2.get_str();
  j["m"] = m.get_str();
  j["f1_m1"] = f1_m1;
  j["f2_m2"] = f2_m2;
  j["f_m"] = f_m;
  j["ok"] = ok;
  return j;
}

double IrrationalCertificate::f_tilde(double x, long y, const std::vector<double>& z) const {
  const int d = decomposition.theta.dim();
  const int dp = chart_dim();
  if (static_cast<int>(z.size()) != dp)
    throw invalid_argument("f_tilde: chart coordinate dimension mismatch");
  std::vector<double> arg(d);
  long yq = q.get_si() > 0 ? y % q.get_si() : 0;
  if (yq < 0) yq += q.get_si();
  for (int j = 0; j < d; ++j) {
    double smooth_term =
        base.n * to_double(smooth_lift(decomposition.smooth.coords[j])) * x;
    double rat_term = to_double(mod1(decomposition.rational.coords[j] * Rational(yq)));
    double chart_term = 0;
    for (int i = 0; i < dp; ++i)
      chart_term += decomposition.chart.inverse.rows[j][i].get_d() * z[i];
    arg[j] = frac_double(smooth_term + rat_term + chart_term);
  }
  return base.witness.eval_point(arg);
}

double evaluate_structured(const IrrationalCertificate& cert, long n) {
  if (n < 1 || n > cert.base.n)
    throw invalid_argument("evaluate_structured: n outside [1, N]");
  const int d = cert.decomposition.theta.dim();
  if (d == 0) return cert.base.witness.eval_point({});

  // exact assembly: n*theta_smth + (n mod q)*theta_rat + L^{-1}(z_n) == n*theta
  BigInt nq = BigInt(n) % cert.q;
  TorusPoint smooth_part = cert.decomposition.smooth.scaled(n);
  TorusPoint rat_part = cert.decomposition.rational.scaled(nq);
  TorusPoint z_full = cert.decomposition.chart.to_chart(cert.decomposition.irrational.scaled(n));
  TorusPoint irr_part = TorusPoint(cert.decomposition.chart.inverse.apply(z_full.coords));

  TorusPoint arg = smooth_part + rat_part + irr_part;
  std::vector<double> x(d);
  for (int j = 0; j < d; ++j) x[j] = to_double(arg.coords[j]);
  return cert.base.witness.eval_point(x);
}

ordered_json IrrationalCertificate::to_json() const {
  ordered_json j;
  j["base"] = base.to_json();
  j["q"] = q.get_str();
  j["m_value"] = m_value.get_str();
  j["chart"] = decomposition.chart.to_json();
  j["theta_irr"] = decomposition.irrational.to_json();
  ordered_json ft;
  ft["n"] = base.n;
  ordered_json xs = ordered_json::array();
  for (const auto& c : decomposition.smooth.coords) {
    auto [p, qq] = rational_to_strings(Rational(base.n) * smooth_lift(c));
    xs.push_back(ordered_json::array({p, qq}));
  }
  ft["x_scale"] = xs;
  ft["y_point"] = decomposition.rational.to_json();
  ft["lip"] = f_tilde_lip;
  j["f_tilde"] = ft;
  j["audit"] = audit.to_json();
  j["decomposition"] = decomposition.to_json();
  j["final_scan"] = final_scan.to_json();
  return j;
}

IrrationalCertificate regularize_irrational(const IntervalFunction& f, double epsilon,
                                            const GrowthFunction& growth,
                                            const IrrationalRegConfig& cfg) {
  GrowthFunction f2 = GrowthFunction::inflate(growth, cfg.c2, 2);
  GrowthFunction f1 = GrowthFunction::inflate(f2, cfg.c1, 2);

  IrrationalCertificate cert;
  cert.base = regularize(f, epsilon, f1, cfg.reg);

  BigInt m1(static_cast<long>(std::ceil(std::min(cert.base.m_value, 1e15))));
  if (m1 < 1) m1 = 1;

  cert.decomposition =
      decompose_theta(cert.base.witness.theta, cert.base.n, f2, m1, cfg.limits);
  const BigInt& m2 = cert.decomposition.m_value;
  cert.q = cert.decomposition.torsion_order;

  // ||F~||_Lip <= sup F + semi F * max(coordinate map norms)
  ExprBounds fb = expr_bounds(*cert.base.witness.expr);
  double x_factor =
      cert.base.n * std::sqrt(to_double(cert.decomposition.smooth.dist_sq_to_zero()));
  double y_factor = 0;
  long qv = cert.q.get_si();
  for (long dy = 1; dy < qv; ++dy) {
    TorusPoint moved = cert.decomposition.rational.scaled(dy);
    y_factor = std::max(y_factor, std::sqrt(to_double(moved.dist_sq_to_zero())));
  }
  double z_factor = 0;
  const int d = cert.decomposition.theta.dim();
  const int dp = cert.decomposition.chart.dim;
  for (int i = 0; i < d; ++i)
    for (int jj = 0; jj < dp; ++jj) {
      double e = cert.decomposition.chart.inverse.rows[i][jj].get_d();
      z_factor += e * e;
    }
  z_factor = std::sqrt(z_factor);
  double factor = std::max({x_factor, y_factor, z_factor});
  cert.f_tilde_lip = fb.sup + fb.semi * factor;

  BigInt m = m2;
  m = std::max(m, cert.q);
  m = std::max(m, BigInt(dp));
  m = std::max(m, BigInt(static_cast<long>(std::ceil(cert.f_tilde_lip))));
  cert.m_value = m;

  GrowthAudit audit;
  audit.c1 = cfg.c1;
  audit.c2 = cfg.c2;
  audit.m1 = m1;
  audit.m2 = m2;
  audit.m = m;
  audit.f1_m1 = f1.eval(m1.get_d());
  audit.f2_m2 = f2.eval(m2.get_d());
  audit.f_m = growth.eval(m.get_d());
  // exact argument comparisons; the base growth is increasing
  BigInt c1b(static_cast<long>(cfg.c1)), c2b(static_cast<long>(cfg.c2));
  audit.ok = (c1b * m1 * m1 >= m2) && (c2b * m2 * m2 >= m);
  cert.audit = audit;
  if (!audit.ok) {
    ordered_json t = audit.to_json();
    throw pipeline_error("growth audit failed: F1(M1) >= F2(M2) >= F(M) violated",
                         t.dump());
  }

  cert.final_scan = is_irrational(cert.decomposition.irrational_in_chart(),
                                  growth.eval_ceil(m), cert.base.n, cfg.limits);
  if (!cert.final_scan.passed()) {
    ordered_json t = cert.final_scan.to_json();
    throw pipeline_error("independent irrationality rerun found a counterexample",
                         t.dump());
  }
  return cert;
}

}  // namespace areg
