#include "areg/inverse.hpp"

#include <algorithm>
#include <cmath>

namespace areg {

FrequencyHit large_fourier_coefficient(const IntervalFunction& f, double delta) {
  (void)delta;  // recorded by callers; the scan is always exhaustive
  if (!f.in_range(-1.0, 1.0, 1e-9))
    throw invalid_argument("large_fourier_coefficient: |f| must be <= 1");
  const int m = f.ambient_modulus();
  FrequencyHit best;
  best.modulus = m;
  best.r = 0;
  best.achieved = -1;
  for (long r = 0; r < m; ++r) {
    double a = std::abs(phase_correlation(f, r, m));
    if (a > best.achieved) {
      best.achieved = a;
      best.r = r;
    }
  }
  best.theta = make_rational(best.r, m);
  return best;
}

double maximal_function(const IntervalFunction& phi, double t, const InverseConfig& cfg) {
  if (t < 0.0 || t > 1.0) throw invalid_argument("maximal_function: t outside [0,1]");
  double best = 0;
  for (int k = cfg.maximal_min_exp; k <= cfg.maximal_max_exp; ++k) {
    double r = std::ldexp(1.0, -k);
    int count = 0;
    for (double v : phi.values())
      if (std::abs(v - t) <= r) ++count;
    double val = count / (2.0 * r * phi.n());
    if (val > best) best = val;
  }
  return std::min(best, cfg.maximal_cap);
}

namespace {

IntervalFunction variant_phi(const IntervalFunction& f, const Rational& theta, PhiVariant v) {
  LevelSetProvenance p;
  p.theta = theta;
  p.variant = v;
  return p.phi(f.n(), f.ambient_modulus());
}

// |E_n f(n) 1_{phi >= t}(n)|
double level_correlation(const IntervalFunction& f, const IntervalFunction& phi, double t) {
  double s = 0;
  for (int i = 0; i < f.n(); ++i)
    if (phi.values()[i] >= t) s += f.values()[i];
  return std::abs(s / f.n());
}

}  // namespace

CorrelatingSetResult correlating_set(const IntervalFunction& f, double delta,
                                     const InverseConfig& cfg) {
  if (!f.in_range(-1.0, 1.0, 1e-9))
    throw invalid_argument("correlating_set: values must lie in [-1,1]");
  CorrelatingSetResult out;

  FrequencyHit hit = large_fourier_coefficient(f, delta);
  out.theta = hit.theta;

  // (ii) best of the four real projections
  const PhiVariant variants[] = {PhiVariant::kRePos, PhiVariant::kReNeg,
                                 PhiVariant::kImPos, PhiVariant::kImNeg};
  IntervalFunction phi;
  double best_var = -1;
  for (PhiVariant v : variants) {
    IntervalFunction cand = variant_phi(f, hit.theta, v);
    double c = std::abs(correlation(f, cand));
    if (c > best_var) {
      best_var = c;
      out.variant = v;
      phi = cand;
    }
  }

  // (iii) threshold scan over a fixed grid in (0,1)
  const int grid = cfg.threshold_grid;
  std::vector<double> corr(grid);
  double best_corr = 0;
  for (int k = 0; k < grid; ++k) {
    double t = (k + 0.5) / grid;
    corr[k] = level_correlation(f, phi, t);
    if (corr[k] > best_corr) best_corr = corr[k];
  }
  if (best_corr == 0.0) {
    out.empty = true;
    out.achieved = 0;
    out.set.indicator = IntervalFunction(std::vector<double>(f.n(), 0.0), f.ambient_modulus());
    return out;
  }

  // (iv) within the good set, minimize the maximal function; smallest t wins
  double floor = cfg.omega_ratio * best_corr;
  double best_mt = 0;
  int best_k = -1;
  for (int k = 0; k < grid; ++k) {
    if (corr[k] < floor) continue;
    double mt = maximal_function(phi, (k + 0.5) / grid, cfg);
    if (best_k < 0 || mt < best_mt) {
      best_mt = mt;
      best_k = k;
    }
  }
  out.threshold = (best_k + 0.5) / grid;
  out.maximal_value = best_mt;

  // (v) the set, its recomputed correlation, and the ramp witness
  std::vector<double> ind(f.n());
  for (int i = 0; i < f.n(); ++i) ind[i] = phi.values()[i] >= out.threshold ? 1.0 : 0.0;
  out.set.indicator = IntervalFunction(std::move(ind), f.ambient_modulus());
  out.achieved = std::abs(correlation(f, out.set.indicator));

  LevelSetProvenance prov;
  prov.theta = hit.theta;
  prov.variant = out.variant;
  prov.threshold = out.threshold;
  prov.maximal_value = best_mt;
  out.set.provenance = prov;
  for (double target : cfg.witness_targets)
    out.set.witnesses.push_back(witness_for_target(out.set, target, cfg.ramp_floor));
  return out;
}

}  // namespace areg
