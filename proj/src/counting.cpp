#include "areg/counting.hpp"

#include <cmath>
#include <numbers>

namespace areg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// frequency vectors with |m|_1 <= degree, lexicographic
void l1_ball(int dim, int degree, std::vector<std::vector<int>>& out) {
  std::vector<int> m(dim, 0);
  std::function<void(int, int)> rec = [&](int coord, int rem) {
    if (coord == dim) {
      out.push_back(m);
      return;
    }
    for (int v = -rem; v <= rem; ++v) {
      m[coord] = v;
      rec(coord + 1, rem - std::abs(v));
    }
  };
  rec(0, degree);
}

int degree_budget(int dim, const CountingConfig& cfg) {
  if (dim <= 1) return cfg.max_degree;
  if (dim == 2) return 16;
  return 6;
}

struct TorusGrid {
  int dim;
  int side;
  long total;
  std::vector<double> point(long idx) const {
    std::vector<double> x(dim);
    for (int j = 0; j < dim; ++j) {
      x[j] = static_cast<double>(idx % side) / side;
      idx /= side;
    }
    return x;
  }
};

double sup_deviation(const TorusEvaluator& f, const TrigPolynomial& p, const TorusGrid& grid) {
  double worst = 0;
  for (long i = 0; i < grid.total; ++i) {
    std::vector<double> x = grid.point(i);
    worst = std::max(worst, std::abs(f(x) - p.eval(x)));
  }
  return worst;
}

}  // namespace

FejerResult fejer_truncate(const TorusEvaluator& f, int dim, double lip, double delta,
                           const CountingConfig& cfg) {
  if (dim < 1) throw invalid_argument("fejer_truncate: dimension must be >= 1");
  if (!(delta > 0)) throw invalid_argument("fejer_truncate: delta must be positive");
  (void)lip;  // the measured grid check is the certificate, the bound is advisory

  TorusGrid verify{dim, cfg.torus_grid, 1};
  for (int j = 0; j < dim; ++j) verify.total *= cfg.torus_grid;

  FejerResult best;
  best.sup_error = -1;
  int max_degree = degree_budget(dim, cfg);
  for (int degree = 1; degree <= max_degree; degree *= 2) {
    int side = std::max(4 * (degree + 1), 32);
    TorusGrid sample{dim, side, 1};
    for (int j = 0; j < dim; ++j) sample.total *= side;

    std::vector<std::complex<double>> values(sample.total);
    for (long i = 0; i < sample.total; ++i) values[i] = f(sample.point(i));

    std::vector<std::vector<int>> freqs;
    l1_ball(dim, degree, freqs);
    TrigPolynomial raw;
    raw.dim = dim;
    for (const auto& m : freqs) {
      std::complex<double> acc = 0;
      for (long i = 0; i < sample.total; ++i) {
        std::vector<double> x = sample.point(i);
        double phase = 0;
        for (int j = 0; j < dim; ++j) phase += m[j] * x[j];
        acc += values[i] * std::complex<double>{std::cos(-kTwoPi * phase),
                                                std::sin(-kTwoPi * phase)};
      }
      raw.terms[m] = acc / static_cast<double>(sample.total);
    }

    double raw_err = sup_deviation(f, raw, verify);
    if (best.sup_error < 0 || raw_err < best.sup_error) {
      best.sup_error = raw_err;
      best.poly = raw;
      best.degree = degree;
      best.tapered = false;
    }
    if (raw_err <= delta / 2) {
      best.ok = true;
      return best;
    }

    TrigPolynomial tapered;
    tapered.dim = dim;
    for (const auto& [m, c] : raw.terms) {
      double w = 1;
      for (int j = 0; j < dim; ++j) w *= 1.0 - std::abs(m[j]) / (degree + 1.0);
      tapered.terms[m] = c * w;
    }
    double tap_err = sup_deviation(f, tapered, verify);
    if (tap_err < best.sup_error) {
      best.sup_error = tap_err;
      best.poly = tapered;
      best.degree = degree;
      best.tapered = true;
    }
    if (tap_err <= delta / 2) {
      best.ok = true;
      return best;
    }
  }
  return best;  // ok = false, carries the best achieved error
}

std::complex<double> progression_average(const TorusEvaluator& f, const TorusPoint& theta,
                                         const Progression& p) {
  if (p.length <= 0) throw invalid_argument("progression_average: empty progression");
  std::complex<double> acc = 0;
  for (long j = 0; j < p.length; ++j) acc += f(theta.orbit(p.start + j * p.step));
  return acc / static_cast<double>(p.length);
}

std::complex<double> progression_average(const TrigPolynomial& f, const TorusPoint& theta,
                                         const Progression& p) {
  return progression_average([&f](const std::vector<double>& x) { return f.eval(x); },
                             theta, p);
}

ProgressionDiagnostic progression_bound(const TrigPolynomial& f, const TorusPoint& theta,
                                        const Progression& p, double truncation_error) {
  if (p.length <= 0) throw invalid_argument("progression_bound: empty progression");
  if (f.dim != theta.dim())
    throw invalid_argument("progression_bound: dimension mismatch");
  ProgressionDiagnostic diag;
  diag.truncation_error = truncation_error;
  for (const auto& [m, c] : f.terms) {
    bool zero = true;
    for (int mj : m) zero = zero && mj == 0;
    if (zero) continue;
    Rational beta_h = 0;
    for (int j = 0; j < f.dim; ++j) beta_h += Rational(m[j]) * theta.coords[j];
    beta_h *= Rational(p.step);
    double nrm = to_double(torus_norm(beta_h));
    // |E_{n in P} e(beta n)| <= 1/(2 L ||beta h||) by the geometric sum
    double geom = nrm == 0 ? 1.0 : std::min(1.0, 1.0 / (2.0 * p.length * nrm));
    TermBound tb;
    tb.m = m;
    tb.coeff_abs = std::abs(c);
    tb.geom_bound = geom;
    tb.contribution = tb.coeff_abs * geom;
    diag.geometric_total += tb.contribution;
    diag.terms.push_back(std::move(tb));
  }
  diag.total_bound = diag.geometric_total + 2.0 * truncation_error;
  return diag;
}

std::complex<double> structured_average(const StructuredEvaluator& f, long q,
                                        const TorusPoint& theta, long n_param) {
  if (q <= 0) throw invalid_argument("structured_average: q must be positive");
  if (n_param <= 0) throw invalid_argument("structured_average: N must be positive");
  std::complex<double> acc = 0;
  for (long n = 1; n <= n_param; ++n)
    acc += f(static_cast<double>(n) / n_param, n % q, theta.orbit(n));
  return acc / static_cast<double>(n_param);
}

StructuredExpansion structured_truncate(const StructuredEvaluator& f, long q, int dim,
                                        double lip, double delta,
                                        const CountingConfig& cfg) {
  if (q <= 0) throw invalid_argument("structured_truncate: q must be positive");
  (void)lip;
  StructuredExpansion best;
  best.q = q;
  best.dim = dim;
  best.sup_error = -1;

  TorusGrid zgrid{dim, cfg.torus_grid, 1};
  for (int j = 0; j < dim; ++j) zgrid.total *= cfg.torus_grid;

  int max_degree = dim > 0 ? degree_budget(dim, cfg) : cfg.max_degree;
  for (int degree = 2; degree <= max_degree; degree *= 2) {
    int gx = std::max(4 * (degree + 1), 64);
    int zside = std::max(4 * (degree + 1), 16);
    if (dim == 0) zside = 1;
    long ztotal = 1;
    for (int j = 0; j < dim; ++j) ztotal *= zside;

    // sample the even reflection G(x, y, z) = F(|x|, y, z), x over [-1, 1)
    std::vector<std::complex<double>> samples(static_cast<size_t>(gx) * q * ztotal);
    for (int ix = 0; ix < gx; ++ix) {
      double x = -1.0 + 2.0 * ix / gx;
      for (long y = 0; y < q; ++y)
        for (long iz = 0; iz < ztotal; ++iz) {
          std::vector<double> z(dim);
          long rem = iz;
          for (int j = 0; j < dim; ++j) {
            z[j] = static_cast<double>(rem % zside) / zside;
            rem /= zside;
          }
          samples[(static_cast<size_t>(ix) * q + y) * ztotal + iz] = f(std::abs(x), y, z);
        }
    }

    std::vector<std::vector<int>> zfreqs;
    if (dim > 0)
      l1_ball(dim, degree, zfreqs);
    else
      zfreqs.push_back({});

    StructuredExpansion cur;
    cur.q = q;
    cur.dim = dim;
    cur.degree = degree;
    for (int k = 0; k <= degree; ++k)
      for (long a = 0; a < q; ++a)
        for (const auto& m : zfreqs) {
          std::complex<double> acc = 0;
          for (int ix = 0; ix < gx; ++ix) {
            double x = -1.0 + 2.0 * ix / gx;
            double ck = std::cos(kPi * k * x);
            for (long y = 0; y < q; ++y) {
              double py = -kTwoPi * a * y / q;
              for (long iz = 0; iz < ztotal; ++iz) {
                double phase = py;
                long rem = iz;
                for (int j = 0; j < dim; ++j) {
                  phase += -kTwoPi * m[j] * (static_cast<double>(rem % zside) / zside);
                  rem /= zside;
                }
                acc += samples[(static_cast<size_t>(ix) * q + y) * ztotal + iz] * ck *
                       std::complex<double>{std::cos(phase), std::sin(phase)};
              }
            }
          }
          acc /= static_cast<double>(gx) * q * ztotal;
          if (k > 0) acc *= 2.0;  // cosine doubling for the reflected pair
          PhiTerm term;
          term.k = k;
          term.a = a;
          term.m = m.empty() ? std::vector<int>{} : m;
          term.coeff = acc;
          cur.terms.push_back(std::move(term));
        }

    // measured uniform error on the verification grid over [0,1] x Z/q x T^d
    double worst = 0;
    for (int ix = 0; ix <= cfg.unit_grid; ++ix) {
      double x = static_cast<double>(ix) / cfg.unit_grid;
      for (long y = 0; y < q; ++y)
        for (long iz = 0; iz < (dim > 0 ? zgrid.total : 1); ++iz) {
          std::vector<double> z = dim > 0 ? zgrid.point(iz) : std::vector<double>{};
          std::complex<double> approx = 0;
          for (const auto& t : cur.terms) {
            double phase = kTwoPi * t.a * y / q;
            for (int j = 0; j < dim; ++j) phase += kTwoPi * t.m[j] * z[j];
            approx += t.coeff * std::cos(kPi * t.k * x) *
                      std::complex<double>{std::cos(phase), std::sin(phase)};
          }
          worst = std::max(worst, std::abs(f(x, y, z) - approx));
        }
    }
    cur.sup_error = worst;
    if (best.sup_error < 0 || worst < best.sup_error) best = cur;
    if (worst <= delta / 2) {
      best.ok = true;
      return best;
    }
  }
  return best;
}

StructuredDiagnostic structured_bound(const StructuredExpansion& expansion,
                                      const TorusPoint& theta, long n_param) {
  if (expansion.dim != theta.dim())
    throw invalid_argument("structured_bound: dimension mismatch");
  StructuredDiagnostic diag;
  diag.truncation_error = expansion.sup_error;
  const long q = expansion.q;
  for (const auto& t : expansion.terms) {
    bool m_zero = true;
    for (int mj : t.m) m_zero = m_zero && mj == 0;
    PhiTermBound row;
    row.k = t.k;
    row.a = t.a;
    row.m = t.m;
    row.coeff_abs = std::abs(t.coeff);
    if (t.k == 0 && t.a == 0 && m_zero) {
      row.case_tag = "constant";
      diag.terms.push_back(std::move(row));
      continue;
    }
    if (!m_zero)
      row.case_tag = "m_nonzero";  // cleared by q: irrationality of q m . theta
    else if (t.a != 0)
      row.case_tag = "residue";
    else
      row.case_tag = "boundary";  // pure k/2N oscillation, O_k(1/N)

    Rational base = Rational(t.a, q);
    for (int j = 0; j < expansion.dim; ++j) base += Rational(t.m[j]) * theta.coords[j];
    for (int sign : {+1, -1}) {
      Rational beta = base + Rational(sign * t.k, 2 * n_param);
      double nrm = to_double(torus_norm(beta));
      double b = nrm == 0 ? 1.0 : std::min(1.0, 1.0 / (2.0 * n_param * nrm));
      (sign > 0 ? row.bound_plus : row.bound_minus) = b;
    }
    // cos(pi k x) = (e(kx/2) + e(-kx/2))/2 splits the term into two phases
    row.contribution = row.coeff_abs * 0.5 * (row.bound_plus + row.bound_minus);
    diag.geometric_total += row.contribution;
    diag.terms.push_back(std::move(row));
  }
  diag.total_bound = diag.geometric_total + 2.0 * diag.truncation_error;
  return diag;
}

IntegralEstimate integral_estimate(const TrigPolynomial& f) {
  return {f.c0(), 0.0};
}

IntegralEstimate integral_estimate(const TorusEvaluator& f, int dim, double lip,
                                   const CountingConfig& cfg) {
  if (dim < 1) throw invalid_argument("integral_estimate: dimension must be >= 1");
  TorusGrid grid{dim, cfg.torus_grid, 1};
  for (int j = 0; j < dim; ++j) grid.total *= cfg.torus_grid;
  std::complex<double> acc = 0;
  for (long i = 0; i < grid.total; ++i) acc += f(grid.point(i));
  double spacing = std::sqrt(static_cast<double>(dim)) / (2.0 * cfg.torus_grid);
  return {acc / static_cast<double>(grid.total), lip * spacing};
}

IntegralEstimate integral_estimate_structured(const StructuredEvaluator& f, long q,
                                              int dim, double lip,
                                              const CountingConfig& cfg) {
  if (q <= 0) throw invalid_argument("integral_estimate_structured: q must be positive");
  long ztotal = 1;
  for (int j = 0; j < dim; ++j) ztotal *= cfg.torus_grid;
  std::complex<double> acc = 0;
  for (int ix = 0; ix < cfg.unit_grid; ++ix) {
    double x = (ix + 0.5) / cfg.unit_grid;
    for (long y = 0; y < q; ++y)
      for (long iz = 0; iz < ztotal; ++iz) {
        std::vector<double> z(dim);
        long rem = iz;
        for (int j = 0; j < dim; ++j) {
          z[j] = static_cast<double>(rem % cfg.torus_grid) / cfg.torus_grid;
          rem /= cfg.torus_grid;
        }
        acc += f(x, y, z);
      }
  }
  acc /= static_cast<double>(cfg.unit_grid) * q * ztotal;
  double spacing = 1.0 / (2.0 * cfg.unit_grid) +
                   std::sqrt(static_cast<double>(std::max(dim, 1))) /
                       (2.0 * cfg.torus_grid) * (dim > 0 ? 1.0 : 0.0);
  return {acc, lip * spacing};
}

}  // namespace areg
