#pragma once

#include <functional>

#include "areg/config.hpp"
#include "areg/torus.hpp"
#include "areg/trig_poly.hpp"

namespace areg {

using TorusEvaluator = std::function<std::complex<double>(const std::vector<double>&)>;
// F(x, y, z) on [0,1] x Z/qZ x T^d
using StructuredEvaluator =
    std::function<std::complex<double>(double, long, const std::vector<double>&)>;

struct FejerResult {
  bool ok = false;
  TrigPolynomial poly;
  double sup_error = 0;  // measured on the verification grid
  int degree = 0;
  bool tapered = false;  // raw truncation is tried first, Fejer taper second
};

// Truncated Fourier expansion with measured uniform error <= delta/2.
// The degree grows until the grid check passes or the budget runs out;
// failure carries the best achieved error.
FejerResult fejer_truncate(const TorusEvaluator& f, int dim, double lip, double delta,
                           const CountingConfig& cfg = {});

struct Progression {
  long start = 1, step = 1, length = 0;  // {start + j*step : 0 <= j < length}
};

std::complex<double> progression_average(const TorusEvaluator& f, const TorusPoint& theta,
                                         const Progression& p);
std::complex<double> progression_average(const TrigPolynomial& f, const TorusPoint& theta,
                                         const Progression& p);

struct TermBound {
  std::vector<int> m;
  double coeff_abs = 0;
  double geom_bound = 0;  // min(1, 1/(2 L ||(m.theta) h||)), exact norm
  double contribution = 0;
};

struct ProgressionDiagnostic {
  double geometric_total = 0;   // sum of per-term contributions
  double truncation_error = 0;  // 0 when the input is already a polynomial
  double total_bound = 0;
  std::vector<TermBound> terms;
};

ProgressionDiagnostic progression_bound(const TrigPolynomial& f, const TorusPoint& theta,
                                        const Progression& p, double truncation_error = 0.0);

// E_{n <= N} F(n/N, n mod q, theta n) by direct summation.
std::complex<double> structured_average(const StructuredEvaluator& f, long q,
                                        const TorusPoint& theta, long n_param);

// Term of the reflected expansion: cos(pi k x) e(a y / q) e(m . z).
struct PhiTerm {
  int k = 0;
  long a = 0;
  std::vector<int> m;
  std::complex<double> coeff;
};

struct StructuredExpansion {
  bool ok = false;
  long q = 1;
  int dim = 0;
  std::vector<PhiTerm> terms;
  double sup_error = 0;
  int degree = 0;
};

// Expansion of the even reflection F(|x|, y, z) over half-integer x
// frequencies; the basis matches the e(+-k x/2) pairing of the proof.
StructuredExpansion structured_truncate(const StructuredEvaluator& f, long q, int dim,
                                        double lip, double delta,
                                        const CountingConfig& cfg = {});

struct PhiTermBound {
  int k = 0;
  long a = 0;
  std::vector<int> m;
  std::string case_tag;  // "constant" | "m_nonzero" | "residue" | "boundary"
  double coeff_abs = 0;
  double bound_plus = 0;   // for the +k/2N branch
  double bound_minus = 0;  // for the -k/2N branch
  double contribution = 0;
};

struct StructuredDiagnostic {
  double geometric_total = 0;
  double truncation_error = 0;
  double total_bound = 0;
  std::vector<PhiTermBound> terms;
};

// Three-case accounting of the proof: m != 0 falls to irrationality, m = 0
// and a != 0 to residue separation, otherwise the k/2N boundary term.
StructuredDiagnostic structured_bound(const StructuredExpansion& expansion,
                                      const TorusPoint& theta, long n_param);

struct IntegralEstimate {
  std::complex<double> value;
  double error_bound = 0;
};

IntegralEstimate integral_estimate(const TrigPolynomial& f);  // c0, bound 0
IntegralEstimate integral_estimate(const TorusEvaluator& f, int dim, double lip,
                                   const CountingConfig& cfg = {});
IntegralEstimate integral_estimate_structured(const StructuredEvaluator& f, long q,
                                              int dim, double lip,
                                              const CountingConfig& cfg = {});

}  // namespace areg
