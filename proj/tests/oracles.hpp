#pragma once

// Test-side oracles, kept independent of the library's computation paths:
// the U^2 quadruple average by the O(M^3) triple loop, exhaustive phase
// scans, and direct-definition helpers.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "areg/interval_function.hpp"
#include "areg/rng.hpp"

namespace oracles {

using Complex = std::complex<double>;

// E_{a,h1,h2} f(a) conj f(a+h1) conj f(a+h2) f(a+h1+h2), triple loop
inline Complex quad_average(const std::vector<Complex>& f) {
  const int m = static_cast<int>(f.size());
  Complex s = 0;
  for (int a = 0; a < m; ++a)
    for (int h1 = 0; h1 < m; ++h1)
      for (int h2 = 0; h2 < m; ++h2)
        s += f[a] * std::conj(f[(a + h1) % m]) * std::conj(f[(a + h2) % m]) *
             f[(a + h1 + h2) % m];
  return s / (static_cast<double>(m) * m * m);
}

inline std::vector<Complex> embed_complex(const areg::IntervalFunction& f) {
  std::vector<Complex> cyc(f.ambient_modulus(), Complex{0, 0});
  for (int n = 1; n <= f.n(); ++n) cyc[n] = f(n);
  return cyc;
}

// interval U^2 norm straight from the definition
inline double u2_interval(const areg::IntervalFunction& f) {
  std::vector<Complex> ind(f.ambient_modulus(), Complex{0, 0});
  for (int n = 1; n <= f.n(); ++n) ind[n] = 1.0;
  double num = quad_average(embed_complex(f)).real();
  double den = quad_average(ind).real();
  return std::pow(num / den, 0.25);
}

// exhaustive best linear phase over r in Z/MZ
struct PhaseScan {
  long r = 0;
  double achieved = -1;
};
inline PhaseScan best_phase(const areg::IntervalFunction& f) {
  const int m = f.ambient_modulus();
  PhaseScan best;
  for (long r = 0; r < m; ++r) {
    Complex acc = 0;
    for (int n = 1; n <= f.n(); ++n)
      acc += f(n) * std::polar(1.0, -2.0 * std::numbers::pi * r * n / m);
    double a = std::abs(acc) / f.n();
    if (a > best.achieved) {
      best.achieved = a;
      best.r = r;
    }
  }
  return best;
}

inline areg::IntervalFunction random_function(areg::Rng& rng, int n, double lo, double hi,
                                              int modulus = 0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return areg::IntervalFunction(std::move(v), modulus);
}

}  // namespace oracles
