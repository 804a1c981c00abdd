#pragma once

#include <complex>
#include <vector>

#include "areg/interval_function.hpp"

namespace areg {

using Complex = std::complex<double>;

// Fourier coefficients of a function on Z/MZ, indexed by r in [0, M).
struct Spectrum {
  int modulus = 0;
  std::vector<Complex> coeffs;

  ordered_json to_json() const;
  static Spectrum from_json(const ordered_json& j);
};

// f-hat(r) = E_x f(x) e_M(-rx). Naive O(M^2); desk scale keeps M <= 16384.
Spectrum dft(const std::vector<Complex>& f);
Spectrum dft(const std::vector<double>& f);

// Inversion: f(x) = sum_r f-hat(r) e_M(rx).
std::vector<Complex> idft(const Spectrum& s);

// U^2(Z/MZ) norm via the convolution identity
//   ||f||^4 = M^-3 sum_s |sum_x f(x) f(s-x)|^2.
double u2_norm_cyclic(const std::vector<Complex>& f);
double u2_norm_cyclic(const std::vector<double>& f);

// U^2([N]) norm: cyclic norm of the zero-extension normalized by the
// indicator of [N]. Independent of the ambient modulus.
double u2_norm_interval(const IntervalFunction& f);

// (1/N) sum_n f(n) e_M(-r n), the linear-phase correlation at r/M.
Complex phase_correlation(const IntervalFunction& f, long r, int modulus);

}  // namespace areg
