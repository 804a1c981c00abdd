#pragma once

#include <complex>
#include <map>
#include <vector>

#include "areg/interval_function.hpp"

namespace areg {

// sum_m c_m e(m.x) on T^d, terms keyed by the frequency vector.
struct TrigPolynomial {
  int dim = 0;
  std::map<std::vector<int>, std::complex<double>> terms;

  std::complex<double> c0() const;
  std::complex<double> eval(const std::vector<double>& x) const;

  // sum |c_m| (1 + 2 pi |m|_2), a Lipschitz-norm bound
  double lip_bound() const;

  ordered_json to_json() const;
  static TrigPolynomial from_json(const ordered_json& j);
};

}  // namespace areg
