#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "areg/errors.hpp"

namespace areg {

using ordered_json = nlohmann::ordered_json;

// A real-valued function on [N] = {1..N}, carried with the ambient modulus
// M >= 2N of its zero-extension to Z/MZ. values[i] is f(i+1).
class IntervalFunction {
 public:
  IntervalFunction() = default;
  IntervalFunction(std::vector<double> values, int ambient_modulus = 0);

  int n() const { return static_cast<int>(values_.size()); }
  int ambient_modulus() const { return m_; }
  double operator()(int n) const { return values_.at(n - 1); }  // 1-based
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  // zero-extension onto Z/MZ, index x in [0, M)
  std::vector<double> embed() const;

  bool in_range(double lo, double hi, double tol = 0.0) const;

  ordered_json to_json() const;
  static IntervalFunction from_json(const ordered_json& j);

 private:
  std::vector<double> values_;
  int m_ = 0;
};

double l2_norm(const IntervalFunction& f);
// E_{n in [N]} f(n) g(n); lengths must match.
double correlation(const IntervalFunction& f, const IntervalFunction& g);
double mean(const IntervalFunction& f);

// f - g pointwise, same n and modulus required.
IntervalFunction subtract(const IntervalFunction& f, const IntervalFunction& g);

}  // namespace areg
