#include "areg/interval_function.hpp"

#include <cmath>

namespace areg {

IntervalFunction::IntervalFunction(std::vector<double> values, int ambient_modulus)
    : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) throw invalid_argument("empty interval function");
  m_ = ambient_modulus == 0 ? 2 * n : ambient_modulus;
  if (m_ < 2 * n)
    throw invalid_argument("ambient modulus " + std::to_string(m_) +
                           " below 2N = " + std::to_string(2 * n));
}

std::vector<double> IntervalFunction::embed() const {
  std::vector<double> cyc(m_, 0.0);
  for (int i = 0; i < n(); ++i) cyc[i + 1] = values_[i];
  return cyc;
}

bool IntervalFunction::in_range(double lo, double hi, double tol) const {
  for (double v : values_)
    if (v < lo - tol || v > hi + tol) return false;
  return true;
}

ordered_json IntervalFunction::to_json() const {
  ordered_json j;
  j["n"] = n();
  j["m"] = m_;
  j["values"] = values_;
  return j;
}

IntervalFunction IntervalFunction::from_json(const ordered_json& j) {
  std::vector<double> vals = j.at("values").get<std::vector<double>>();
  int m = j.at("m").get<int>();
  int n = j.at("n").get<int>();
  if (n != static_cast<int>(vals.size()))
    throw invalid_argument("function file: n does not match values length");
  return IntervalFunction(std::move(vals), m);
}

double l2_norm(const IntervalFunction& f) {
  double s = 0;
  for (double v : f.values()) s += v * v;
  return std::sqrt(s / f.n());
}

double correlation(const IntervalFunction& f, const IntervalFunction& g) {
  if (f.n() != g.n()) throw invalid_argument("correlation: length mismatch");
  double s = 0;
  for (int i = 0; i < f.n(); ++i) s += f.values()[i] * g.values()[i];
  return s / f.n();
}

double mean(const IntervalFunction& f) {
  double s = 0;
  for (double v : f.values()) s += v;
  return s / f.n();
}

IntervalFunction subtract(const IntervalFunction& f, const IntervalFunction& g) {
  if (f.n() != g.n()) throw invalid_argument("subtract: length mismatch");
  std::vector<double> out(f.n());
  for (int i = 0; i < f.n(); ++i) out[i] = f.values()[i] - g.values()[i];
  return IntervalFunction(std::move(out), f.ambient_modulus());
}

}  // namespace areg
