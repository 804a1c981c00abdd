#include "areg/trig_poly.hpp"

#include <cmath>
#include <numbers>

namespace areg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::complex<double> TrigPolynomial::c0() const {
  auto it = terms.find(std::vector<int>(dim, 0));
  return it == terms.end() ? std::complex<double>{0, 0} : it->second;
}

std::complex<double> TrigPolynomial::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim)
    throw invalid_argument("trig polynomial: point dimension mismatch");
  std::complex<double> acc = 0;
  for (const auto& [m, c] : terms) {
    double phase = 0;
    for (int j = 0; j < dim; ++j) phase += m[j] * x[j];
    acc += c * std::complex<double>{std::cos(kTwoPi * phase), std::sin(kTwoPi * phase)};
  }
  return acc;
}

double TrigPolynomial::lip_bound() const {
  double s = 0;
  for (const auto& [m, c] : terms) {
    double norm_sq = 0;
    for (int mj : m) norm_sq += static_cast<double>(mj) * mj;
    s += std::abs(c) * (1.0 + kTwoPi * std::sqrt(norm_sq));
  }
  return s;
}

ordered_json TrigPolynomial::to_json() const {
  ordered_json j;
  j["dim"] = dim;
  ordered_json arr = ordered_json::array();
  for (const auto& [m, c] : terms) {
    ordered_json t;
    t["m"] = m;
    t["re"] = c.real();
    t["im"] = c.imag();
    arr.push_back(t);
  }
  j["terms"] = arr;
  return j;
}

TrigPolynomial TrigPolynomial::from_json(const ordered_json& j) {
  TrigPolynomial p;
  p.dim = j.at("dim").get<int>();
  for (const auto& t : j.at("terms")) {
    auto m = t.at("m").get<std::vector<int>>();
    if (static_cast<int>(m.size()) != p.dim)
      throw invalid_argument("trig polynomial: term dimension mismatch");
    p.terms[m] = {t.at("re").get<double>(), t.at("im").get<double>()};
  }
  return p;
}

}  // namespace areg
