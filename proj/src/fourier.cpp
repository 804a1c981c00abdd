#include "areg/fourier.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "areg/config.hpp"

namespace areg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Complex> unit_roots(int m, double sign) {
  std::vector<Complex> w(m);
  for (int k = 0; k < m; ++k) {
    double ang = sign * kTwoPi * k / m;
    w[k] = {std::cos(ang), std::sin(ang)};
  }
  return w;
}

double quartic_sum(const std::vector<Complex>& f) {
  const int m = static_cast<int>(f.size());
  double total = 0;
  std::vector<Complex> conv(m);
  for (int s = 0; s < m; ++s) {
    Complex acc = 0;
    for (int x = 0; x < m; ++x) {
      int w = s - x;
      if (w < 0) w += m;
      acc += f[x] * f[w];
    }
    conv[s] = acc;
  }
  for (int s = 0; s < m; ++s) total += std::norm(conv[s]);
  return total / (static_cast<double>(m) * m * m);
}

double quartic_sum(const std::vector<double>& f) {
  const int m = static_cast<int>(f.size());
  double total = 0;
  for (int s = 0; s < m; ++s) {
    double acc = 0;
    for (int x = 0; x < m; ++x) {
      int w = s - x;
      if (w < 0) w += m;
      acc += f[x] * f[w];
    }
    total += acc * acc;
  }
  return total / (static_cast<double>(m) * m * m);
}

double fourth_root(double radicand) {
  if (radicand < -tolerances().norm)
    throw std::logic_error("U^2 radicand negative beyond tolerance");
  if (radicand < 0) radicand = 0;
  return std::pow(radicand, 0.25);
}

// ||1_[N]||^4_{U2(Z/MZ)} for the zero-extended indicator; cached per (n, m).
double indicator_quartic(int n, int m) {
  static std::map<std::pair<int, int>, double> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
  }
  std::vector<double> ind(m, 0.0);
  for (int x = 1; x <= n; ++x) ind[x] = 1.0;
  double v = quartic_sum(ind);
  std::lock_guard<std::mutex> lock(mu);
  cache[{n, m}] = v;
  return v;
}

}  // namespace

Spectrum dft(const std::vector<Complex>& f) {
  const int m = static_cast<int>(f.size());
  if (m == 0) throw invalid_argument("dft of empty input");
  auto w = unit_roots(m, -1.0);
  Spectrum s;
  s.modulus = m;
  s.coeffs.resize(m);
  for (int r = 0; r < m; ++r) {
    Complex acc = 0;
    long idx = 0;
    for (int x = 0; x < m; ++x) {
      acc += f[x] * w[idx];
      idx += r;
      if (idx >= m) idx -= m;
    }
    s.coeffs[r] = acc / static_cast<double>(m);
  }
  return s;
}

Spectrum dft(const std::vector<double>& f) {
  return dft(std::vector<Complex>(f.begin(), f.end()));
}

std::vector<Complex> idft(const Spectrum& s) {
  const int m = s.modulus;
  if (m == 0 || static_cast<int>(s.coeffs.size()) != m)
    throw invalid_argument("idft of malformed spectrum");
  auto w = unit_roots(m, 1.0);
  std::vector<Complex> f(m);
  for (int x = 0; x < m; ++x) {
    Complex acc = 0;
    long idx = 0;
    for (int r = 0; r < m; ++r) {
      acc += s.coeffs[r] * w[idx];
      idx += x;
      if (idx >= m) idx -= m;
    }
    f[x] = acc;
  }
  return f;
}

double u2_norm_cyclic(const std::vector<Complex>& f) {
  if (f.empty()) throw invalid_argument("u2_norm_cyclic of empty input");
  return fourth_root(quartic_sum(f));
}

double u2_norm_cyclic(const std::vector<double>& f) {
  if (f.empty()) throw invalid_argument("u2_norm_cyclic of empty input");
  return fourth_root(quartic_sum(f));
}

double u2_norm_interval(const IntervalFunction& f) {
  const int m = f.ambient_modulus();
  if (m < 2 * f.n()) throw invalid_argument("u2_norm_interval: M < 2N");
  double num = quartic_sum(f.embed());
  double den = indicator_quartic(f.n(), m);
  return fourth_root(num / den);
}

Complex phase_correlation(const IntervalFunction& f, long r, int modulus) {
  Complex acc = 0;
  for (int n = 1; n <= f.n(); ++n) {
    long k = (r % modulus) * n % modulus;
    double ang = -kTwoPi * k / modulus;
    acc += f(n) * Complex{std::cos(ang), std::sin(ang)};
  }
  return acc / static_cast<double>(f.n());
}

ordered_json Spectrum::to_json() const {
  std::vector<double> re(coeffs.size()), im(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    re[i] = coeffs[i].real();
    im[i] = coeffs[i].imag();
  }
  ordered_json j;
  j["m"] = modulus;
  j["re"] = re;
  j["im"] = im;
  return j;
}

Spectrum Spectrum::from_json(const ordered_json& j) {
  Spectrum s;
  s.modulus = j.at("m").get<int>();
  auto re = j.at("re").get<std::vector<double>>();
  auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size() || static_cast<int>(re.size()) != s.modulus)
    throw invalid_argument("spectrum file: coefficient arrays malformed");
  s.coeffs.resize(re.size());
  for (size_t i = 0; i < re.size(); ++i) s.coeffs[i] = {re[i], im[i]};
  return s;
}

}  // namespace areg
