#include "areg/synth.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "areg/rng.hpp"

namespace areg {

namespace {

std::vector<double> parse_params(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw invalid_argument("generator: bad number '" + tok + "'");
    }
    if (pos != tok.size()) throw invalid_argument("generator: bad number '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> generate(const std::string& spec, int n, Rng& rng);

std::vector<double> generate_mix(const std::string& params, int n, Rng& rng) {
  std::vector<double> acc(n, 0.0);
  std::stringstream ss(params);
  std::string part;
  bool any = false;
  while (std::getline(ss, part, '|')) {
    auto star = part.find('*');
    if (star == std::string::npos)
      throw invalid_argument("mix: component '" + part + "' needs 'weight*generator'");
    double w;
    try {
      w = std::stod(part.substr(0, star));
    } catch (const std::exception&) {
      throw invalid_argument("mix: bad weight in '" + part + "'");
    }
    std::vector<double> comp = generate(part.substr(star + 1), n, rng);
    for (int i = 0; i < n; ++i) acc[i] += w * comp[i];
    any = true;
  }
  if (!any) throw invalid_argument("mix: no components");
  for (double& v : acc) v = std::min(1.0, std::max(0.0, v));
  return acc;
}

std::vector<double> generate(const std::string& spec, int n, Rng& rng) {
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "constant") {
    auto p = parse_params(params);
    if (p.size() != 1) throw invalid_argument("constant:c needs one parameter");
    if (p[0] < 0 || p[0] > 1) throw invalid_argument("constant: c must lie in [0,1]");
    return std::vector<double>(n, p[0]);
  }
  if (kind == "interval") {
    auto p = parse_params(params);
    if (p.size() != 2) throw invalid_argument("interval:a,b needs two parameters");
    std::vector<double> v(n, 0.0);
    for (int i = 1; i <= n; ++i)
      if (i >= p[0] && i <= p[1]) v[i - 1] = 1.0;
    return v;
  }
  if (kind == "residue") {
    auto p = parse_params(params);
    if (p.size() != 2 || p[1] < 1) throw invalid_argument("residue:a,q needs q >= 1");
    long q = static_cast<long>(p[1]);
    long a = (static_cast<long>(p[0]) % q + q) % q;
    std::vector<double> v(n, 0.0);
    for (int i = 1; i <= n; ++i)
      if (i % q == a) v[i - 1] = 1.0;
    return v;
  }
  if (kind == "cosine") {
    auto p = parse_params(params);
    if (p.size() < 2 || p.size() > 3)
      throw invalid_argument("cosine:r,Q[,amp] needs two or three parameters");
    double amp = p.size() == 3 ? p[2] : 1.0;
    if (p[1] == 0) throw invalid_argument("cosine: Q must be nonzero");
    if (std::abs(amp) > 1) throw invalid_argument("cosine: |amp| must be <= 1");
    std::vector<double> v(n);
    bool integral = std::floor(p[0]) == p[0] && std::floor(p[1]) == p[1] && p[1] > 0;
    for (int i = 1; i <= n; ++i) {
      // reduce the angle mod Q and fold by evenness so residues that agree
      // mathematically get bit-equal values
      double phase;
      if (integral) {
        long big_q = static_cast<long>(p[1]);
        long k = (static_cast<long>(p[0]) * i) % big_q;
        if (k < 0) k += big_q;
        if (2 * k > big_q) k = big_q - k;  // fold while still exact
        phase = static_cast<double>(k) / p[1];
      } else {
        phase = p[0] * i / p[1];
      }
      v[i - 1] = 0.5 * (1.0 + amp * std::cos(2.0 * std::numbers::pi * phase));
    }
    return v;
  }
  if (kind == "uniform") {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform();
    return v;
  }
  if (kind == "mix") return generate_mix(params, n, rng);
  throw invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace

IntervalFunction synthesize(const std::string& spec, int n, int modulus,
                            std::uint64_t seed) {
  if (n < 1) throw invalid_argument("synthesize: N must be >= 1");
  Rng rng(seed);
  return IntervalFunction(generate(spec, n, rng), modulus);
}

TrigPolynomial seeded_trig_polynomial(int dim, int degree, double lip_cap,
                                      std::uint64_t seed) {
  if (dim < 1 || degree < 1 || !(lip_cap > 0))
    throw invalid_argument("seeded_trig_polynomial: bad parameters");
  Rng rng(seed);
  TrigPolynomial p;
  p.dim = dim;
  std::vector<int> m(dim, 0);
  std::function<void(int, int)> rec = [&](int coord, int rem) {
    if (coord == dim) {
      bool zero = true, canonical_seen = false;
      for (int v : m) {
        if (v > 0 && zero) canonical_seen = true;
        if (v != 0) zero = false;
      }
      if (zero) {
        p.terms[m] = {rng.uniform(-1.0, 1.0), 0.0};
      } else if (canonical_seen) {
        // fill conjugate pairs so the polynomial is real-valued
        std::complex<double> c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        std::vector<int> neg(dim);
        for (int j = 0; j < dim; ++j) neg[j] = -m[j];
        p.terms[m] = c;
        p.terms[neg] = std::conj(c);
      }
      return;
    }
    for (int v = -rem; v <= rem; ++v) {
      m[coord] = v;
      rec(coord + 1, rem - std::abs(v));
    }
  };
  rec(0, degree);
  double lip = p.lip_bound();
  double scale = lip > 0 ? lip_cap / lip : 1.0;
  for (auto& [mm, c] : p.terms) c *= scale;
  return p;
}

}  // namespace areg
