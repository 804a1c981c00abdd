#include <doctest.h>

#include <algorithm>

#include "areg/inverse.hpp"
#include "oracles.hpp"

using namespace areg;

TEST_CASE("large_fourier_coefficient on the constant function") {
  IntervalFunction f(std::vector<double>(16, 1.0));
  FrequencyHit hit = large_fourier_coefficient(f);
  CHECK(hit.theta == Rational(0));
  CHECK(hit.achieved == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("large_fourier_coefficient recovers the alternating character") {
  std::vector<double> v(8);
  for (int n = 1; n <= 8; ++n) v[n - 1] = n % 2 == 0 ? 1.0 : -1.0;
  FrequencyHit hit = large_fourier_coefficient(IntervalFunction(v));
  CHECK(hit.theta == Rational(1, 2));
  CHECK(hit.achieved == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("large_fourier_coefficient matches the exhaustive oracle") {
  Rng rng(71);
  std::vector<double> v(64);
  for (double& x : v) x = rng.bits() & 1 ? 1.0 : -1.0;
  IntervalFunction f(v);
  FrequencyHit hit = large_fourier_coefficient(f);
  oracles::PhaseScan scan = oracles::best_phase(f);
  CHECK(hit.r == scan.r);
  CHECK(hit.achieved == doctest::Approx(scan.achieved).epsilon(1e-12));
}

TEST_CASE("maximal_function basics") {
  IntervalFunction zero(std::vector<double>(32, 0.0));
  CHECK(maximal_function(zero, 0.5) == 0.0);

  IntervalFunction at_t(std::vector<double>(32, 0.5));
  // every point sits at distance zero, so the finest radius wins: 2^11
  CHECK(maximal_function(at_t, 0.5) == doctest::Approx(2048.0));

  std::vector<double> ramp(16);
  for (int n = 1; n <= 16; ++n) ramp[n - 1] = n / 16.0;
  IntervalFunction phi(ramp);
  double direct = 0;
  for (int k = 1; k <= 12; ++k) {
    double r = std::ldexp(1.0, -k);
    int count = 0;
    for (double x : ramp)
      if (std::abs(x - 0.5) <= r) ++count;
    direct = std::max(direct, count / (2.0 * r * 16));
  }
  CHECK(maximal_function(phi, 0.5) == doctest::Approx(std::min(direct, 4096.0)));

  CHECK_THROWS_AS(maximal_function(phi, 1.5), invalid_argument);
}

TEST_CASE("correlating_set on the constant function returns the full set") {
  IntervalFunction f(std::vector<double>(32, 1.0));
  CorrelatingSetResult res = correlating_set(f, 0.5);
  CHECK(res.achieved == doctest::Approx(1.0).epsilon(1e-12));
  for (double v : res.set.indicator.values()) CHECK(v == 1.0);
}

TEST_CASE("correlating_set on zero reports an empty correlation") {
  IntervalFunction f(std::vector<double>(32, 0.0));
  CorrelatingSetResult res = correlating_set(f, 0.5);
  CHECK(res.empty);
  CHECK(res.achieved == 0.0);
}

TEST_CASE("correlating_set finds structure in a pure cosine") {
  const int n = 128;
  std::vector<double> v(n);
  for (int i = 1; i <= n; ++i)
    v[i - 1] = std::cos(2.0 * std::numbers::pi * i * 5.0 / 128.0);
  IntervalFunction f(v);
  CorrelatingSetResult res = correlating_set(f, 0.25);
  CHECK(res.theta == Rational(5, 128));
  CHECK(res.achieved >= 0.25);
  // the recorded correlation is the recomputed one
  CHECK(res.achieved ==
        doctest::Approx(std::abs(correlation(f, res.set.indicator))).epsilon(1e-12));
  REQUIRE(res.set.witnesses.size() == 1);
  const WitnessRecord& w = res.set.witnesses[0];
  CHECK(w.achieved_l2_error <= 0.2);
  // witness error is measured, to 1e-12
  IntervalFunction approx = w.witness.eval_on(n, f.ambient_modulus());
  CHECK(w.achieved_l2_error ==
        doctest::Approx(l2_norm(subtract(res.set.indicator, approx))).epsilon(1e-12));
}

TEST_CASE("level sets are monotone and satisfy the layer-cake identity") {
  Rng rng(83);
  const int n = 200;
  auto phi = oracles::random_function(rng, n, 0.0, 1.0);

  auto level_set = [&phi](double t) {
    std::vector<bool> s(phi.n());
    for (int i = 0; i < phi.n(); ++i) s[i] = phi.values()[i] >= t;
    return s;
  };
  auto a = level_set(0.3), b = level_set(0.6);
  for (int i = 0; i < n; ++i)
    if (b[i]) CHECK(a[i]);  // t <= t' forces E_{t'} inside E_t

  // integral of |E_t|/N over t via the sorted-value Abel sum
  std::vector<double> vals = phi.values();
  std::sort(vals.begin(), vals.end());
  double integral = 0, prev = 0;
  for (int i = 0; i < n; ++i) {
    double t = vals[i];
    long count_ge = n - i;  // |{phi >= t}| for t in (prev, vals[i]]
    integral += (t - prev) * count_ge / n;
    prev = t;
  }
  CHECK(std::abs(integral - mean(phi)) < 1e-6);
}

TEST_CASE("planted single frequencies are recovered exactly") {
  Rng rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 128, m = 256;
    long planted = 1 + static_cast<long>(rng.below(127));
    double amp = rng.uniform(0.4, 0.9);
    std::vector<double> v(n);
    for (int i = 1; i <= n; ++i)
      v[i - 1] = amp * std::cos(2.0 * std::numbers::pi * planted * i / m) +
                 rng.uniform(-0.05, 0.05);
    FrequencyHit hit = large_fourier_coefficient(IntervalFunction(v, m));
    CHECK(hit.theta == make_rational(planted, m));
  }
}
