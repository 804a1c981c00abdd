#include <doctest.h>

#include "areg/fourier.hpp"
#include "oracles.hpp"

using namespace areg;

namespace {
std::vector<Complex> character(int m, int r) {
  std::vector<Complex> f(m);
  for (int x = 0; x < m; ++x)
    f[x] = std::polar(1.0, 2.0 * std::numbers::pi * r * x / m);
  return f;
}
}  // namespace

TEST_CASE("dft of the constant function is a point mass at zero") {
  Spectrum s = dft(std::vector<double>(8, 1.0));
  CHECK(std::abs(s.coeffs[0] - Complex{1, 0}) < 1e-12);
  for (int r = 1; r < 8; ++r) CHECK(std::abs(s.coeffs[r]) < 1e-12);
}

TEST_CASE("dft of a character concentrates on its frequency") {
  Spectrum s = dft(character(8, 1));
  CHECK(std::abs(s.coeffs[1] - Complex{1, 0}) < 1e-12);
  for (int r = 0; r < 8; ++r)
    if (r != 1) CHECK(std::abs(s.coeffs[r]) < 1e-12);
}

TEST_CASE("dft of a point mass is flat") {
  std::vector<double> f(4, 0.0);
  f[0] = 1.0;
  Spectrum s = dft(f);
  for (int r = 0; r < 4; ++r) CHECK(std::abs(s.coeffs[r] - Complex{0.25, 0}) < 1e-12);
}

TEST_CASE("dft rejects empty input") {
  CHECK_THROWS_AS(dft(std::vector<double>{}), invalid_argument);
}

TEST_CASE("idft inverts dft pointwise") {
  Rng rng(11);
  for (int m : {5, 16, 97}) {
    std::vector<Complex> f(m);
    for (auto& v : f) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    auto back = idft(dft(f));
    for (int x = 0; x < m; ++x) CHECK(std::abs(back[x] - f[x]) < 1e-9);
  }
}

TEST_CASE("Parseval holds on random inputs") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 8 + static_cast<int>(rng.below(249));
    std::vector<Complex> f(m);
    double l2 = 0;
    for (auto& v : f) {
      v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      l2 += std::norm(v);
    }
    l2 /= m;
    Spectrum s = dft(f);
    double coeff_sq = 0;
    for (const auto& c : s.coeffs) coeff_sq += std::norm(c);
    CHECK(std::abs(coeff_sq - l2) < 1e-9);
  }
}

TEST_CASE("cyclic U2 norm of flat and character inputs is one") {
  CHECK(u2_norm_cyclic(std::vector<double>(12, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(u2_norm_cyclic(character(16, 5)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cyclic U2 norm of the interval indicator matches the quadruple count") {
  std::vector<double> f(8, 0.0);
  for (int n = 1; n <= 4; ++n) f[n] = 1.0;
  double direct = u2_norm_cyclic(f);
  CHECK(direct == doctest::Approx(std::pow(44.0 / 512.0, 0.25)).epsilon(1e-12));
  std::vector<Complex> fc(f.begin(), f.end());
  CHECK(direct ==
        doctest::Approx(std::pow(oracles::quad_average(fc).real(), 0.25)).epsilon(1e-12));
}

TEST_CASE("cyclic U2 norm agrees with the spectral fourth-moment formula") {
  Rng rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    int m = 6 + static_cast<int>(rng.below(120));
    std::vector<Complex> f(m);
    for (auto& v : f) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    double direct = u2_norm_cyclic(f);
    double fourth = 0;
    for (const auto& c : dft(f).coeffs) fourth += std::norm(c) * std::norm(c);
    CHECK(std::abs(std::pow(direct, 4) - fourth) < 1e-9);
  }
}

TEST_CASE("cyclic U2 norm agrees with the triple-loop oracle") {
  Rng rng(41);
  for (int m : {6, 9, 14}) {
    std::vector<Complex> f(m);
    for (auto& v : f) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    CHECK(u2_norm_cyclic(f) ==
          doctest::Approx(std::pow(oracles::quad_average(f).real(), 0.25)).epsilon(1e-10));
  }
}

TEST_CASE("interval U2 norm normalizes the indicator to one") {
  IntervalFunction one(std::vector<double>(16, 1.0));
  CHECK(u2_norm_interval(one) == doctest::Approx(1.0).epsilon(1e-12));
  IntervalFunction zero(std::vector<double>(16, 0.0));
  CHECK(u2_norm_interval(zero) == 0.0);
}

TEST_CASE("interval U2 norm is independent of the ambient modulus") {
  std::vector<double> alt = {1, -1, 1, -1};
  double at8 = u2_norm_interval(IntervalFunction(alt, 8));
  double at12 = u2_norm_interval(IntervalFunction(alt, 12));
  CHECK(std::abs(at8 - at12) < 1e-9);
  CHECK(at8 == doctest::Approx(oracles::u2_interval(IntervalFunction(alt, 8))).epsilon(1e-10));

  Rng rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 4 + static_cast<int>(rng.below(60));
    auto f2 = oracles::random_function(rng, n, -1, 1, 2 * n);
    IntervalFunction f3(f2.values(), 3 * n);
    CHECK(std::abs(u2_norm_interval(f2) - u2_norm_interval(f3)) < 1e-9);
  }
}

TEST_CASE("interval function rejects M below 2N") {
  CHECK_THROWS_AS(IntervalFunction(std::vector<double>(8, 1.0), 9), invalid_argument);
}

TEST_CASE("exhaustive 0/1 functions match the oracle exactly") {
  for (int n = 1; n <= 5; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<double> v(n);
      for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? 1.0 : 0.0;
      IntervalFunction f(v);
      CHECK(std::abs(u2_norm_interval(f) - oracles::u2_interval(f)) < 1e-12);
    }
  }
}

TEST_CASE("U2 satisfies the triangle inequality on random pairs") {
  Rng rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 8 + static_cast<int>(rng.below(48));
    auto f = oracles::random_function(rng, n, -1, 1);
    auto g = oracles::random_function(rng, n, -1, 1);
    std::vector<double> sum(n);
    for (int i = 0; i < n; ++i) sum[i] = f.values()[i] + g.values()[i];
    CHECK(u2_norm_interval(IntervalFunction(sum)) <=
          u2_norm_interval(f) + u2_norm_interval(g) + 1e-9);
  }
}

TEST_CASE("L2 norm and correlation basics") {
  IntervalFunction c(std::vector<double>(10, -0.4));
  CHECK(l2_norm(c) == doctest::Approx(0.4).epsilon(1e-12));

  std::vector<double> half(8, 0.0);
  for (int i = 0; i < 4; ++i) half[i] = 1.0;
  CHECK(l2_norm(IntervalFunction(half)) == doctest::Approx(1.0 / std::sqrt(2.0)));

  IntervalFunction f(std::vector<double>{0, 1, 1, 1});
  CHECK(l2_norm(f) == doctest::Approx(std::sqrt(3.0 / 4.0)));
  CHECK(correlation(f, f) == doctest::Approx(l2_norm(f) * l2_norm(f)).epsilon(1e-12));

  IntervalFunction ones(std::vector<double>(4, 1.0));
  CHECK(correlation(f, ones) == doctest::Approx(mean(f)).epsilon(1e-12));

  IntervalFunction a(std::vector<double>{1, -1}), b(std::vector<double>{1, 1});
  CHECK(correlation(a, b) == doctest::Approx(0.0));
  CHECK_THROWS_AS(correlation(a, f), invalid_argument);
}
