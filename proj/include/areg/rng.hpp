#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace areg {

// Deterministic double generator. mt19937_64 output is pinned by the
// standard; we avoid std distributions, whose mapping is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0,1) with 53 random bits
  double uniform() { return std::ldexp(static_cast<double>(engine_() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace areg
