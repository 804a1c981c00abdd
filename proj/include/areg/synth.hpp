#pragma once

#include <cstdint>
#include <string>

#include "areg/interval_function.hpp"
#include "areg/trig_poly.hpp"

namespace areg {

// Deterministic generators for input functions, all values in [0,1]:
//   constant:c            f(n) = c
//   interval:a,b          indicator of a <= n <= b
//   residue:a,q           indicator of n = a (mod q)
//   cosine:r,Q[,amp]      (1 + amp cos(2 pi r n / Q)) / 2, default amp 1
//   uniform               seeded uniform values
//   mix:w*g|w*g|...       convex-style mixture, clamped to [0,1]
// The seed fully determines the output.
IntervalFunction synthesize(const std::string& spec, int n, int modulus,
                            std::uint64_t seed);

// Random trig polynomial with |m|_1 <= degree, rescaled so the Lipschitz
// bound sum |c_m|(1 + 2 pi |m|_2) lands at lip_cap. Real-valued (terms come
// in conjugate pairs), c_0 real.
TrigPolynomial seeded_trig_polynomial(int dim, int degree, double lip_cap,
                                      std::uint64_t seed);

}  // namespace areg
