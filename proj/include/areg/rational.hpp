#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "areg/errors.hpp"

namespace areg {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonicalized p/q; q must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational rational_from_strings(const std::string& num, const std::string& den);

// Representative in [0,1).
Rational mod1(const Rational& x);

// Torus norm ||x||_T = distance to the nearest integer; result in [0,1/2].
Rational torus_norm(const Rational& x);

// x - round(x), the signed fractional part in (-1/2, 1/2].
Rational signed_frac(const Rational& x);

// Nearest integer (ties toward even are irrelevant here; ties go down so
// that signed_frac lands in (-1/2, 1/2]).
BigInt round_to_int(const Rational& x);

// Least m >= 0 with m^2 >= x (x >= 0).
BigInt ceil_sqrt(const Rational& x);

BigInt lcm(const BigInt& a, const BigInt& b);

double to_double(const Rational& x);

std::pair<std::string, std::string> rational_to_strings(const Rational& x);

}  // namespace areg
