#include "areg/rational.hpp"

namespace areg {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_strings(const std::string& num, const std::string& den) {
  try {
    return make_rational(BigInt(num), BigInt(den));
  } catch (const std::invalid_argument&) {
    throw invalid_argument("malformed rational '" + num + "/" + den + "'");
  }
}

Rational mod1(const Rational& x) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rational r = x - Rational(fl);
  r.canonicalize();
  return r;
}

Rational torus_norm(const Rational& x) {
  Rational r = mod1(x);
  Rational other = 1 - r;
  return r <= other ? r : other;
}

BigInt round_to_int(const Rational& x) {
  // floor(x + 1/2): signed_frac then lands in (-1/2, 1/2]
  Rational shifted = x + Rational(1, 2);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  if (x - Rational(fl) == Rational(-1, 2)) fl -= 1;  // keep frac in (-1/2, 1/2]
  return fl;
}

Rational signed_frac(const Rational& x) {
  Rational r = x - Rational(round_to_int(x));
  r.canonicalize();
  return r;
}

BigInt ceil_sqrt(const Rational& x) {
  if (x < 0) throw invalid_argument("ceil_sqrt of negative value");
  if (x == 0) return 0;
  BigInt num = x.get_num(), den = x.get_den();
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
  while (s * s * den < num) s += 1;
  while (s > 0 && (s - 1) * (s - 1) * den >= num) s -= 1;
  return s;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

double to_double(const Rational& x) { return x.get_d(); }

std::pair<std::string, std::string> rational_to_strings(const Rational& x) {
  return {x.get_num().get_str(), x.get_den().get_str()};
}

}  // namespace areg
