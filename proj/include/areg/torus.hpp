#pragma once

#include <vector>

#include "areg/interval_function.hpp"
#include "areg/rational.hpp"

namespace areg {

// Exact rational point of T^d, coordinates reduced to [0,1).
struct TorusPoint {
  std::vector<Rational> coords;

  TorusPoint() = default;
  explicit TorusPoint(std::vector<Rational> c);

  int dim() const { return static_cast<int>(coords.size()); }

  // squared Euclidean torus distance to 0, exact
  Rational dist_sq_to_zero() const;

  // coordinates of theta * n as doubles in [0,1), reduced exactly first
  std::vector<double> orbit(long n) const;

  TorusPoint operator+(const TorusPoint& o) const;
  TorusPoint operator-(const TorusPoint& o) const;
  TorusPoint scaled(const BigInt& k) const;

  bool is_zero() const;

  ordered_json to_json() const;
  static TorusPoint from_json(const ordered_json& j);
};

// Dense integer matrix with exact arithmetic; rows of mpz entries.
struct IntMatrix {
  std::vector<std::vector<BigInt>> rows;

  static IntMatrix identity(int n);
  int size() const { return static_cast<int>(rows.size()); }

  IntMatrix mul(const IntMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  BigInt det() const;  // Bareiss, exact
  BigInt max_abs_entry() const;

  ordered_json to_json() const;
  static IntMatrix from_json(const ordered_json& j);
};

// Unimodular chart L identifying a subtorus of T^d with T^{d'} x {0}.
struct SubtorusChart {
  int ambient_dim = 0;
  int dim = 0;  // d'
  IntMatrix matrix;
  IntMatrix inverse;
  BigInt complexity;  // max |entry| of the chart matrix

  static SubtorusChart full(int d);

  // L(theta) reduced mod 1
  TorusPoint to_chart(const TorusPoint& ambient) const;
  // L^{-1}(z) for chart coordinates z (padded with zeros), reduced mod 1
  TorusPoint from_chart(const std::vector<Rational>& z) const;

  ordered_json to_json() const;
  static SubtorusChart from_json(const ordered_json& j);
};

}  // namespace areg
