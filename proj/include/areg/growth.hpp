#pragma once

#include <string>
#include <vector>

#include "areg/interval_function.hpp"
#include "areg/rational.hpp"

namespace areg {

// An increasing function F: R+ -> R+ quantifying the structure/uniformity
// trade-off. Parsed from "poly:c,k", "exp:c" or "table:M1=V1,M2=V2,...".
struct GrowthFunction {
  enum class Kind { kPoly, kExp, kTable };
  Kind kind = Kind::kPoly;
  double c = 1, k = 1;
  std::vector<std::pair<double, double>> table;  // sorted by M

  // optional argument inflation: evaluate the base formula at pre_c * m^pre_k.
  // Composing growths this way keeps the chain F1 >= F2 >= F decidable by
  // comparing arguments. Serialized as a '@pre_c,pre_k' suffix.
  double pre_c = 0;
  int pre_k = 1;

  double eval(double m) const;

  // ceil(F(m)) in exact integer arithmetic where the parameters allow it;
  // keeps Diophantine levels decidable.
  BigInt eval_ceil(const BigInt& m) const;

  // base composed with m -> c * m^k
  static GrowthFunction inflate(const GrowthFunction& base, double c, int k);

  static GrowthFunction parse(const std::string& spec);
  std::string to_string() const;
};

}  // namespace areg
