#pragma once

#include "areg/config.hpp"
#include "areg/growth.hpp"
#include "areg/torus.hpp"

namespace areg {

// Outcome of an exhaustive (A,N)-irrationality scan. A pass means every
// nonzero q with |q|_1 <= A (up to sign) satisfies ||q.theta|| >= A/N,
// decided in exact integer arithmetic. Counterexamples are minimal in
// |q|_1, then lexicographically least among canonical representatives
// (first nonzero coordinate positive).
struct IrrationalityScan {
  enum class Result { kPass, kCounterexample };
  Result result = Result::kPass;
  std::vector<BigInt> counterexample;
  BigInt level;  // A
  long n_param = 0;
  std::uint64_t visited = 0;

  bool passed() const { return result == Result::kPass; }
  ordered_json to_json() const;
};

IrrationalityScan is_irrational(const TorusPoint& theta, const BigInt& a_param,
                                long n_param, const ScanLimits& limits = {});

// U in SL_n(Z) with last row q_prime, plus its exact inverse. Entries are
// kept small by balanced gcd reduction; the measured maximum is recorded.
struct UnimodularCompletion {
  IntMatrix u;
  IntMatrix u_inv;
  BigInt complexity;
};

UnimodularCompletion complete_unimodular(const std::vector<BigInt>& q_prime);

// theta = smooth + rational + irrational, exact over the rationals mod 1.
struct ThetaDecomposition {
  TorusPoint theta;
  long n_param = 0;
  TorusPoint smooth, rational, irrational;
  SubtorusChart chart;
  BigInt m_value;
  BigInt torsion_order;
  int iterations = 0;
  std::vector<ordered_json> scan_log;
  IrrationalityScan final_scan;

  // irrational part expressed in chart coordinates (first chart.dim coords)
  TorusPoint irrational_in_chart() const;

  ordered_json to_json() const;
};

// The boiling-off induction: while the residual fails irrationality at the
// current level, extract a smooth shift (kills q.theta exactly), a torsion
// shift (Euclidean algorithm via the unimodular completion), and descend to
// the subtorus q'.x = 0. At most dim(theta) extractions. m_floor lets a
// caller impose M >= floor; the level is re-tested after raising.
ThetaDecomposition decompose_theta(const TorusPoint& theta, long n_param,
                                   const GrowthFunction& growth,
                                   const BigInt& m_floor = BigInt(1),
                                   const ScanLimits& limits = {});

}  // namespace areg
