#pragma once

#include "areg/config.hpp"
#include "areg/fourier.hpp"
#include "areg/witness.hpp"

namespace areg {

struct FrequencyHit {
  Rational theta;      // r / M, canonicalized
  long r = 0;          // the winning index in Z/MZ
  int modulus = 0;
  double achieved = 0; // |E_n f(n) e(-theta n)|
};

// Exhaustive scan over r in Z/MZ for the largest linear-phase correlation.
// Ties break toward the lowest r. delta is advisory: the certificate
// records the achieved value, the caller decides whether it is large.
FrequencyHit large_fourier_coefficient(const IntervalFunction& f, double delta = 0.0);

// M(t) = max over radii r = 2^-1..2^-12 of (2r)^-1 N^-1 |{n: |phi(n)-t| <= r}|,
// capped at 2^12.
double maximal_function(const IntervalFunction& phi, double t,
                        const InverseConfig& cfg = {});

struct CorrelatingSetResult {
  MeasurableSet set;
  double achieved = 0;   // |E f 1_E|, recomputed on the returned set
  PhiVariant variant = PhiVariant::kRePos;
  Rational theta;
  double threshold = 0;  // selected t
  double maximal_value = 0;
  bool empty = false;    // f had no nonzero correlation anywhere
};

// Proof pipeline of the alternative inverse theorem: best phase, best of
// the four real projections, threshold scan, maximal-function selection,
// ramp witness. Deterministic tie-breaks throughout.
CorrelatingSetResult correlating_set(const IntervalFunction& f, double delta,
                                     const InverseConfig& cfg = {});

}  // namespace areg
