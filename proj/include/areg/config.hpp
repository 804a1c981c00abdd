#pragma once

#include <cstdint>
#include <vector>

namespace areg {

// All floating-point norm checks share one absolute tolerance.
struct Tolerances {
  double norm = 1e-9;       // Fourier identities, norm comparisons
  double identity = 1e-12;  // exact algebraic identities (Pythagoras etc.)
  double quadrature = 1e-6; // layer-cake and integral cross-checks
};

inline const Tolerances& tolerances() {
  static const Tolerances t{};
  return t;
}

// Knobs for the inverse-theorem pipeline. Values are part of the
// deterministic contract: changing them changes certificates.
struct InverseConfig {
  int threshold_grid = 1024;       // t-grid resolution on (0,1)
  double omega_ratio = 0.5;        // keep t with corr >= ratio * best
  double ramp_floor = 0x1p-12;     // narrowest ramp half-width
  double ramp_ceil = 0.25;         // widest ramp half-width
  double maximal_cap = 4096.0;     // 2^12, cap for the radius grid
  int maximal_min_exp = 1;         // radii 2^-1 .. 2^-12
  int maximal_max_exp = 12;
  std::vector<double> witness_targets{0.2};  // L2 targets recorded per set
};

struct RegularityConfig {
  InverseConfig inverse{};
  double ace_ramp_floor = 0x1p-20;  // refinement floor for composed witnesses
  int ace_attempts = 8;
  int max_weak_steps_margin = 16;   // max_steps = n + margin
};

// Enumeration limits for exact Diophantine scans.
struct ScanLimits {
  std::uint64_t budget = 30'000'000;  // candidate vectors visited
};

struct CountingConfig {
  int torus_grid = 64;   // verification points per torus dimension
  int unit_grid = 128;   // verification points on [0,1]
  int max_degree = 64;   // 1-d truncation budget; lowered per extra dim
};

}  // namespace areg
