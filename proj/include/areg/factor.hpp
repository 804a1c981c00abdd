#pragma once

#include <optional>

#include "areg/inverse.hpp"

namespace areg {

// A partition of [N] into nonempty cells. Factors built by joins remember
// their generating sets and, per cell, the membership pattern over them,
// which is what certifies cell measurability.
struct Factor {
  int n = 0;
  std::vector<int> cell_of;               // index n-1 -> cell id
  std::vector<std::vector<int>> cells;    // sorted 1-based members
  std::vector<std::vector<bool>> patterns;  // per cell, over generators
  std::vector<MeasurableSet> generators;

  static Factor trivial(int n);
  static Factor from_cells(int n, std::vector<std::vector<int>> cells);

  int complexity() const { return static_cast<int>(cells.size()); }
  bool refines(const Factor& coarser) const;
  bool same_cells(const Factor& other) const;

  ordered_json to_json() const;  // generators carried as ids; sets serialize separately
};

// Cell averages; the orthogonal projection onto factor-measurable functions.
IntervalFunction conditional_expectation(const IntervalFunction& f, const Factor& b);

// ||E(f|b)||_2^2
double energy(const IntervalFunction& f, const Factor& b);

// Common refinement of b by E; empty intersections dropped. A join that
// refines nothing returns b unchanged (no generator appended).
Factor join(const Factor& b, const MeasurableSet& e);

struct IncrementStep {
  Factor refined;
  double gain = 0;      // energy(b') - energy(b)
  double achieved = 0;  // correlation of the residual with the chosen set
  double residual_u2 = 0;
};

// One energy-increment step; nullopt when the residual is already
// delta-uniform.
std::optional<IncrementStep> energy_increment_step(const IntervalFunction& f,
                                                   const Factor& b, double delta,
                                                   const InverseConfig& cfg = {});

enum class WeakRegStatus { kConverged, kGainFloor, kMaxSteps };
const char* to_string(WeakRegStatus s);

struct WeakRegResult {
  Factor factor;
  WeakRegStatus status = WeakRegStatus::kConverged;
  std::vector<double> energies;   // strictly increasing while stepping
  std::vector<double> residual_u2;
  int steps = 0;
  double final_u2 = 0;
  double gain_floor = 0;
  bool ok() const { return status == WeakRegStatus::kConverged; }
  ordered_json telemetry() const;
};

// Koopman-von Neumann loop: refine until ||f - E(f|b)||_U2 <= delta. The
// gain floor delta^4/1024 turns the proof's implicit constant into an
// explicit, surfaced failure mode.
WeakRegResult weak_regularize(const IntervalFunction& f, Factor b0, double delta,
                              int max_steps, const InverseConfig& cfg = {});

}  // namespace areg
