#pragma once

#include "areg/factor.hpp"
#include "areg/growth.hpp"

namespace areg {

// Composed witness for a conditional expectation, with the measured error.
struct CellApproximation {
  bool ok = false;
  double target = 0;
  double achieved_error = 0;  // best over attempts when !ok
  StructureWitness witness;
  IntervalFunction values;  // witness evaluated on [N], clamped to [0,1]
  std::vector<WitnessRecord> generator_witnesses;
};

// Build a single witness F(theta n) for g = E(f|b) from the factor's
// generator provenance, tightening ramp widths until the measured L2
// error meets the target or attempts run out.
CellApproximation approximate_conditional_expectation(const IntervalFunction& g,
                                                      const Factor& b, double target,
                                                      const RegularityConfig& cfg = {});

// f = f_str + f_sml + f_unf with every claim carried as a measured number.
struct RegularityCertificate {
  int n = 0;
  int modulus = 0;
  double epsilon = 0;
  GrowthFunction growth;
  double m_value = 0;
  IntervalFunction f_str, f_sml, f_unf;
  StructureWitness witness;

  // measured
  double sml_l2 = 0;
  double unf_u2 = 0;
  double u2_bound = 0;  // 1 / F(m_value)

  // telemetry
  int stages = 0;
  std::vector<double> stage_energies;
  std::vector<double> stage_m;
  std::vector<double> ace_errors;
  std::vector<int> weak_steps;
  std::vector<int> factor_complexities;
  std::vector<double> energy_trajectory;
  Factor final_factor;

  ordered_json to_json() const;
  static RegularityCertificate from_json(const ordered_json& j);
};

// The U^2 regularity lemma as an executable: outer energy iteration over
// approximated conditional expectations and weak regularization.
RegularityCertificate regularize(const IntervalFunction& f, double epsilon,
                                 const GrowthFunction& growth,
                                 const RegularityConfig& cfg = {});

struct ClauseResult {
  std::string name;
  bool pass = false;
  double measured = 0;
  double bound = 0;
};

struct VerificationReport {
  std::vector<ClauseResult> clauses;
  bool ok = true;
  const ClauseResult* first_failure() const;
  ordered_json to_json() const;
};

// Recompute every certificate clause from scratch.
VerificationReport verify_certificate(const RegularityCertificate& cert,
                                      const IntervalFunction& f, double epsilon,
                                      const GrowthFunction& growth);

}  // namespace areg
