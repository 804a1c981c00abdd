#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "areg/interval_function.hpp"
#include "areg/torus.hpp"

namespace areg {

// Expression grammar for functions T^d -> R built from linear phases:
// const, Re e(x_j), Im e(x_j), ramp_{t,r}, sum, prod, clamp to [0,1].
enum class ExprOp { kConst, kRePhase, kImPhase, kRamp, kSum, kProd, kClamp };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprOp op;
  double value = 0;    // const
  int coord = 0;       // re_phase / im_phase
  double t = 0, r = 0; // ramp threshold and half-width
  std::vector<ExprPtr> children;
};

ExprPtr expr_const(double c);
ExprPtr expr_re_phase(int coord);
ExprPtr expr_im_phase(int coord);
ExprPtr expr_ramp(double t, double r, ExprPtr child);
ExprPtr expr_sum(std::vector<ExprPtr> children);
ExprPtr expr_prod(std::vector<ExprPtr> children);
ExprPtr expr_clamp(ExprPtr child);
ExprPtr expr_one_minus(ExprPtr child);  // sum(const 1, prod(const -1, child))

double expr_eval(const Expr& e, const std::vector<double>& x);

// (sup bound, Lipschitz seminorm bound) from the usual calculus rules.
struct ExprBounds {
  double sup = 0;
  double semi = 0;
};
ExprBounds expr_bounds(const Expr& e);

// Same tree with every coordinate index shifted by offset.
ExprPtr expr_remap(const ExprPtr& e, int offset);

ordered_json expr_to_json(const Expr& e);
ExprPtr expr_from_json(const ordered_json& j);

// The data certifying f(n) = F(theta n): torus dimension, theta, the
// expression for F, a Lipschitz-norm bound, and complexity = max(d, Lip).
struct StructureWitness {
  int dim = 0;
  TorusPoint theta;
  ExprPtr expr;
  double lip_bound = 0;
  double complexity = 0;

  static StructureWitness make(TorusPoint theta, ExprPtr expr);

  double eval_point(const std::vector<double>& x) const;
  double eval_at(long n) const;  // F(theta n)
  IntervalFunction eval_on(int n_max, int modulus) const;

  ordered_json to_json() const;
  static StructureWitness from_json(const ordered_json& j);
};

// The four real projections of the phase e(-theta n) used by the inverse
// theorem: real/imaginary part, then positive/negative part.
enum class PhiVariant { kRePos, kReNeg, kImPos, kImNeg };
const char* to_string(PhiVariant v);
PhiVariant phi_variant_from_string(const std::string& s);

// Enough provenance to rebuild a ramp witness for a level set at any target
// precision: phi = variant(e(-theta n)), set = {n : phi(n) >= t}.
struct LevelSetProvenance {
  Rational theta;
  PhiVariant variant;
  double threshold = 0;
  double maximal_value = 0;  // M(t) at the chosen threshold

  IntervalFunction phi(int n_max, int modulus) const;
  // ramp half-width for a requested L2 error target, clipped to
  // [floor, 1/4]; width shrinks like target^2 / M(t)
  double ramp_width(double target, double floor) const;
  StructureWitness ramp_witness(double width) const;

  ordered_json to_json() const;
  static LevelSetProvenance from_json(const ordered_json& j);
};

struct WitnessRecord {
  double target_error = 0;       // 1/M
  StructureWitness witness;
  double achieved_l2_error = 0;  // measured against the indicator

  ordered_json to_json() const;
  static WitnessRecord from_json(const ordered_json& j);
};

// A 0/1 set E in [N] with measured approximation witnesses.
struct MeasurableSet {
  IntervalFunction indicator;
  std::vector<WitnessRecord> witnesses;
  std::optional<LevelSetProvenance> provenance;

  static MeasurableSet whole(int n_max, int modulus);  // [N] with exact witness

  ordered_json to_json() const;
  static MeasurableSet from_json(const ordered_json& j);
};

// Rebuild a witness for the set at the given precision target (needs
// provenance); the achieved error is measured, not assumed.
WitnessRecord witness_for_target(const MeasurableSet& set, double target, double ramp_floor);

}  // namespace areg
