#pragma once

#include "areg/counting.hpp"
#include "areg/diophantine.hpp"
#include "areg/regularity.hpp"

namespace areg {

struct IrrationalRegConfig {
  double c1 = 16;  // F1(M) = F2(c1 M^2)
  double c2 = 16;  // F2(M) = F(c2 M^2)
  RegularityConfig reg{};
  ScanLimits limits{};
};

// Audit of the growth chain F1(M1) >= F2(M2) >= F(M), checked as the
// equivalent exact argument inequalities c1 M1^2 >= M2 and c2 M2^2 >= M.
struct GrowthAudit {
  double c1 = 0, c2 = 0;
  BigInt m1, m2, m;
  double f1_m1 = 0, f2_m2 = 0, f_m = 0;
  bool ok = false;
  ordered_json to_json() const;
};

// Base certificate upgraded to the canonical form
// f_str(n) = F~(n/N, n mod q, chart coordinates of theta_irr n).
struct IrrationalCertificate {
  RegularityCertificate base;
  ThetaDecomposition decomposition;
  BigInt q;        // torsion modulus of the rational part
  BigInt m_value;  // max(M2, q, d', ceil ||F~||_Lip)
  double f_tilde_lip = 0;
  GrowthAudit audit;
  IrrationalityScan final_scan;  // independent rerun at ceil F(M)

  int chart_dim() const { return decomposition.chart.dim; }

  // F~(x, y, z) with the small (signed) lift of the smooth part
  double f_tilde(double x, long y, const std::vector<double>& z) const;

  ordered_json to_json() const;
};

IrrationalCertificate regularize_irrational(const IntervalFunction& f, double epsilon,
                                            const GrowthFunction& growth,
                                            const IrrationalRegConfig& cfg = {});

// F~ at (n/N, n mod q, z_n) assembled in exact rational arithmetic; agrees
// with base.f_str(n) bit for bit.
double evaluate_structured(const IrrationalCertificate& cert, long n);

}  // namespace areg
