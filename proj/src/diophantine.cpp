#include "areg/diophantine.hpp"

#include <algorithm>
#include <cassert>

namespace areg {

namespace {

using int128 = __int128;

struct ScanContext {
  long n_param;
  BigInt a_param;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<BigInt> hit;
  bool found = false;
  bool over_budget = false;
};

// Exact violation test: N * min(S mod D, D - S mod D) < A * D.
template <typename Int>
bool violates(const Int& sum, const Int& d_mod, const Int& n_times, const Int& a_d) {
  Int s = sum % d_mod;
  if (s < 0) s += d_mod;
  Int other = d_mod - s;
  Int dist = s < other ? s : other;
  Int lhs = n_times * dist;
  return lhs < a_d;
}

// Depth-first enumeration of one l1 shell in lexicographic order over
// canonical vectors (first nonzero positive). partial carries the exact
// dot product with the scaled numerators.
template <typename Int>
bool shell_rec(const std::vector<Int>& p, const Int& d_mod, const Int& n_times,
               const Int& a_d, ScanContext& ctx, std::vector<long>& q, int coord,
               long rem, bool leading, Int partial) {
  const int d = static_cast<int>(p.size());
  if (coord == d - 1) {
    std::vector<long> cands;
    if (leading) {
      if (rem == 0) return false;  // all-zero vector, not a candidate
      cands = {rem};
    } else if (rem == 0) {
      cands = {0};
    } else {
      cands = {-rem, rem};
    }
    for (long v : cands) {
      if (++ctx.visited > ctx.budget) {
        ctx.over_budget = true;
        return true;
      }
      Int sum = partial + Int(v) * p[coord];
      if (violates(sum, d_mod, n_times, a_d)) {
        q[coord] = v;
        ctx.hit.assign(q.begin(), q.end());
        ctx.found = true;
        return true;
      }
    }
    return false;
  }
  long lo = leading ? 0 : -rem;
  for (long v = lo; v <= rem; ++v) {
    q[coord] = v;
    bool child_leading = leading && v == 0;
    if (shell_rec(p, d_mod, n_times, a_d, ctx, q, coord + 1, rem - std::labs(v),
                  child_leading, Int(partial + Int(v) * p[coord])))
      return true;
  }
  return false;
}

template <typename Int>
void run_scan(const std::vector<Int>& p, const Int& d_mod, const Int& n_times,
              const Int& a_d, long a_limit, ScanContext& ctx) {
  const int d = static_cast<int>(p.size());
  std::vector<long> q(d, 0);
  for (long shell = 1; shell <= a_limit; ++shell) {
    if (shell_rec<Int>(p, d_mod, n_times, a_d, ctx, q, 0, shell, true, Int(0))) return;
  }
}

BigInt vector_content(const std::vector<BigInt>& q) {
  BigInt g = 0;
  for (const auto& e : q) {
    BigInt a = abs(e);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

}  // namespace

IrrationalityScan is_irrational(const TorusPoint& theta, const BigInt& a_param,
                                long n_param, const ScanLimits& limits) {
  if (a_param < 1 || n_param < 1)
    throw invalid_argument("is_irrational: A >= 1 and N >= 1 required");
  IrrationalityScan scan;
  scan.level = a_param;
  scan.n_param = n_param;
  const int d = theta.dim();
  if (d == 0) return scan;  // vacuous pass

  // ||q.theta|| <= 1/2 always; 2A > N makes every q a counterexample, and
  // the lexicographically least canonical vector in shell 1 is e_d
  if (2 * a_param > n_param) {
    scan.result = IrrationalityScan::Result::kCounterexample;
    scan.counterexample.assign(d, 0);
    scan.counterexample[d - 1] = 1;
    scan.visited = 1;
    return scan;
  }

  BigInt d_mod = 1;
  for (const auto& c : theta.coords) d_mod = lcm(d_mod, c.get_den());
  std::vector<BigInt> p(d);
  for (int j = 0; j < d; ++j)
    p[j] = theta.coords[j].get_num() * (d_mod / theta.coords[j].get_den());

  ScanContext ctx;
  ctx.n_param = n_param;
  ctx.a_param = a_param;
  ctx.budget = limits.budget;

  const long a_limit = a_param.get_si();  // guarded by the 2A <= N shortcut
  BigInt n_times = n_param;
  BigInt a_d = a_param * d_mod;

  // 128-bit fast path when every intermediate provably fits
  BigInt max_partial = BigInt(d) * a_param * d_mod;
  BigInt n_d = n_times * d_mod;
  bool fits = d_mod.fits_slong_p() && a_param.fits_slong_p() &&
              mpz_sizeinbase(max_partial.get_mpz_t(), 2) < 100 &&
              mpz_sizeinbase(n_d.get_mpz_t(), 2) < 100;
  if (fits) {
    std::vector<int128> p128(d);
    for (int j = 0; j < d; ++j) p128[j] = int128(p[j].get_si());
    run_scan<int128>(p128, int128(d_mod.get_si()), int128(n_param),
                     int128(a_param.get_si()) * int128(d_mod.get_si()), a_limit, ctx);
  } else {
    run_scan<BigInt>(p, d_mod, n_times, a_d, a_limit, ctx);
  }

  scan.visited = ctx.visited;
  if (ctx.over_budget)
    throw budget_exceeded("irrationality scan over candidate budget",
                          "A=" + a_param.get_str() + " d=" + std::to_string(d) +
                              " visited=" + std::to_string(ctx.visited));
  if (ctx.found) {
    scan.result = IrrationalityScan::Result::kCounterexample;
    scan.counterexample = ctx.hit;
  }
  return scan;
}

ordered_json IrrationalityScan::to_json() const {
  ordered_json j;
  j["result"] = result == Result::kPass ? "pass" : "counterexample";
  j["level"] = level.get_str();
  j["n"] = n_param;
  j["visited"] = visited;
  if (!counterexample.empty()) {
    ordered_json q = ordered_json::array();
    for (const auto& e : counterexample) q.push_back(e.get_str());
    j["q"] = q;
  }
  return j;
}

UnimodularCompletion complete_unimodular(const std::vector<BigInt>& q_prime) {
  const int d = static_cast<int>(q_prime.size());
  if (d == 0) throw invalid_argument("complete_unimodular: empty vector");
  if (vector_content(q_prime) != 1)
    throw invalid_argument("complete_unimodular: vector is not primitive");

  std::vector<BigInt> v = q_prime;
  IntMatrix big_v = IntMatrix::identity(d);  // accumulated right factor
  IntMatrix w = IntMatrix::identity(d);      // its inverse, row ops mirror column ops

  auto col_op = [&](int i, int j, const BigInt& t) {
    // v_i -= t v_j; column op on big_v, inverse row op on w
    v[i] -= t * v[j];
    for (int row = 0; row < d; ++row) big_v.rows[row][i] -= t * big_v.rows[row][j];
    for (int col = 0; col < d; ++col) w.rows[j][col] += t * w.rows[i][col];
  };

  while (true) {
    int nonzeros = 0;
    for (const auto& e : v)
      if (e != 0) ++nonzeros;
    if (nonzeros <= 1) break;
    int i = -1, j = -1;
    for (int idx = 0; idx < d; ++idx) {
      if (v[idx] == 0) continue;
      if (i < 0 || abs(v[idx]) > abs(v[i])) i = idx;
    }
    for (int idx = 0; idx < d; ++idx) {
      if (v[idx] == 0 || idx == i) continue;
      if (j < 0 || abs(v[idx]) < abs(v[j])) j = idx;
    }
    // balanced quotient keeps entries small: |v_i - t v_j| <= |v_j| / 2
    BigInt t = round_to_int(make_rational(v[i], v[j]));
    col_op(i, j, t);
  }

  int pos = -1;
  for (int idx = 0; idx < d; ++idx)
    if (v[idx] != 0) pos = idx;
  assert(pos >= 0 && abs(v[pos]) == 1);
  if (pos != d - 1) {
    for (int row = 0; row < d; ++row) std::swap(big_v.rows[row][pos], big_v.rows[row][d - 1]);
    std::swap(w.rows[pos], w.rows[d - 1]);
    std::swap(v[pos], v[d - 1]);
  }
  if (v[d - 1] < 0) {
    if (d == 1)
      throw invalid_argument("complete_unimodular: (-1) has no SL_1 completion");
    for (int row = 0; row < d; ++row) big_v.rows[row][d - 1] = -big_v.rows[row][d - 1];
    for (int col = 0; col < d; ++col) w.rows[d - 1][col] = -w.rows[d - 1][col];
    v[d - 1] = -v[d - 1];
  }
  if (w.det() == -1) {
    if (d == 1) throw invalid_argument("complete_unimodular: dimension 1 sign clash");
    for (int col = 0; col < d; ++col) w.rows[0][col] = -w.rows[0][col];
    for (int row = 0; row < d; ++row) big_v.rows[row][0] = -big_v.rows[row][0];
  }

  UnimodularCompletion out;
  out.u = std::move(w);
  out.u_inv = std::move(big_v);
  out.complexity = out.u.max_abs_entry();
  assert(out.u.det() == 1);
  assert(out.u.rows[d - 1] == q_prime);
  return out;
}

TorusPoint ThetaDecomposition::irrational_in_chart() const {
  TorusPoint z = chart.to_chart(irrational);
  std::vector<Rational> head(z.coords.begin(), z.coords.begin() + chart.dim);
  return TorusPoint(head);
}

ordered_json ThetaDecomposition::to_json() const {
  ordered_json j;
  j["n"] = n_param;
  j["theta"] = theta.to_json();
  j["smooth"] = smooth.to_json();
  j["rational"] = rational.to_json();
  j["irrational"] = irrational.to_json();
  j["chart"] = chart.to_json();
  j["m_value"] = m_value.get_str();
  j["torsion_order"] = torsion_order.get_str();
  j["iterations"] = iterations;
  j["final_scan"] = final_scan.to_json();
  j["scans"] = scan_log;
  return j;
}

ThetaDecomposition decompose_theta(const TorusPoint& theta, long n_param,
                                   const GrowthFunction& growth, const BigInt& m_floor,
                                   const ScanLimits& limits) {
  if (n_param < 1) throw invalid_argument("decompose_theta: N >= 1 required");
  const int d = theta.dim();
  ThetaDecomposition out;
  out.theta = theta;
  out.n_param = n_param;
  out.smooth = TorusPoint(std::vector<Rational>(d, Rational(0)));
  out.rational = TorusPoint(std::vector<Rational>(d, Rational(0)));
  out.irrational = theta;
  out.chart = SubtorusChart::full(d);
  out.torsion_order = 1;
  BigInt m_cur = 1;

  while (true) {
    int dp = out.chart.dim;
    if (dp == 0) {
      // the zero-dimensional torus point is vacuously irrational
      assert(out.irrational.is_zero());
      if (m_cur < m_floor) m_cur = m_floor;
      out.final_scan.level = growth.eval_ceil(m_cur);
      out.final_scan.n_param = n_param;
      break;
    }
    BigInt a = growth.eval_ceil(m_cur);
    TorusPoint z = out.irrational_in_chart();
    IrrationalityScan scan = is_irrational(z, a, n_param, limits);
    {
      ordered_json entry = scan.to_json();
      entry["m"] = m_cur.get_str();
      out.scan_log.push_back(entry);
    }
    if (scan.passed()) {
      if (m_cur >= m_floor) {
        out.final_scan = scan;
        break;
      }
      m_cur = m_floor;  // raise to the imposed floor, then re-certify
      continue;
    }

    // extraction step
    out.iterations += 1;
    const std::vector<BigInt>& q = scan.counterexample;
    BigInt m = vector_content(q);
    std::vector<BigInt> q_prime(q.size());
    for (size_t i = 0; i < q.size(); ++i) q_prime[i] = q[i] / m;

    // smooth shift along the largest-|q_j| coordinate clears q.z exactly
    Rational dot = 0;
    for (int j = 0; j < dp; ++j) dot += Rational(q[j]) * z.coords[j];
    Rational ds = signed_frac(dot);
    int pick = 0;
    for (int j = 0; j < dp; ++j)
      if (abs(q[j]) > abs(q[pick])) pick = j;
    std::vector<Rational> smooth_chart(dp, Rational(0));
    smooth_chart[pick] = ds / Rational(q[pick]);

    std::vector<Rational> z_res(dp);
    for (int j = 0; j < dp; ++j) z_res[j] = z.coords[j] - smooth_chart[j];

    // torsion shift: u = q'.z' mod 1 lies in (1/m)Z; Bezout vector from the
    // completion moves it into the integers
    UnimodularCompletion comp = complete_unimodular(q_prime);
    Rational u_dot = 0;
    for (int j = 0; j < dp; ++j) u_dot += Rational(q_prime[j]) * z_res[j];
    Rational u = mod1(u_dot);
    assert(mod1(u * Rational(m)) == 0);
    std::vector<Rational> rat_chart(dp);
    for (int j = 0; j < dp; ++j) rat_chart[j] = u * Rational(comp.u_inv.rows[j][dp - 1]);

    // map shifts back through the current chart
    TorusPoint smooth_amb = out.chart.from_chart(smooth_chart);
    TorusPoint rat_amb = out.chart.from_chart(rat_chart);
    out.smooth = out.smooth + smooth_amb;
    out.rational = out.rational + rat_amb;
    out.irrational = out.irrational - smooth_amb - rat_amb;
    out.torsion_order = lcm(out.torsion_order, m);

    // descend: new chart straightens {q'.x = 0} onto a zero last coordinate
    IntMatrix u_pad = IntMatrix::identity(d);
    IntMatrix u_inv_pad = IntMatrix::identity(d);
    for (int r = 0; r < dp; ++r)
      for (int c = 0; c < dp; ++c) {
        u_pad.rows[r][c] = comp.u.rows[r][c];
        u_inv_pad.rows[r][c] = comp.u_inv.rows[r][c];
      }
    out.chart.matrix = u_pad.mul(out.chart.matrix);
    out.chart.inverse = out.chart.inverse.mul(u_inv_pad);
    out.chart.dim = dp - 1;
    out.chart.complexity = out.chart.matrix.max_abs_entry();

    // fold every measured size into the running M
    BigInt smooth_scale =
        ceil_sqrt(Rational(BigInt(n_param) * BigInt(n_param)) * out.smooth.dist_sq_to_zero());
    m_cur = std::max(m_cur, smooth_scale);
    m_cur = std::max(m_cur, out.torsion_order);
    m_cur = std::max(m_cur, out.chart.matrix.max_abs_entry());
    m_cur = std::max(m_cur, out.chart.inverse.max_abs_entry());

    // the residual stays inside the descended subtorus
    TorusPoint check = out.chart.to_chart(out.irrational);
    for (int j = out.chart.dim; j < d; ++j) assert(check.coords[j] == 0);
  }

  out.m_value = m_cur;
  assert((out.smooth + out.rational + out.irrational - theta).is_zero());
  return out;
}

}  // namespace areg
