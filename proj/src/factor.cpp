#include "areg/factor.hpp"

#include <algorithm>
#include <cmath>

namespace areg {

Factor Factor::trivial(int n) {
  Factor b;
  b.n = n;
  b.cell_of.assign(n, 0);
  b.cells.resize(1);
  for (int i = 1; i <= n; ++i) b.cells[0].push_back(i);
  b.patterns.push_back({});
  return b;
}

Factor Factor::from_cells(int n, std::vector<std::vector<int>> cells) {
  Factor b;
  b.n = n;
  b.cells = std::move(cells);
  b.cell_of.assign(n, -1);
  for (size_t c = 0; c < b.cells.size(); ++c) {
    if (b.cells[c].empty()) throw invalid_argument("factor with empty cell");
    std::sort(b.cells[c].begin(), b.cells[c].end());
    for (int member : b.cells[c]) {
      if (member < 1 || member > n || b.cell_of[member - 1] != -1)
        throw invalid_argument("cells do not partition [N]");
      b.cell_of[member - 1] = static_cast<int>(c);
    }
  }
  for (int v : b.cell_of)
    if (v < 0) throw invalid_argument("cells do not cover [N]");
  b.patterns.assign(b.cells.size(), {});
  return b;
}

bool Factor::refines(const Factor& coarser) const {
  if (n != coarser.n) return false;
  // every cell here must map into a single cell of the coarser factor
  for (const auto& cell : cells) {
    int target = coarser.cell_of[cell.front() - 1];
    for (int member : cell)
      if (coarser.cell_of[member - 1] != target) return false;
  }
  return true;
}

bool Factor::same_cells(const Factor& other) const {
  if (n != other.n || cells.size() != other.cells.size()) return false;
  return refines(other) && other.refines(*this);
}

ordered_json Factor::to_json() const {
  ordered_json j;
  j["n"] = n;
  ordered_json arr = ordered_json::array();
  for (const auto& cell : cells) arr.push_back(cell);
  j["cells"] = arr;
  std::vector<int> gen_ids(generators.size());
  for (size_t i = 0; i < generators.size(); ++i) gen_ids[i] = static_cast<int>(i);
  j["generators"] = gen_ids;
  return j;
}

IntervalFunction conditional_expectation(const IntervalFunction& f, const Factor& b) {
  if (f.n() != b.n) throw invalid_argument("conditional_expectation: size mismatch");
  std::vector<double> out(f.n());
  for (const auto& cell : b.cells) {
    if (cell.empty()) throw invalid_argument("conditional_expectation: empty cell");
    double s = 0;
    double first = f(cell.front());
    bool all_equal = true;
    for (int member : cell) {
      s += f(member);
      all_equal = all_equal && f(member) == first;
    }
    // the mean of identical values is that value, exactly
    double avg = all_equal ? first : s / cell.size();
    for (int member : cell) out[member - 1] = avg;
  }
  return IntervalFunction(std::move(out), f.ambient_modulus());
}

double energy(const IntervalFunction& f, const Factor& b) {
  double v = l2_norm(conditional_expectation(f, b));
  return v * v;
}

Factor join(const Factor& b, const MeasurableSet& e) {
  if (e.indicator.n() != b.n) throw invalid_argument("join: set size mismatch");
  Factor out;
  out.n = b.n;
  bool changed = false;
  for (size_t c = 0; c < b.cells.size(); ++c) {
    std::vector<int> inside, outside;
    for (int member : b.cells[c]) {
      if (e.indicator(member) >= 0.5)
        inside.push_back(member);
      else
        outside.push_back(member);
    }
    if (!inside.empty() && !outside.empty()) changed = true;
    if (!inside.empty()) {
      auto pat = b.patterns[c];
      pat.push_back(true);
      out.cells.push_back(std::move(inside));
      out.patterns.push_back(std::move(pat));
    }
    if (!outside.empty()) {
      auto pat = b.patterns[c];
      pat.push_back(false);
      out.cells.push_back(std::move(outside));
      out.patterns.push_back(std::move(pat));
    }
  }
  if (!changed) return b;
  out.generators = b.generators;
  out.generators.push_back(e);
  out.cell_of.assign(out.n, -1);
  for (size_t c = 0; c < out.cells.size(); ++c)
    for (int member : out.cells[c]) out.cell_of[member - 1] = static_cast<int>(c);
  return out;
}

std::optional<IncrementStep> energy_increment_step(const IntervalFunction& f,
                                                   const Factor& b, double delta,
                                                   const InverseConfig& cfg) {
  if (!f.in_range(-1.0, 1.0, 1e-9))
    throw invalid_argument("energy_increment_step: values must lie in [-1,1]");
  IntervalFunction residual = subtract(f, conditional_expectation(f, b));
  double u2 = u2_norm_interval(residual);
  if (u2 < delta) return std::nullopt;

  // residual of an [-1,1] function can reach [-2,2]; the scan is linear in
  // f, so halving changes no selected frequency, variant or threshold
  IntervalFunction scan_input = residual;
  double sup = 0;
  for (double v : residual.values()) sup = std::max(sup, std::abs(v));
  if (sup > 1.0)
    for (double& v : scan_input.values()) v *= 0.5;

  CorrelatingSetResult cs = correlating_set(scan_input, delta, cfg);
  IncrementStep step;
  step.residual_u2 = u2;
  step.achieved = cs.empty ? 0.0 : std::abs(correlation(residual, cs.set.indicator));
  step.refined = cs.empty ? b : join(b, cs.set);
  step.gain = energy(f, step.refined) - energy(f, b);
  return step;
}

const char* to_string(WeakRegStatus s) {
  switch (s) {
    case WeakRegStatus::kConverged: return "converged";
    case WeakRegStatus::kGainFloor: return "gain_floor";
    case WeakRegStatus::kMaxSteps: return "max_steps";
  }
  return "?";
}

ordered_json WeakRegResult::telemetry() const {
  ordered_json j;
  j["status"] = to_string(status);
  j["steps"] = steps;
  j["final_u2"] = final_u2;
  j["gain_floor"] = gain_floor;
  j["energies"] = energies;
  j["residual_u2"] = residual_u2;
  j["complexity"] = factor.complexity();
  return j;
}

WeakRegResult weak_regularize(const IntervalFunction& f, Factor b0, double delta,
                              int max_steps, const InverseConfig& cfg) {
  WeakRegResult res;
  res.gain_floor = std::pow(delta, 4) / 1024.0;
  res.factor = std::move(b0);
  res.energies.push_back(energy(f, res.factor));
  while (true) {
    IntervalFunction residual = subtract(f, conditional_expectation(f, res.factor));
    res.final_u2 = u2_norm_interval(residual);
    res.residual_u2.push_back(res.final_u2);
    if (res.final_u2 <= delta) {
      res.status = WeakRegStatus::kConverged;
      return res;
    }
    if (res.steps >= max_steps) {
      res.status = WeakRegStatus::kMaxSteps;
      return res;
    }
    auto step = energy_increment_step(f, res.factor, delta, cfg);
    if (!step) {  // the step's own measurement found the residual uniform
      res.status = WeakRegStatus::kConverged;
      return res;
    }
    if (step->gain <= res.gain_floor) {
      res.status = WeakRegStatus::kGainFloor;
      return res;
    }
    res.factor = std::move(step->refined);
    ++res.steps;
    double e = energy(f, res.factor);
    if (e <= res.energies.back()) {
      // measured gain above the floor must show up as a strict increase
      res.status = WeakRegStatus::kGainFloor;
      return res;
    }
    res.energies.push_back(e);
  }
}

}  // namespace areg
