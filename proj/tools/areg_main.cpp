#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "areg/diophantine.hpp"
#include "areg/irrational_regularity.hpp"
#include "areg/synth.hpp"

namespace {

using areg::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json load_json(const std::string& path) {
  std::string text = read_file(path);
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // report the byte offset as line/column
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw input_error(path + ": malformed JSON at line " + std::to_string(line) +
                      ", column " + std::to_string(col));
  }
}

void write_json(const std::string& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Fibonacci convergents F_k / F_{k+1}: the canonical family of rationals
// with slow small-denominator approach; used to supply certified levels.
areg::TorusPoint fibonacci_theta(int index) {
  long a = 1, b = 1;
  for (int i = 0; i < index; ++i) {
    long c = a + b;
    a = b;
    b = c;
  }
  return areg::TorusPoint({areg::make_rational(a, b)});
}

struct SweepRow {
  long a = 0;
  std::string theta;
  double error = 0;
  double bound = 0;
  bool certified = false;
};

int run_sweep(const std::string& sweep_spec, long n_param, std::uint64_t seed,
              const std::string& poly_path, const std::string& csv_path,
              const std::string& out_path) {
  std::string levels = sweep_spec;
  if (levels.rfind("A=", 0) == 0) levels = levels.substr(2);
  std::vector<long> as;
  std::stringstream ss(levels);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      as.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw input_error("sweep: bad level '" + tok + "'");
    }
  }
  if (as.empty()) throw input_error("sweep: no levels given");

  areg::TrigPolynomial poly = poly_path.empty()
                                  ? areg::seeded_trig_polynomial(1, 3, 10.0, seed)
                                  : areg::TrigPolynomial::from_json(load_json(poly_path));
  if (poly.dim != 1) throw input_error("sweep: polynomial must live on T^1");

  std::vector<SweepRow> rows;
  bool all_ok = true;
  for (long a : as) {
    SweepRow row;
    row.a = a;
    // smallest Fibonacci convergent certified at this level
    for (int idx = 8; idx < 40; ++idx) {
      areg::TorusPoint theta = fibonacci_theta(idx);
      areg::IrrationalityScan scan = areg::is_irrational(theta, areg::BigInt(a), n_param);
      if (scan.passed()) {
        row.certified = true;
        auto [p, q] = areg::rational_to_strings(theta.coords[0]);
        row.theta = p + "/" + q;
        areg::Progression prog{1, 1, n_param};
        std::complex<double> avg = areg::progression_average(poly, theta, prog);
        row.error = std::abs(avg - poly.c0());
        row.bound = areg::progression_bound(poly, theta, prog).total_bound;
        break;
      }
    }
    all_ok = all_ok && row.certified && row.error <= row.bound;
    rows.push_back(row);
  }

  std::ostringstream csv;
  csv << "A,theta,error,bound,certified\n";
  for (const auto& r : rows)
    csv << r.a << "," << r.theta << "," << fmt(r.error) << "," << fmt(r.bound) << ","
        << (r.certified ? 1 : 0) << "\n";
  if (!csv_path.empty()) write_text(csv_path, csv.str());

  ordered_json out;
  out["n"] = n_param;
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json e;
    e["A"] = r.a;
    e["theta"] = r.theta;
    e["error"] = r.error;
    e["bound"] = r.bound;
    e["certified"] = r.certified;
    arr.push_back(e);
  }
  out["rows"] = arr;
  out["pass"] = all_ok;
  if (!out_path.empty()) write_json(out_path, out);
  std::cout << csv.str();
  return all_ok ? kExitOk : kExitCheckFailed;
}

std::string decomposition_csv(const areg::RegularityCertificate& cert) {
  std::ostringstream csv;
  csv << "n,f_str,f_sml,f_unf\n";
  for (int i = 0; i < cert.n; ++i)
    csv << (i + 1) << "," << fmt(cert.f_str.values()[i]) << ","
        << fmt(cert.f_sml.values()[i]) << "," << fmt(cert.f_unf.values()[i]) << "\n";
  return csv.str();
}

int main_impl(int argc, char** argv) {
  CLI::App app{"abelian U^2 regularity toolkit"};
  app.require_subcommand(1);

  std::string input, output, csv_path, function_path, theta_path, poly_path;
  std::string generator, growth_spec, sweep_spec, progression_spec;
  double epsilon = 0.25;
  long n_param = 0, a_param = 0, q_param = 1;
  std::uint64_t seed = 0;
  int modulus = 0;

  auto* synth = app.add_subcommand("synth", "generate a deterministic input function");
  synth->add_option("--generator", generator, "generator spec")->required();
  synth->add_option("--N", n_param, "domain size")->required();
  synth->add_option("--M", modulus, "ambient modulus (default 2N)");
  synth->add_option("--seed", seed, "random seed");
  synth->add_option("--output", output, "output path")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Fourier coefficients of the embedding");
  spectrum->add_option("--input", input)->required();
  spectrum->add_option("--output", output)->required();

  auto* u2 = app.add_subcommand("u2", "U^2([N]) norm");
  u2->add_option("--input", input)->required();
  u2->add_option("--output", output);

  auto* decompose = app.add_subcommand("decompose", "U^2 regularity decomposition");
  decompose->add_option("--input", input)->required();
  decompose->add_option("--epsilon", epsilon);
  decompose->add_option("--growth", growth_spec)->required();
  decompose->add_option("--output", output)->required();
  decompose->add_option("--csv", csv_path);

  auto* irr = app.add_subcommand("decompose-irrational",
                                 "regularity with the canonical structured form");
  irr->add_option("--input", input)->required();
  irr->add_option("--epsilon", epsilon);
  irr->add_option("--growth", growth_spec)->required();
  irr->add_option("--output", output)->required();
  irr->add_option("--csv", csv_path);

  auto* verify = app.add_subcommand("verify", "re-check a decomposition certificate");
  verify->add_option("--input", input, "certificate path")->required();
  verify->add_option("--function", function_path, "original function")->required();
  verify->add_option("--output", output, "report path");

  auto* theta_dec = app.add_subcommand("theta-decompose",
                                       "smooth/rational/irrational splitting");
  theta_dec->add_option("--theta", theta_path)->required();
  theta_dec->add_option("--N", n_param)->required();
  theta_dec->add_option("--growth", growth_spec)->required();
  theta_dec->add_option("--output", output);

  auto* check = app.add_subcommand("irrational-check", "(A,N)-irrationality scan");
  check->add_option("--theta", theta_path)->required();
  check->add_option("--A", a_param)->required();
  check->add_option("--N", n_param)->required();
  check->add_option("--output", output);

  auto* count = app.add_subcommand("count", "equidistribution counting");
  count->add_option("--poly", poly_path, "trig polynomial path");
  count->add_option("--theta", theta_path);
  count->add_option("--N", n_param);
  count->add_option("--q", q_param);
  count->add_option("--seed", seed);
  count->add_option("--progression", progression_spec, "start,step,length");
  count->add_option("--sweep", sweep_spec, "A levels, e.g. A=25,50,100,200");
  count->add_option("--csv", csv_path);
  count->add_option("--output", output);

  CLI11_PARSE(app, argc, argv);

  if (synth->parsed()) {
    areg::IntervalFunction f =
        areg::synthesize(generator, static_cast<int>(n_param), modulus, seed);
    write_json(output, f.to_json());
    return kExitOk;
  }

  if (spectrum->parsed()) {
    areg::IntervalFunction f = areg::IntervalFunction::from_json(load_json(input));
    write_json(output, areg::dft(f.embed()).to_json());
    return kExitOk;
  }

  if (u2->parsed()) {
    areg::IntervalFunction f = areg::IntervalFunction::from_json(load_json(input));
    double v = areg::u2_norm_interval(f);
    std::cout << fmt(v) << "\n";
    if (!output.empty()) {
      ordered_json j;
      j["u2"] = v;
      write_json(output, j);
    }
    return kExitOk;
  }

  if (decompose->parsed()) {
    areg::IntervalFunction f = areg::IntervalFunction::from_json(load_json(input));
    areg::GrowthFunction growth = areg::GrowthFunction::parse(growth_spec);
    areg::RegularityCertificate cert = areg::regularize(f, epsilon, growth);
    areg::VerificationReport rep = areg::verify_certificate(cert, f, epsilon, growth);
    ordered_json j = cert.to_json();
    j["verification"] = rep.to_json();
    write_json(output, j);
    if (!csv_path.empty()) write_text(csv_path, decomposition_csv(cert));
    if (!rep.ok) {
      std::cerr << "certificate failed clause: " << rep.first_failure()->name << "\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  }

  if (irr->parsed()) {
    areg::IntervalFunction f = areg::IntervalFunction::from_json(load_json(input));
    areg::GrowthFunction growth = areg::GrowthFunction::parse(growth_spec);
    areg::IrrationalCertificate cert = areg::regularize_irrational(f, epsilon, growth);
    areg::GrowthFunction f1 =
        areg::GrowthFunction::inflate(areg::GrowthFunction::inflate(growth, 16, 2), 16, 2);
    areg::VerificationReport rep = areg::verify_certificate(cert.base, f, epsilon, f1);
    double structured_dev = 0;
    for (long n = 1; n <= cert.base.n; ++n)
      structured_dev = std::max(structured_dev, std::abs(areg::evaluate_structured(cert, n) -
                                                         cert.base.f_str(n)));
    ordered_json j = cert.to_json();
    j["verification"] = rep.to_json();
    j["structured_deviation"] = structured_dev;
    write_json(output, j);
    if (!csv_path.empty()) write_text(csv_path, decomposition_csv(cert.base));
    bool ok = rep.ok && structured_dev <= 1e-9 && cert.audit.ok;
    if (!ok) {
      std::cerr << "irrational certificate failed\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  }

  if (verify->parsed()) {
    ordered_json cj = load_json(input);
    areg::RegularityCertificate cert = areg::RegularityCertificate::from_json(cj);
    areg::IntervalFunction f = areg::IntervalFunction::from_json(load_json(function_path));
    areg::VerificationReport rep = areg::verify_certificate(cert, f, cert.epsilon, cert.growth);
    if (!output.empty()) write_json(output, rep.to_json());
    if (!rep.ok) {
      std::cerr << "certificate failed clause: " << rep.first_failure()->name << "\n";
      return kExitCheckFailed;
    }
    std::cout << "certificate ok\n";
    return kExitOk;
  }

  if (theta_dec->parsed()) {
    areg::TorusPoint theta = areg::TorusPoint::from_json(load_json(theta_path));
    areg::GrowthFunction growth = areg::GrowthFunction::parse(growth_spec);
    areg::ThetaDecomposition dec = areg::decompose_theta(theta, n_param, growth);
    bool exact = (dec.smooth + dec.rational + dec.irrational - theta).is_zero();
    bool torsion_ok = dec.rational.scaled(dec.torsion_order).is_zero();
    bool inside = dec.iterations <= theta.dim();
    areg::IrrationalityScan rerun = areg::is_irrational(
        dec.irrational_in_chart(), growth.eval_ceil(dec.m_value), n_param);
    ordered_json j = dec.to_json();
    j["checks"] = {{"exact_recombination", exact},
                   {"torsion", torsion_ok},
                   {"iterations_within_dim", inside},
                   {"irrational_rerun_pass", rerun.passed()}};
    if (!output.empty()) write_json(output, j);
    bool ok = exact && torsion_ok && inside && rerun.passed();
    std::cout << (ok ? "decomposition ok" : "decomposition failed") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (check->parsed()) {
    areg::TorusPoint theta = areg::TorusPoint::from_json(load_json(theta_path));
    areg::IrrationalityScan scan =
        areg::is_irrational(theta, areg::BigInt(a_param), n_param);
    if (!output.empty()) write_json(output, scan.to_json());
    std::cout << scan.to_json().dump(2) << "\n";
    return scan.passed() ? kExitOk : kExitCheckFailed;
  }

  if (count->parsed()) {
    if (n_param <= 0) throw input_error("count: --N is required and must be positive");
    if (!sweep_spec.empty())
      return run_sweep(sweep_spec, n_param, seed, poly_path, csv_path, output);
    if (theta_path.empty()) throw input_error("count: --theta required without --sweep");
    areg::TrigPolynomial poly = poly_path.empty()
                                    ? areg::seeded_trig_polynomial(1, 3, 10.0, seed)
                                    : areg::TrigPolynomial::from_json(load_json(poly_path));
    areg::TorusPoint theta = areg::TorusPoint::from_json(load_json(theta_path));
    if (poly.dim != theta.dim()) throw input_error("count: dimension mismatch");
    areg::Progression prog{1, 1, n_param};
    if (!progression_spec.empty()) {
      std::stringstream ss(progression_spec);
      std::string tok;
      std::vector<long> parts;
      while (std::getline(ss, tok, ',')) parts.push_back(std::stol(tok));
      if (parts.size() != 3) throw input_error("count: progression needs start,step,length");
      prog = {parts[0], parts[1], parts[2]};
    }
    std::complex<double> avg = areg::progression_average(poly, theta, prog);
    areg::ProgressionDiagnostic diag = areg::progression_bound(poly, theta, prog);
    double err = std::abs(avg - poly.c0());
    ordered_json j;
    j["average_re"] = avg.real();
    j["average_im"] = avg.imag();
    j["c0_re"] = poly.c0().real();
    j["c0_im"] = poly.c0().imag();
    j["error"] = err;
    j["bound"] = diag.total_bound;
    if (!output.empty()) write_json(output, j);
    std::cout << "error " << fmt(err) << " bound " << fmt(diag.total_bound) << "\n";
    return err <= diag.total_bound ? kExitOk : kExitCheckFailed;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return main_impl(argc, argv);
  } catch (const areg::budget_exceeded& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const areg::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const areg::pipeline_error& e) {
    std::cerr << "pipeline failure: " << e.what() << "\ntelemetry: " << e.telemetry << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
