#include "areg/growth.hpp"

#include <cmath>
#include <sstream>

namespace areg {

namespace {

bool is_integral(double v) { return std::floor(v) == v && std::abs(v) < 1e15; }

BigInt ceil_of_double(double v) {
  if (!(v > 0)) throw invalid_argument("growth value must be positive");
  if (v > 1e18) return BigInt("1000000000000000000");  // scans shortcut far earlier
  return BigInt(static_cast<long>(std::ceil(v)));
}

double parse_number(const std::string& tok) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw invalid_argument("growth: bad number '" + tok + "'");
  }
  if (pos != tok.size()) throw invalid_argument("growth: bad number '" + tok + "'");
  return v;
}

}  // namespace

double GrowthFunction::eval(double m) const {
  if (pre_c > 0) m = pre_c * std::pow(m, pre_k);
  switch (kind) {
    case Kind::kPoly:
      return c * std::pow(m, k);
    case Kind::kExp:
      return c * std::exp2(m);
    case Kind::kTable: {
      // step function: value at the largest knot <= m
      double v = table.front().second;
      for (const auto& [knot, val] : table)
        if (knot <= m) v = val;
      return v;
    }
  }
  throw std::logic_error("unreachable growth kind");
}

BigInt GrowthFunction::eval_ceil(const BigInt& m_in) const {
  if (m_in <= 0) throw invalid_argument("growth evaluated at non-positive M");
  BigInt m = m_in;
  if (pre_c > 0) {
    if (!is_integral(pre_c)) {
      return ceil_of_double(eval(m_in.get_d()));
    }
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(pre_k));
    m = BigInt(static_cast<long>(pre_c)) * pw;
  }
  switch (kind) {
    case Kind::kPoly:
      if (is_integral(c) && is_integral(k) && k >= 1) {
        BigInt pow;
        mpz_pow_ui(pow.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
        return BigInt(static_cast<long>(c)) * pow;
      }
      return ceil_of_double(eval(m_in.get_d()));
    case Kind::kExp: {
      if (is_integral(c)) {
        unsigned long e = m > 512 ? 512ul : static_cast<unsigned long>(m.get_ui());
        BigInt pow;
        mpz_ui_pow_ui(pow.get_mpz_t(), 2, e);
        return BigInt(static_cast<long>(c)) * pow;
      }
      return ceil_of_double(eval(m_in.get_d()));
    }
    case Kind::kTable:
      return ceil_of_double(eval(m_in.get_d()));
  }
  throw std::logic_error("unreachable growth kind");
}

GrowthFunction GrowthFunction::inflate(const GrowthFunction& base, double c, int k) {
  if (!(c > 0) || k < 1) throw invalid_argument("growth inflation needs c > 0, k >= 1");
  GrowthFunction g = base;
  if (base.pre_c > 0) {
    // a(u) = p u^j composed with u -> c u^k gives p c^j u^{jk}
    g.pre_c = base.pre_c * std::pow(c, base.pre_k);
    g.pre_k = base.pre_k * k;
  } else {
    g.pre_c = c;
    g.pre_k = k;
  }
  return g;
}

GrowthFunction GrowthFunction::parse(const std::string& spec) {
  std::string body = spec;
  double pre_c = 0;
  int pre_k = 1;
  if (auto at = spec.find('@'); at != std::string::npos) {
    body = spec.substr(0, at);
    std::string inflation = spec.substr(at + 1);
    auto comma = inflation.find(',');
    if (comma == std::string::npos)
      throw invalid_argument("growth: inflation suffix needs '@c,k'");
    pre_c = parse_number(inflation.substr(0, comma));
    pre_k = static_cast<int>(parse_number(inflation.substr(comma + 1)));
    if (pre_c <= 0 || pre_k < 1)
      throw invalid_argument("growth: inflation needs c > 0 and k >= 1");
  }
  auto colon = body.find(':');
  if (colon == std::string::npos)
    throw invalid_argument("growth: expected '<kind>:<params>', got '" + spec + "'");
  std::string kind = body.substr(0, colon);
  std::string params = body.substr(colon + 1);
  GrowthFunction g;
  g.pre_c = pre_c;
  g.pre_k = pre_k;
  if (kind == "poly") {
    auto comma = params.find(',');
    if (comma == std::string::npos)
      throw invalid_argument("growth: poly needs 'poly:c,k'");
    g.kind = Kind::kPoly;
    g.c = parse_number(params.substr(0, comma));
    g.k = parse_number(params.substr(comma + 1));
    if (g.c <= 0 || g.k <= 0)
      throw invalid_argument("growth: poly:c,k needs c > 0 and k > 0");
    return g;
  }
  if (kind == "exp") {
    g.kind = Kind::kExp;
    g.c = parse_number(params);
    if (g.c <= 0) throw invalid_argument("growth: exp:c needs c > 0");
    return g;
  }
  if (kind == "table") {
    g.kind = Kind::kTable;
    std::stringstream ss(params);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
      auto eq = entry.find('=');
      if (eq == std::string::npos)
        throw invalid_argument("growth: table entry '" + entry + "' needs M=V");
      double m = parse_number(entry.substr(0, eq));
      double v = parse_number(entry.substr(eq + 1));
      if (v <= 0) throw invalid_argument("growth: table values must be positive");
      g.table.emplace_back(m, v);
    }
    if (g.table.empty()) throw invalid_argument("growth: empty table");
    for (size_t i = 1; i < g.table.size(); ++i)
      if (g.table[i].first <= g.table[i - 1].first ||
          g.table[i].second < g.table[i - 1].second)
        throw invalid_argument("growth: table must be increasing");
    return g;
  }
  throw invalid_argument("growth: unknown kind '" + kind + "'");
}

std::string GrowthFunction::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kPoly:
      os << "poly:" << c << "," << k;
      break;
    case Kind::kExp:
      os << "exp:" << c;
      break;
    case Kind::kTable: {
      os << "table:";
      for (size_t i = 0; i < table.size(); ++i) {
        if (i) os << ",";
        os << table[i].first << "=" << table[i].second;
      }
      break;
    }
  }
  if (pre_c > 0) os << "@" << pre_c << "," << pre_k;
  return os.str();
}

}  // namespace areg
