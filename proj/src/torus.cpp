#include "areg/torus.hpp"

namespace areg {

TorusPoint::TorusPoint(std::vector<Rational> c) : coords(std::move(c)) {
  for (auto& x : coords) x = mod1(x);
}

Rational TorusPoint::dist_sq_to_zero() const {
  // per-coordinate nearest integer shift; Euclidean metric splits coordinatewise
  Rational s = 0;
  for (const auto& x : coords) {
    Rational t = torus_norm(x);
    s += t * t;
  }
  return s;
}

std::vector<double> TorusPoint::orbit(long n) const {
  std::vector<double> out(coords.size());
  for (size_t j = 0; j < coords.size(); ++j) {
    const BigInt& p = coords[j].get_num();
    const BigInt& q = coords[j].get_den();
    BigInt r = (p * n) % q;
    if (r < 0) r += q;
    out[j] = Rational(r, q).get_d();
  }
  return out;
}

TorusPoint TorusPoint::operator+(const TorusPoint& o) const {
  if (dim() != o.dim()) throw invalid_argument("torus point dim mismatch");
  std::vector<Rational> c(coords.size());
  for (size_t j = 0; j < coords.size(); ++j) c[j] = coords[j] + o.coords[j];
  return TorusPoint(std::move(c));
}

TorusPoint TorusPoint::operator-(const TorusPoint& o) const {
  if (dim() != o.dim()) throw invalid_argument("torus point dim mismatch");
  std::vector<Rational> c(coords.size());
  for (size_t j = 0; j < coords.size(); ++j) c[j] = coords[j] - o.coords[j];
  return TorusPoint(std::move(c));
}

TorusPoint TorusPoint::scaled(const BigInt& k) const {
  std::vector<Rational> c(coords.size());
  for (size_t j = 0; j < coords.size(); ++j) c[j] = coords[j] * Rational(k);
  return TorusPoint(std::move(c));
}

bool TorusPoint::is_zero() const {
  for (const auto& x : coords)
    if (x != 0) return false;
  return true;
}

ordered_json TorusPoint::to_json() const {
  ordered_json j;
  j["dim"] = dim();
  ordered_json arr = ordered_json::array();
  for (const auto& x : coords) {
    auto [p, q] = rational_to_strings(x);
    arr.push_back(ordered_json::array({p, q}));
  }
  j["coords"] = arr;
  return j;
}

TorusPoint TorusPoint::from_json(const ordered_json& j) {
  int d = j.at("dim").get<int>();
  std::vector<Rational> c;
  for (const auto& pair : j.at("coords")) {
    if (!pair.is_array() || pair.size() != 2)
      throw invalid_argument("torus point: coordinate must be [num, den]");
    c.push_back(rational_from_strings(pair[0].get<std::string>(),
                                      pair[1].get<std::string>()));
  }
  if (static_cast<int>(c.size()) != d)
    throw invalid_argument("torus point: dim does not match coords");
  return TorusPoint(std::move(c));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.rows.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  const int n = size();
  if (n != o.size()) throw invalid_argument("matrix size mismatch");
  IntMatrix r;
  r.rows.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (rows[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) r.rows[i][j] += rows[i][k] * o.rows[k][j];
    }
  return r;
}

std::vector<Rational> IntMatrix::apply(const std::vector<Rational>& v) const {
  const int n = size();
  if (static_cast<int>(v.size()) != n) throw invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i][j] != 0) out[i] += Rational(rows[i][j]) * v[j];
  return out;
}

BigInt IntMatrix::det() const {
  // fraction-free Bareiss elimination
  const int n = size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a = rows;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigInt IntMatrix::max_abs_entry() const {
  BigInt m = 0;
  for (const auto& row : rows)
    for (const auto& e : row)
      if (abs(e) > m) m = abs(e);
  return m;
}

ordered_json IntMatrix::to_json() const {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    arr.push_back(r);
  }
  return arr;
}

IntMatrix IntMatrix::from_json(const ordered_json& j) {
  IntMatrix m;
  for (const auto& row : j) {
    std::vector<BigInt> r;
    for (const auto& e : row) r.emplace_back(e.get<std::string>());
    m.rows.push_back(std::move(r));
  }
  for (const auto& row : m.rows)
    if (static_cast<int>(row.size()) != m.size())
      throw invalid_argument("matrix: not square");
  return m;
}

SubtorusChart SubtorusChart::full(int d) {
  SubtorusChart c;
  c.ambient_dim = d;
  c.dim = d;
  c.matrix = IntMatrix::identity(d);
  c.inverse = IntMatrix::identity(d);
  c.complexity = d > 0 ? 1 : 0;
  return c;
}

TorusPoint SubtorusChart::to_chart(const TorusPoint& ambient) const {
  return TorusPoint(matrix.apply(ambient.coords));
}

TorusPoint SubtorusChart::from_chart(const std::vector<Rational>& z) const {
  std::vector<Rational> padded(ambient_dim, Rational(0));
  for (size_t j = 0; j < z.size(); ++j) padded[j] = z[j];
  return TorusPoint(inverse.apply(padded));
}

ordered_json SubtorusChart::to_json() const {
  ordered_json j;
  j["ambient_dim"] = ambient_dim;
  j["dim"] = dim;
  j["matrix"] = matrix.to_json();
  j["inverse"] = inverse.to_json();
  j["complexity"] = complexity.get_str();
  return j;
}

SubtorusChart SubtorusChart::from_json(const ordered_json& j) {
  SubtorusChart c;
  c.ambient_dim = j.at("ambient_dim").get<int>();
  c.dim = j.at("dim").get<int>();
  c.matrix = IntMatrix::from_json(j.at("matrix"));
  c.inverse = IntMatrix::from_json(j.at("inverse"));
  c.complexity = BigInt(j.at("complexity").get<std::string>());
  return c;
}

}  // namespace areg
