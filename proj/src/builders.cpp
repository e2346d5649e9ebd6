#include "veesys/builders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace veesys {
namespace {

Vector unit(int dim, int i, double scale = 1.0) {
  Vector v = Vector::Zero(dim);
  v[i] = scale;
  return v;
}

Vector pair(int dim, int i, int j, double sj, double scale = 1.0) {
  Vector v = Vector::Zero(dim);
  v[i] = scale;
  v[j] = sj * scale;
  return v;
}

/// e_i + s e_j for all i < j and both signs (or one sign).
void add_pairs(std::vector<Covector>& out, int dim, bool both_signs, double scale = 1.0) {
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      out.push_back(pair(dim, i, j, -1.0, scale));
      if (both_signs) out.push_back(pair(dim, i, j, 1.0, scale));
    }
  }
}

/// scale * (e_1 +- e_2 +- ... +- e_n), first sign fixed to +.
void add_half_sums(std::vector<Covector>& out, int n, double scale, bool even_minus_only = false) {
  const unsigned patterns = 1u << (n - 1);
  for (unsigned bits = 0; bits < patterns; ++bits) {
    if (even_minus_only && std::popcount(bits) % 2 != 0) continue;
    Vector v(n);
    v[0] = scale;
    for (int k = 1; k < n; ++k) v[k] = ((bits >> (k - 1)) & 1u) ? -scale : scale;
    out.push_back(v);
  }
}

double checked_sqrt(double radicand, const std::string& what) {
  // Radicands that vanish exactly (K at M^2 = 1/2) arrive with rounding noise.
  if (std::abs(radicand) <= 1e-12) return 0.0;
  if (radicand < 0) {
    std::ostringstream os;
    os << "negative radicand " << radicand << " in " << what;
    throw Error(ErrorCode::InvalidSpec, os.str());
  }
  return std::sqrt(radicand);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidSpec, message);
}

CovectorSystem finish(std::string name, int dim, const std::vector<Covector>& raw,
                      std::map<std::string, double> params) {
  return make_system(std::move(name), dim, raw, std::move(params));
}

Matrix gram_schmidt_rows(const std::vector<Vector>& vectors) {
  Matrix rows(static_cast<Eigen::Index>(vectors.size()), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Vector v = vectors[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Vector q = rows.row(static_cast<Eigen::Index>(k)).transpose();
      v -= q.dot(v) * q;
    }
    rows.row(static_cast<Eigen::Index>(i)) = v.normalized().transpose();
  }
  return rows;
}

std::vector<Vector> e8_simple_roots_ambient() {
  std::vector<Vector> s;
  Vector a1 = Vector::Constant(8, -0.5);
  a1[0] = 0.5;
  a1[7] = 0.5;
  s.push_back(a1);
  s.push_back(pair(8, 0, 1, 1.0));  // e1 + e2
  for (int i = 0; i < 6; ++i) {
    Vector v = Vector::Zero(8);
    v[i + 1] = 1.0;
    v[i] = -1.0;
    s.push_back(v);  // e_{i+2} - e_{i+1}
  }
  return s;
}

std::vector<Covector> e8_roots_ambient() {
  std::vector<Covector> out;
  add_pairs(out, 8, true);
  add_half_sums(out, 8, 0.5, true);
  return out;
}

}  // namespace

Matrix sum_zero_basis(int n) {
  Matrix h = Matrix::Zero(n, n + 1);
  for (int k = 1; k <= n; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) h(k - 1, i) = s;
    h(k - 1, k) = -k * s;
  }
  return h;
}

CovectorSystem root_system_a(int n) {
  require(n >= 1, "A_n needs n >= 1");
  std::vector<double> ones(static_cast<std::size_t>(n + 1), 1.0);
  CovectorSystem sys = deformed_a(ones);
  sys.name = "A:n=" + std::to_string(n);
  sys.params = {{"n", n}};
  return sys;
}

CovectorSystem root_system_b(int n, double lambda) {
  require(n >= 2, "B_n needs n >= 2");
  std::vector<Covector> raw;
  add_pairs(raw, n, true);
  for (int i = 0; i < n; ++i) raw.push_back(unit(n, i, lambda));
  return finish("B:n=" + std::to_string(n) + ",lambda=" + fmt(lambda), n, raw,
                {{"n", n}, {"lambda", lambda}});
}

CovectorSystem root_system_d(int n) {
  CovectorSystem sys = root_system_b(n, 0.0);
  sys.name = "D:n=" + std::to_string(n);
  sys.params = {{"n", n}};
  sys.notes.clear();
  return sys;
}

std::vector<Vector> simple_roots_e(int rank) {
  require(rank >= 6 && rank <= 8, "E-series rank must be 6, 7 or 8");
  std::vector<Vector> ambient = e8_simple_roots_ambient();
  ambient.resize(static_cast<std::size_t>(rank));
  if (rank == 8) return ambient;
  const Matrix basis = gram_schmidt_rows(ambient);
  std::vector<Vector> out;
  for (const auto& a : ambient) out.push_back(basis * a);
  return out;
}

CovectorSystem root_system_e(int rank) {
  require(rank >= 6 && rank <= 8, "E-series rank must be 6, 7 or 8");
  const std::vector<Covector> all = e8_roots_ambient();
  const std::string name = "E" + std::to_string(rank);
  if (rank == 8) return finish(name, 8, all, {});

  std::vector<Vector> simple = e8_simple_roots_ambient();
  simple.resize(static_cast<std::size_t>(rank));
  const Matrix basis = gram_schmidt_rows(simple);  // rank x 8
  std::vector<Covector> raw;
  for (const auto& r : all) {
    const Vector inside = basis * r;
    if ((basis.transpose() * inside - r).norm() < 1e-12) raw.push_back(inside);
  }
  CovectorSystem sys = finish(name, rank, raw, {});
  sys.embedding = basis;
  return sys;
}

std::vector<Vector> simple_roots_f4() {
  Vector a4 = Vector::Constant(4, -1.0);
  a4[0] = 1.0;
  return {pair(4, 1, 2, -1.0), pair(4, 2, 3, -1.0), unit(4, 3), a4};
}

CovectorSystem root_system_f4(double lambda) {
  std::vector<Covector> raw;
  add_pairs(raw, 4, true);
  for (int i = 0; i < 4; ++i) raw.push_back(unit(4, i, 2 * lambda));
  add_half_sums(raw, 4, lambda);
  return finish("F4:lambda=" + fmt(lambda), 4, raw, {{"lambda", lambda}});
}

CovectorSystem root_system_h3() {
  const double phi = std::numbers::phi;
  std::vector<Covector> raw;
  for (int i = 0; i < 3; ++i) raw.push_back(unit(3, i));
  const double base[3] = {phi / 2, 0.5, 1 / (2 * phi)};
  for (int shift = 0; shift < 3; ++shift) {  // cyclic (even) permutations
    for (int signs = 0; signs < 4; ++signs) {
      Vector v(3);
      v[shift % 3] = base[0];
      v[(shift + 1) % 3] = (signs & 1) ? -base[1] : base[1];
      v[(shift + 2) % 3] = (signs & 2) ? -base[2] : base[2];
      raw.push_back(v);
    }
  }
  return finish("H3", 3, raw, {});
}

CovectorSystem root_system_h4() {
  const double phi = std::numbers::phi;
  std::vector<Covector> raw;
  for (int i = 0; i < 4; ++i) raw.push_back(unit(4, i));
  add_half_sums(raw, 4, 0.5);
  // Even permutations of (1/2)(phi, 1, 1/phi, 0) with all sign choices.
  const double base[4] = {phi / 2, 0.5, 1 / (2 * phi), 0.0};
  int perm[4] = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    if (inversions % 2 != 0) continue;
    for (int signs = 0; signs < 8; ++signs) {
      Vector v(4);
      for (int slot = 0; slot < 4; ++slot) {
        const int which = perm[slot];
        double value = base[which];
        if (which < 3 && ((signs >> which) & 1)) value = -value;
        v[slot] = value;
      }
      // one representative per +- pair
      if (canonical_direction(v) == v) raw.push_back(v);
    }
  } while (std::next_permutation(perm, perm + 4));
  return finish("H4", 4, raw, {});
}

CovectorSystem root_system_i2(int m) {
  require(m >= 3, "I2(m) needs m >= 3, got m=" + std::to_string(m));
  std::vector<Covector> raw;
  for (int k = 0; k < m; ++k) {
    const double t = std::numbers::pi * k / m;
    Vector v(2);
    v << std::cos(t), std::sin(t);
    raw.push_back(v);
  }
  return finish("I2:m=" + std::to_string(m), 2, raw, {{"m", m}});
}

CovectorSystem deformed_a(const std::vector<double>& c) {
  require(c.size() >= 2, "An_def needs at least two c values");
  const int n = static_cast<int>(c.size()) - 1;
  const Matrix h = sum_zero_basis(n);
  std::vector<Covector> raw;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double s = checked_sqrt(c[i] * c[j], "c_" + std::to_string(i + 1) + " c_" +
                                                     std::to_string(j + 1));
      Vector amb = Vector::Zero(n + 1);
      amb[i] = s;
      amb[j] = -s;
      raw.push_back(h * amb);
    }
  }
  std::string name = "An_def:c=";
  std::map<std::string, double> params;
  for (std::size_t i = 0; i < c.size(); ++i) {
    name += (i ? "," : "") + fmt(c[i]);
    params["c" + std::to_string(i + 1)] = c[i];
  }
  CovectorSystem sys = finish(name, n, raw, params);
  sys.embedding = h;
  return sys;
}

CovectorSystem deformed_b(double gamma, const std::vector<double>& c) {
  require(c.size() >= 1, "Bn_def needs at least one c value");
  const int n = static_cast<int>(c.size());
  std::vector<Covector> raw;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double s = checked_sqrt(c[i] * c[j], "c_" + std::to_string(i + 1) + " c_" +
                                                     std::to_string(j + 1));
      raw.push_back(pair(n, i, j, -1.0, s));
      raw.push_back(pair(n, i, j, 1.0, s));
    }
  }
  for (int i = 0; i < n; ++i) {
    const double s = checked_sqrt(2 * c[i] * (c[i] + gamma),
                                  "2 c_" + std::to_string(i + 1) + " (c_" +
                                      std::to_string(i + 1) + " + gamma) at index " +
                                      std::to_string(i + 1));
    raw.push_back(unit(n, i, s));
  }
  std::string name = "Bn_def:gamma=" + fmt(gamma) + ",c=";
  std::map<std::string, double> params{{"gamma", gamma}};
  for (std::size_t i = 0; i < c.size(); ++i) {
    name += (i ? "," : "") + fmt(c[i]);
    params["c" + std::to_string(i + 1)] = c[i];
  }
  return finish(name, n, raw, params);
}

CovectorSystem fn_type(int n, double lambda, double m) {
  require(n >= 2 && n <= 12, "Fn needs 2 <= n <= 12");
  std::vector<Covector> raw;
  add_pairs(raw, n, true);
  for (int i = 0; i < n; ++i) raw.push_back(unit(n, i, lambda));
  add_half_sums(raw, n, m);
  return finish("Fn:n=" + std::to_string(n) + ",lambda=" + fmt(lambda) + ",M=" + fmt(m), n, raw,
                {{"n", n}, {"lambda", lambda}, {"M", m}});
}

CovectorSystem build_e8_even_sign_variant() {
  std::vector<Covector> raw;
  add_pairs(raw, 8, true);
  for (int i = 0; i < 8; ++i) raw.push_back(unit(8, i, 0.0));  // Lambda = 0
  add_half_sums(raw, 8, 0.5, true);
  return finish("E8_even", 8, raw, {{"lambda", 0.0}, {"M", 0.5}});
}

CovectorSystem theorem4_raw(double lambda, double k, double m) {
  std::vector<Covector> raw;
  add_pairs(raw, 3, true);
  std::vector<Covector> padded;
  for (const auto& v : raw) {
    Vector w = Vector::Zero(4);
    w.head(3) = v;
    padded.push_back(w);
  }
  for (int i = 0; i < 3; ++i) padded.push_back(unit(4, i, lambda));
  padded.push_back(unit(4, 3, k));
  add_half_sums(padded, 4, m);
  return finish("Thm4_raw:lambda=" + fmt(lambda) + ",K=" + fmt(k) + ",M=" + fmt(m), 4, padded,
                {{"lambda", lambda}, {"K", k}, {"M", m}});
}

CovectorSystem theorem4(double m) {
  require(m != 0.0, "Thm4 needs M != 0");
  const double m2 = m * m;
  const double lambda = std::sqrt(2 * (2 * m2 + 1));
  const double k = checked_sqrt(2 * m2 * (2 * m2 - 1) / (m2 + 1), "K^2 (needs M^2 >= 1/2)");
  CovectorSystem sys = theorem4_raw(lambda, k, m);
  sys.name = "Thm4:M=" + fmt(m);
  return sys;
}

CovectorSystem theorem4_rest_eij(double m) {
  require(m != 0.0, "Thm4_eij needs M != 0");
  const double m2 = m * m;
  std::vector<Covector> raw;
  raw.push_back(unit(3, 0, std::sqrt(2 * (2 * m2 + 1))));
  raw.push_back(unit(3, 1, 2 * std::sqrt(2 * (m2 + 1))));
  raw.push_back(unit(3, 2, m * checked_sqrt(2 * (2 * m2 - 1) / (m2 + 1), "e_3 coefficient")));
  raw.push_back(pair(3, 0, 1, 1.0, std::sqrt(2.0)));
  raw.push_back(pair(3, 0, 1, -1.0, std::sqrt(2.0)));
  raw.push_back(pair(3, 0, 2, 1.0, m * std::sqrt(2.0)));
  raw.push_back(pair(3, 0, 2, -1.0, m * std::sqrt(2.0)));
  for (double s2 : {1.0, -1.0}) {
    for (double s3 : {1.0, -1.0}) {
      Vector v(3);
      v << m, 2 * s2 * m, s3 * m;
      raw.push_back(v);
    }
  }
  return finish("Thm4_eij:M=" + fmt(m), 3, raw, {{"M", m}});
}

CovectorSystem theorem4_rest_long(double m) {
  require(m != 0.0, "Thm4_long needs M != 0");
  const double m2 = m * m;
  std::vector<Covector> raw;
  raw.push_back(pair(3, 0, 1, 1.0));
  raw.push_back(pair(3, 0, 2, 1.0));
  raw.push_back(pair(3, 1, 2, 1.0));
  for (int i = 0; i < 3; ++i) raw.push_back(unit(3, i, std::sqrt(2.0)));
  raw.push_back(Vector::Constant(3, m * std::sqrt(2.0) / std::sqrt(m2 + 1)));
  const double t = 1 / std::sqrt(4 * m2 + 1);
  raw.push_back(pair(3, 0, 1, -1.0, t));
  raw.push_back(pair(3, 0, 2, -1.0, t));
  raw.push_back(pair(3, 1, 2, -1.0, t));
  return finish("Thm4_long:M=" + fmt(m), 3, raw, {{"M", m}});
}

CovectorSystem f3_variant1(double lambda) {
  std::vector<Covector> raw;
  add_pairs(raw, 3, true);
  const double s = std::sqrt(4 * lambda * lambda + 2);
  for (int i = 0; i < 3; ++i) raw.push_back(unit(3, i, s));
  add_half_sums(raw, 3, lambda * std::sqrt(2.0));
  return finish("F3_1:lambda=" + fmt(lambda), 3, raw, {{"lambda", lambda}});
}

CovectorSystem f3_variant2(double lambda) {
  const double s = std::sqrt(2 * lambda * lambda + 1);
  std::vector<Covector> raw;
  raw.push_back(pair(3, 0, 1, 1.0, s));
  raw.push_back(pair(3, 0, 1, -1.0, s));
  for (auto [i, j] : {std::pair{1, 2}, std::pair{0, 2}}) {
    raw.push_back(pair(3, i, j, 1.0, std::sqrt(2.0)));
    raw.push_back(pair(3, i, j, -1.0, std::sqrt(2.0)));
  }
  raw.push_back(unit(3, 2, 2 * s));
  raw.push_back(unit(3, 0, 2 * lambda));
  raw.push_back(unit(3, 1, 2 * lambda));
  for (double s2 : {1.0, -1.0}) {
    for (double s3 : {1.0, -1.0}) {
      Vector v(3);
      v << lambda, s2 * lambda, 2 * s3 * lambda;
      raw.push_back(v);
    }
  }
  return finish("F3_2:lambda=" + fmt(lambda), 3, raw, {{"lambda", lambda}});
}

CovectorSystem build(const SystemSpec& spec) {
  auto param = [&](const char* key) -> double {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
      throw Error(ErrorCode::InvalidSpec, std::string("missing parameter '") + key + "' for " +
                                              std::string(family_name(spec.family)));
    }
    return it->second;
  };
  CovectorSystem sys;
  switch (spec.family) {
    case Family::A: sys = root_system_a(spec.rank); break;
    case Family::B: sys = root_system_b(spec.rank, spec.params.count("lambda") ? param("lambda") : 1.0); break;
    case Family::C: sys = root_system_b(spec.rank, 2.0); sys.name = "C:n=" + std::to_string(spec.rank); break;
    case Family::D: sys = root_system_d(spec.rank); break;
    case Family::E6: sys = root_system_e(6); break;
    case Family::E7: sys = root_system_e(7); break;
    case Family::E8: sys = root_system_e(8); break;
    case Family::F4: sys = root_system_f4(spec.params.count("lambda") ? param("lambda") : 1.0); break;
    case Family::H3: sys = root_system_h3(); break;
    case Family::H4: sys = root_system_h4(); break;
    case Family::I2: sys = root_system_i2(spec.rank); break;
    case Family::AnDeformed: sys = deformed_a(spec.c); break;
    case Family::BnDeformed: sys = deformed_b(param("gamma"), spec.c); break;
    case Family::FnType: sys = fn_type(spec.rank, param("lambda"), param("M")); break;
    case Family::Theorem4: sys = theorem4(param("M")); break;
    case Family::Theorem4Raw: sys = theorem4_raw(param("lambda"), param("K"), param("M")); break;
    case Family::Theorem4RestEij: sys = theorem4_rest_eij(param("M")); break;
    case Family::Theorem4RestLong: sys = theorem4_rest_long(param("M")); break;
    case Family::F3Variant1: sys = f3_variant1(param("lambda")); break;
    case Family::F3Variant2: sys = f3_variant2(param("lambda")); break;
    case Family::E8EvenSign: sys = build_e8_even_sign_variant(); break;
  }
  if (numeric_rank(sys.as_rows(), 1e-9) < sys.dim) {
    throw Error(ErrorCode::InvalidSpec, "parameters give covectors that do not span the space");
  }
  return sys;
}

CovectorSystem build(std::string_view spec_text) { return build(parse_spec(spec_text)); }

}  // namespace veesys
