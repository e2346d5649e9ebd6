#pragma once

// Shared fixtures for the unit and acceptance suites: the system corpus and
// oracles that do not reuse library code paths.

#include "veesys/builders.hpp"
#include "veesys/core.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using veesys::CovectorSystem;
using veesys::Matrix;
using veesys::Vector;

struct CorpusItem {
  std::string label;
  CovectorSystem system;
  bool is_vee;
};

inline std::vector<CorpusItem> corpus() {
  using namespace veesys;
  const double r2 = std::sqrt(2.0);
  std::vector<CorpusItem> out;
  auto add = [&](std::string label, CovectorSystem s, bool vee) {
    out.push_back({std::move(label), std::move(s), vee});
  };
  add("A_4", root_system_a(4), true);
  add("B_4(0)", root_system_b(4, 0.0), true);
  add("B_4(0.5)", root_system_b(4, 0.5), true);
  add("B_4(1)", root_system_b(4, 1.0), true);
  add("B_4(2)", root_system_b(4, 2.0), true);
  add("D_4", root_system_d(4), true);
  add("F_4(0.5)", root_system_f4(0.5), true);
  add("F_4(1)", root_system_f4(1.0), true);
  add("F_4(sqrt2)", root_system_f4(r2), true);
  add("E_6", root_system_e(6), true);
  add("E_7", root_system_e(7), true);
  add("E_8", root_system_e(8), true);
  add("H_3", root_system_h3(), true);
  add("H_4", root_system_h4(), true);
  add("I_2(7)", root_system_i2(7), true);
  add("F_5", fn_type(5, std::sqrt(6.0), 1.0), true);
  add("F_6", fn_type(6, 2.0, 1.0 / r2), true);
  add("Thm4(1)", theorem4(1.0), true);
  add("Thm4(1/sqrt2)", theorem4(1.0 / r2), true);
  add("F_3^1(0.7)", f3_variant1(0.7), true);
  add("F_3^2(0.7)", f3_variant2(0.7), true);
  add("A_3(2,1,3,0.5)", deformed_a({2.0, 1.0, 3.0, 0.5}), true);
  add("B_3(0.4;1,2,0.7)", deformed_b(0.4, {1.0, 2.0, 0.7}), true);
  add("Fn(5,2,1)", fn_type(5, 2.0, 1.0), false);
  return out;
}

inline std::vector<CorpusItem> vee_corpus() {
  std::vector<CorpusItem> out;
  for (auto& item : corpus()) {
    if (item.is_vee) out.push_back(std::move(item));
  }
  return out;
}

inline Vector random_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = n01(rng);
  return v;
}

/// Random orthogonal matrix from the QR factor of a Gaussian matrix.
inline Matrix random_orthogonal(std::mt19937_64& rng, int dim) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) a.col(i) = random_vector(rng, dim);
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

inline CovectorSystem transformed(const CovectorSystem& s, const Matrix& q) {
  CovectorSystem out = s;
  for (auto& c : out.covectors) c = q * c;
  return out;
}

/// Brute-force v-condition residual: for every alpha and every other beta,
/// collects all covectors in span(alpha, beta) by a rank test, forms
/// sum gamma(alpha^v) gamma^v and measures its component orthogonal to
/// alpha^v, relative to the norm of the sum.  Gram inverse via full-pivot LU.
inline double independent_vee_residual(const CovectorSystem& s) {
  const int n = s.dim;
  Matrix g = Matrix::Zero(n, n);
  for (const auto& a : s.covectors) g += a * a.transpose();
  const Eigen::FullPivLU<Matrix> lu(g);
  std::vector<Vector> duals;
  for (const auto& a : s.covectors) duals.push_back(lu.solve(a));

  auto in_plane = [&](const Vector& a, const Vector& b, const Vector& c) {
    Matrix m(n, 3);
    m << a.normalized(), b.normalized(), c.normalized();
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()[2] < 1e-9;
  };

  double worst = 0.0;
  const std::size_t count = s.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      Vector v = Vector::Zero(n);
      double scale = 0.0;
      for (std::size_t k = 0; k < count; ++k) {
        if (k != i && k != j && !in_plane(s.covectors[i], s.covectors[j], s.covectors[k])) continue;
        const double w = s.covectors[k].dot(duals[i]);
        v += w * duals[k];
        scale += std::abs(w) * duals[k].norm();
      }
      const Vector& d = duals[i];
      const Vector perp = v - (v.dot(d) / d.squaredNorm()) * d;
      worst = std::max(worst, perp.norm() / scale);
    }
  }
  return worst;
}

/// F(x) = 1/4 sum alpha(x)^2 log alpha(x)^2 in extended precision.
inline long double prepotential(const CovectorSystem& s, const std::vector<long double>& x) {
  long double f = 0.0L;
  for (const auto& a : s.covectors) {
    long double t = 0.0L;
    for (int i = 0; i < s.dim; ++i) t += static_cast<long double>(a[i]) * x[i];
    f += 0.25L * t * t * std::log(t * t);
  }
  return f;
}

/// Central-difference third derivative D_a D_u D_v F at x with step h.
inline double third_derivative_fd(const CovectorSystem& s, const Vector& x, const Vector& a,
                                  const Vector& u, const Vector& v, double h) {
  long double acc = 0.0L;
  for (int sa : {-1, 1}) {
    for (int su : {-1, 1}) {
      for (int sv : {-1, 1}) {
        std::vector<long double> p(s.dim);
        for (int i = 0; i < s.dim; ++i) {
          p[i] = static_cast<long double>(x[i]) +
                 static_cast<long double>(h) * (sa * static_cast<long double>(a[i]) +
                                                su * static_cast<long double>(u[i]) +
                                                sv * static_cast<long double>(v[i]));
        }
        acc += sa * su * sv * prepotential(s, p);
      }
    }
  }
  const long double hh = h;
  return static_cast<double>(acc / (8.0L * hh * hh * hh));
}

}  // namespace testing_support
