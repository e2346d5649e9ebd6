#include "veesys/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace veesys {

LogFrobenius::LogFrobenius(CovectorSystem system, const TolerancePolicy& policy)
    : system_(std::move(system)), policy_(policy) {
  policy_.validate();
  form_ = gram(system_, policy_);
  duals_.reserve(system_.size());
  for (const auto& a : system_.covectors) duals_.push_back(cvee(a, form_));
}

void LogFrobenius::require_regular(const Point& x) const {
  if (x.size() != system_.dim) {
    throw Error(ErrorCode::PreconditionViolated,
                "point has " + std::to_string(x.size()) + " coordinates, system dim is " +
                    std::to_string(system_.dim));
  }
  const double xn = x.norm();
  for (std::size_t i = 0; i < system_.size(); ++i) {
    const auto& a = system_.covectors[i];
    if (std::abs(a.dot(x)) <= policy_.eps_rank * a.norm() * xn) {
      std::ostringstream os;
      os << "point lies on the hyperplane of covector " << i;
      throw Error(ErrorCode::SingularPoint, os.str());
    }
  }
}

Matrix LogFrobenius::fa_matrix(const Point& x, const Vector& a) const {
  require_regular(x);
  Matrix m = Matrix::Zero(system_.dim, system_.dim);
  for (const auto& alpha : system_.covectors) {
    m.noalias() += (alpha.dot(a) / alpha.dot(x)) * (alpha * alpha.transpose());
  }
  return m;
}

Vector LogFrobenius::multiply_unchecked(const Point& x, const Vector& u, const Vector& v,
                                         double* bound) const {
  Vector out = Vector::Zero(system_.dim);
  double b = 0.0;
  for (std::size_t i = 0; i < system_.size(); ++i) {
    const auto& alpha = system_.covectors[i];
    // alpha(u) * alpha(v) is symmetric in u, v bit for bit.
    const double c = alpha.dot(u) * alpha.dot(v) / alpha.dot(x);
    out += c * duals_[i];
    b += std::abs(c) * duals_[i].norm();
  }
  if (bound) *bound = b;
  return out;
}

Vector LogFrobenius::multiply(const Point& x, const Vector& u, const Vector& v) const {
  require_regular(x);
  return multiply_unchecked(x, u, v, nullptr);
}

Vector LogFrobenius::multiply(const Point& x, const Vector& u, const Vector& v,
                              double* bound) const {
  require_regular(x);
  return multiply_unchecked(x, u, v, bound);
}

double LogFrobenius::wdvv_residual(const Point& x) const {
  require_regular(x);
  const int n = system_.dim;
  std::vector<Matrix> ops;
  std::vector<double> norms;
  for (int i = 0; i < n; ++i) {
    ops.push_back(form_.g_inv * fa_matrix(x, Vector::Unit(n, i)));
    norms.push_back(ops.back().norm());
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double c = (ops[i] * ops[j] - ops[j] * ops[i]).norm();
      worst = std::max(worst, c / std::max(1.0, norms[i] * norms[j]));
    }
  }
  return worst;
}

double LogFrobenius::associativity_residual(const Point& x, const Vector& u, const Vector& v,
                                            const Vector& w) const {
  require_regular(x);
  const std::size_t n = system_.size();
  // Absolute-value bound of each side: the triple sums with every term made
  // non-negative.
  std::vector<double> cuv(n), cvw(n), ru(n), rw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = system_.covectors[i];
    const double ax = a.dot(x);
    cuv[i] = std::abs(a.dot(u) * a.dot(v) / ax);
    cvw[i] = std::abs(a.dot(v) * a.dot(w) / ax);
    ru[i] = std::abs(a.dot(u) / ax) * duals_[i].norm();
    rw[i] = std::abs(a.dot(w) / ax) * duals_[i].norm();
  }
  double left_scale = 0.0;
  double right_scale = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    double sl = 0.0;
    double sr = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      const double k = std::abs(system_.covectors[b].dot(duals_[a]));
      sl += cuv[a] * k;
      sr += cvw[a] * k;
    }
    left_scale += sl * rw[b];
    right_scale += sr * ru[b];
  }
  const Vector left = multiply_unchecked(x, multiply_unchecked(x, u, v, nullptr), w, nullptr);
  const Vector right = multiply_unchecked(x, u, multiply_unchecked(x, v, w, nullptr), nullptr);
  const double scale = std::max(left_scale, right_scale);
  return scale > 0 ? (left - right).norm() / scale : 0.0;
}

double LogFrobenius::frobenius_residual(const Point& x, const Vector& u, const Vector& v,
                                        const Vector& w) const {
  require_regular(x);
  double scale = 0.0;
  for (const auto& a : system_.covectors) {
    scale += std::abs(a.dot(u) * a.dot(v) * a.dot(w) / a.dot(x));
  }
  if (scale == 0.0) return 0.0;
  const double left = multiply_unchecked(x, u, v, nullptr).dot(form_.g * w);
  const double right = u.dot(form_.g * multiply_unchecked(x, v, w, nullptr));
  return std::abs(left - right) / scale;
}

Matrix fa_matrix(const CovectorSystem& system, const Point& x, const Vector& a,
                 const TolerancePolicy& policy) {
  return LogFrobenius(system, policy).fa_matrix(x, a);
}

Vector multiply(const CovectorSystem& system, const Point& x, const Vector& u, const Vector& v,
                const TolerancePolicy& policy) {
  return LogFrobenius(system, policy).multiply(x, u, v);
}

double wdvv_residual(const CovectorSystem& system, const Point& x, const TolerancePolicy& policy) {
  return LogFrobenius(system, policy).wdvv_residual(x);
}

double associativity_residual(const CovectorSystem& system, const Point& x, const Vector& u,
                              const Vector& v, const Vector& w, const TolerancePolicy& policy) {
  return LogFrobenius(system, policy).associativity_residual(x, u, v, w);
}

double frobenius_residual(const CovectorSystem& system, const Point& x, const Vector& u,
                          const Vector& v, const Vector& w, const TolerancePolicy& policy) {
  return LogFrobenius(system, policy).frobenius_residual(x, u, v, w);
}

WdvvSweep wdvv_sweep(const CovectorSystem& system, std::size_t points,
                     const TolerancePolicy& policy) {
  const LogFrobenius frob(system, policy);
  const RegularSample sample = sample_regular_points(system, points, policy);
  WdvvSweep sweep;
  sweep.margin = sample.margin;
  sweep.points = sample.points.size();
  for (const auto& x : sample.points) {
    sweep.max_residual = std::max(sweep.max_residual, frob.wdvv_residual(x));
  }
  return sweep;
}

}  // namespace veesys
