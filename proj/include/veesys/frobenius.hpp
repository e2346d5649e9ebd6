#pragma once

// Logarithmic Frobenius structure of a covector system, computed directly
// from its definition; an independent route to the v-verdict.
//
//   F_a(x) = sum (alpha(a)/alpha(x)) alpha (x) alpha      (third derivatives of
//            F = 1/4 sum alpha(x)^2 log alpha(x)^2)
//   G      = F_x = sum alpha (x) alpha
//   u * v  = sum alpha(u) alpha(v) / alpha(x) alpha^v
//
// WDVV holds iff the operators G^{-1} F_a commute, iff * is associative.

#include "veesys/core.hpp"

namespace veesys {

class LogFrobenius {
 public:
  explicit LogFrobenius(CovectorSystem system, const TolerancePolicy& policy = {});

  const CovectorSystem& system() const noexcept { return system_; }
  const GramForm& form() const noexcept { return form_; }

  /// Throws SingularPoint when |alpha(x)| < eps_rank |alpha| |x| for some alpha.
  void require_regular(const Point& x) const;

  Matrix fa_matrix(const Point& x, const Vector& a) const;
  Vector multiply(const Point& x, const Vector& u, const Vector& v) const;
  /// Same product; *bound receives sum |alpha(u) alpha(v) / alpha(x)| |alpha^v|.
  Vector multiply(const Point& x, const Vector& u, const Vector& v, double* bound) const;
  /// max over i < j of |[G^{-1}F_i, G^{-1}F_j]|_F / max(1, |G^{-1}F_i| |G^{-1}F_j|).
  double wdvv_residual(const Point& x) const;
  /// |(u*v)*w - u*(v*w)| relative to the larger absolute term sum of the two sides.
  double associativity_residual(const Point& x, const Vector& u, const Vector& v,
                                const Vector& w) const;
  /// |G(u*v, w) - G(u, v*w)| relative to sum |alpha(u) alpha(v) alpha(w) / alpha(x)|.
  double frobenius_residual(const Point& x, const Vector& u, const Vector& v,
                            const Vector& w) const;

 private:
  Vector multiply_unchecked(const Point& x, const Vector& u, const Vector& v,
                            double* bound) const;

  CovectorSystem system_;
  TolerancePolicy policy_;
  GramForm form_;
  std::vector<Vector> duals_;
};

Matrix fa_matrix(const CovectorSystem& system, const Point& x, const Vector& a,
                 const TolerancePolicy& policy = {});
Vector multiply(const CovectorSystem& system, const Point& x, const Vector& u, const Vector& v,
                const TolerancePolicy& policy = {});
double wdvv_residual(const CovectorSystem& system, const Point& x,
                     const TolerancePolicy& policy = {});
double associativity_residual(const CovectorSystem& system, const Point& x, const Vector& u,
                              const Vector& v, const Vector& w,
                              const TolerancePolicy& policy = {});
double frobenius_residual(const CovectorSystem& system, const Point& x, const Vector& u,
                          const Vector& v, const Vector& w, const TolerancePolicy& policy = {});

struct WdvvSweep {
  double max_residual = 0.0;
  double margin = 0.0;
  std::size_t points = 0;
};

/// wdvv_residual over `points` seeded regular points.
WdvvSweep wdvv_sweep(const CovectorSystem& system, std::size_t points,
                     const TolerancePolicy& policy = {});

}  // namespace veesys
