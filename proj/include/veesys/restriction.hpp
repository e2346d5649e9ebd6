#pragma once

// Restriction of a covector system A to the intersection L of the hyperplanes
// of a subsystem B.  The covectors of A \ B are projected onto L, zero
// projections are dropped and every collinear group lambda_i u is replaced by
// lambda u with lambda^2 = sum lambda_i^2.

#include "veesys/core.hpp"

#include <span>
#include <vector>

namespace veesys {

struct Subspace {
  /// ambient_dim x sub_dim, orthonormal columns spanning L.
  Matrix basis;
  /// ambient_dim x (ambient_dim - sub_dim), orthonormal columns spanning span(B).
  Matrix normal_basis;
  int ambient_dim = 0;
  int sub_dim = 0;
};

struct MergeGroup {
  /// Indices into the parent system.
  std::vector<std::size_t> sources;
  /// Signed length of each projected source along the merged direction.
  std::vector<double> source_scalars;
  double merged_scalar = 0.0;
};

struct RestrictionResult {
  CovectorSystem system;
  std::vector<MergeGroup> merge_log;
  Subspace subspace;
  /// ambient_dim x system.dim orthonormal columns: the coordinate frame of the
  /// restricted system.  Equals subspace.basis unless the projections span a
  /// proper subspace of L.
  Matrix frame;
  /// The closed subsystem B (indices into the parent).
  std::vector<std::size_t> subsystem;
  /// Parent covectors whose projection vanished (outside B).
  std::vector<std::size_t> dropped;
};

/// Indices of all members of A lying in span(U).
std::vector<std::size_t> subsystem_of(const CovectorSystem& system, std::span<const Covector> u,
                                      const TolerancePolicy& policy = {});

/// Restricts along the subsystem generated by `b_indices` (closed with
/// subsystem_of first).  Throws EmptySubspace when span(B) is everything and
/// EmptyRestriction when no projection survives.
RestrictionResult restrict(const CovectorSystem& system, std::span<const std::size_t> b_indices,
                           const TolerancePolicy& policy = {});

/// Restricts to L = ann(span U) for arbitrary covectors U, which need not be
/// members of A.  This gives the restrictions of F_4(0) along the directions
/// whose covectors vanish at that parameter.
RestrictionResult restrict_along(const CovectorSystem& system, std::span<const Covector> u,
                                 const TolerancePolicy& policy = {});

/// |u * v at x0 + delta |x0| r  -  lifted restricted product at x0|, relative to
/// the absolute-value bound of the restricted product.  x0, u, v are ambient
/// points of L (PreconditionViolated otherwise); r is a seeded unit direction.
/// SingularPoint when x0 lies on a hyperplane of the restricted system.
double limit_check(const CovectorSystem& system, std::span<const std::size_t> b_indices,
                   const Point& x0, const Vector& u, const Vector& v,
                   const TolerancePolicy& policy = {}, double delta = 1e-6);

/// |alpha(u * v)| with the alpha-term omitted, relative to
/// sum_{beta != alpha} |beta(u) beta(v) / beta(x)| |beta(alpha^v)|.
/// Needs alpha(x) = alpha(u) = alpha(v) = 0 (PreconditionViolated) and x off
/// every other hyperplane (SingularPoint).
double tangency_check(const CovectorSystem& system, std::size_t alpha_index, const Point& x,
                      const Vector& u, const Vector& v, const TolerancePolicy& policy = {});

}  // namespace veesys
