#pragma once

// Decides the v-conditions: for every 2-plane P of the dual space and every
// alpha in P, sum_{beta in P} beta(alpha^v) beta^v is proportional to alpha^v.

#include "veesys/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace veesys {

/// All system covectors lying in one 2-plane.
struct PlaneClass {
  std::vector<std::size_t> members;
  /// Two members spanning the plane.
  Covector basis_first;
  Covector basis_second;
};

struct VeeViolation {
  std::size_t plane = 0;
  std::size_t alpha = 0;
  /// Scale-free residual |v - lambda alpha^v| / sum_beta |beta(alpha^v)| |beta^v|.
  double residual = 0.0;
};

struct PlaneLambda {
  std::size_t plane = 0;
  std::size_t alpha = 0;
  double lambda = 0.0;
};

struct VeeReport {
  bool is_vee = false;
  std::vector<PlaneClass> planes;
  std::vector<VeeViolation> violations;
  std::vector<PlaneLambda> lambdas;
  double gram_condition_number = 0.0;
  double max_residual = 0.0;
};

/// Every unordered pair of covectors lands in exactly one class; classes of
/// size 2 are kept.
std::vector<PlaneClass> plane_partition(const CovectorSystem& system,
                                        const TolerancePolicy& policy = {});

/// Throws DegenerateForm when the Gram form is singular.
VeeReport check_vee(const CovectorSystem& system, const TolerancePolicy& policy = {});

/// lambda when sum a a^T = lambda Id (Euclidean coordinates of length dim).
std::optional<double> check_well_distributed(std::span<const Covector> set, int dim,
                                             double eps = 1e-9);

/// Split into two non-empty mutually orthogonal blocks (indices into set):
/// the second block is the second connected component of the
/// non-orthogonality graph, the first block is everything else.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> check_reducible(
    std::span<const Covector> set, double eps = 1e-9);

/// Second route to the same verdict: in coordinates where G = Id, every plane
/// class must be reducible or well-distributed in its plane.  Requires a
/// positive definite Gram form (IndefiniteForm otherwise).
bool check_vee_geometric(const CovectorSystem& system, const TolerancePolicy& policy = {});

}  // namespace veesys
