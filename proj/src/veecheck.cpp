#include "veesys/veecheck.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace veesys {
namespace {

/// Orthonormal basis (two columns) of span(a, b).
Matrix plane_basis(const Vector& a, const Vector& b) {
  Matrix q(a.size(), 2);
  q.col(0) = a.normalized();
  Vector w = b - q.col(0).dot(b) * q.col(0);
  q.col(1) = w.normalized();
  return q;
}

bool in_plane(const Matrix& basis, const Vector& v, double eps) {
  const Vector r = v - basis * (basis.transpose() * v);
  return r.norm() <= eps * v.norm();
}

}  // namespace

std::vector<PlaneClass> plane_partition(const CovectorSystem& system,
                                        const TolerancePolicy& policy) {
  const std::size_t n = system.size();
  std::vector<char> assigned(n * n, 0);
  std::vector<PlaneClass> classes;
  // Genuine members sit at rounding level; other directions are far off.
  const double eps = 100 * policy.eps_rank;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (assigned[i * n + j]) continue;
      const Matrix basis = plane_basis(system.covectors[i], system.covectors[j]);
      PlaneClass pc;
      pc.basis_first = system.covectors[i];
      pc.basis_second = system.covectors[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || in_plane(basis, system.covectors[k], eps)) pc.members.push_back(k);
      }
      for (std::size_t a : pc.members) {
        for (std::size_t b : pc.members) assigned[a * n + b] = 1;
      }
      classes.push_back(std::move(pc));
    }
  }
  return classes;
}

VeeReport check_vee(const CovectorSystem& system, const TolerancePolicy& policy) {
  policy.validate();
  VeeReport report;
  const GramForm form = gram(system, policy);
  report.gram_condition_number = form.condition_number;
  report.planes = plane_partition(system, policy);

  std::vector<Vector> duals;
  duals.reserve(system.size());
  for (const auto& a : system.covectors) duals.push_back(cvee(a, form));

  for (std::size_t p = 0; p < report.planes.size(); ++p) {
    const auto& members = report.planes[p].members;
    for (std::size_t a : members) {
      const Vector& adual = duals[a];
      Vector v = Vector::Zero(system.dim);
      double scale = 0.0;
      for (std::size_t b : members) {
        const double coeff = system.covectors[b].dot(adual);
        v += coeff * duals[b];
        scale += std::abs(coeff) * duals[b].norm();
      }
      const double lambda = v.dot(adual) / adual.squaredNorm();
      const double residual = scale > 0 ? (v - lambda * adual).norm() / scale : 0.0;
      report.lambdas.push_back({p, a, lambda});
      report.max_residual = std::max(report.max_residual, residual);
      if (!(residual <= policy.eps_residual)) report.violations.push_back({p, a, residual});
    }
  }
  report.is_vee = report.violations.empty();
  return report;
}

std::optional<double> check_well_distributed(std::span<const Covector> set, int dim, double eps) {
  if (set.empty()) return std::nullopt;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& a : set) m.noalias() += a * a.transpose();
  const double lambda = m.trace() / dim;
  const double off = (m - lambda * Matrix::Identity(dim, dim)).norm();
  if (off <= eps * m.norm()) return lambda;
  return std::nullopt;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> check_reducible(
    std::span<const Covector> set, double eps) {
  const std::size_t n = set.size();
  if (n < 2) return std::nullopt;
  std::vector<int> component(n, -1);
  int count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    component[start] = count;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (component[w] >= 0) continue;
        if (std::abs(set[u].dot(set[w])) > eps * set[u].norm() * set[w].norm()) {
          component[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  if (count < 2) return std::nullopt;
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    (component[i] == 1 ? blocks.second : blocks.first).push_back(i);
  }
  return blocks;
}

bool check_vee_geometric(const CovectorSystem& system, const TolerancePolicy& policy) {
  const GramForm form = gram(system, policy);
  if (!form.positive_definite) {
    throw Error(ErrorCode::IndefiniteForm, "geometric check needs a positive definite Gram form");
  }
  // Coordinates where G^A is the identity: a -> G^{-1/2} a.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(form.g);
  const Matrix inv_sqrt = eig.operatorInverseSqrt();
  std::vector<Covector> unit_gram;
  for (const auto& a : system.covectors) unit_gram.push_back(inv_sqrt * a);

  if (!check_well_distributed(unit_gram, system.dim, 1e3 * policy.eps_residual)) return false;

  for (const auto& pc : plane_partition(system, policy)) {
    const Matrix basis = plane_basis(inv_sqrt * pc.basis_first, inv_sqrt * pc.basis_second);
    std::vector<Covector> in_plane_coords;
    for (std::size_t k : pc.members) in_plane_coords.push_back(basis.transpose() * unit_gram[k]);
    if (check_reducible(in_plane_coords, policy.eps_residual)) continue;
    if (check_well_distributed(in_plane_coords, 2, policy.eps_residual)) continue;
    return false;
  }
  return true;
}

}  // namespace veesys
