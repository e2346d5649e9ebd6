#include "veesys/restriction.hpp"

#include "veesys/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace veesys {
namespace {

bool in_span(const Matrix& span, const Vector& v, double eps) {
  const Vector r = v - span * (span.transpose() * v);
  return r.norm() <= eps * v.norm();
}

void require_tangent(const Matrix& normal, const Vector& v, double eps, const char* what) {
  if (normal.cols() > 0 && (normal.transpose() * v).norm() > eps * std::max(1.0, v.norm())) {
    throw Error(ErrorCode::PreconditionViolated, std::string(what) + " is not tangent to L");
  }
}

RestrictionResult restrict_impl(const CovectorSystem& system, std::span<const Covector> normals,
                                std::vector<std::size_t> subsystem, std::string name,
                                const TolerancePolicy& policy) {
  policy.validate();
  const int n = system.dim;
  std::vector<Vector> nv(normals.begin(), normals.end());
  const SpanBases bases = span_bases(nv, n, policy.eps_rank);
  RestrictionResult out;
  out.subsystem = std::move(subsystem);
  out.subspace.ambient_dim = n;
  out.subspace.sub_dim = static_cast<int>(bases.complement.cols());
  out.subspace.basis = bases.complement;
  out.subspace.normal_basis = bases.span;
  if (out.subspace.sub_dim == 0) {
    throw Error(ErrorCode::EmptySubspace, "the subsystem spans the whole dual space");
  }

  const Matrix& q = out.subspace.basis;
  const double zero_eps = 100 * policy.eps_rank;
  std::vector<Covector> projected;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (std::binary_search(out.subsystem.begin(), out.subsystem.end(), i)) continue;
    Covector p = q.transpose() * system.covectors[i];
    if (p.norm() <= zero_eps * system.covectors[i].norm()) {
      out.dropped.push_back(i);
      continue;
    }
    projected.push_back(std::move(p));
    source.push_back(i);
  }
  if (projected.empty()) {
    throw Error(ErrorCode::EmptyRestriction, "every covector vanishes on the subspace");
  }

  // Reduce further when the projections do not span L.
  const SpanBases inner = span_bases(projected, out.subspace.sub_dim, policy.eps_rank);
  Matrix s = Matrix::Identity(out.subspace.sub_dim, out.subspace.sub_dim);
  if (inner.span.cols() < out.subspace.sub_dim) {
    s = inner.span;
    for (auto& p : projected) p = (s.transpose() * p).eval();
  }
  out.frame = q * s;

  const MergedCovectors merged = merge_collinear(projected, policy.eps_rank);
  for (std::size_t g = 0; g < merged.groups.size(); ++g) {
    if (merged.groups[g].size() < 2) continue;
    MergeGroup mg;
    for (std::size_t k : merged.groups[g]) mg.sources.push_back(source[k]);
    mg.source_scalars = merged.scalars[g];
    mg.merged_scalar = merged.covectors[g].norm();
    out.merge_log.push_back(std::move(mg));
  }

  out.system.name = std::move(name);
  out.system.dim = static_cast<int>(out.frame.cols());
  out.system.covectors = merged.covectors;
  const Matrix parent = system.embedding.size() == 0 ? Matrix::Identity(n, n) : system.embedding;
  out.system.embedding = out.frame.transpose() * parent;
  if (!out.merge_log.empty()) {
    std::ostringstream os;
    os << "merged " << out.merge_log.size() << " collinear group(s)";
    out.system.notes.push_back(os.str());
  }
  return out;
}

std::string index_list(std::span<const std::size_t> idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << '}';
  return os.str();
}

}  // namespace

std::vector<std::size_t> subsystem_of(const CovectorSystem& system, std::span<const Covector> u,
                                      const TolerancePolicy& policy) {
  std::vector<Vector> uv(u.begin(), u.end());
  const SpanBases bases = span_bases(uv, system.dim, policy.eps_rank);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (in_span(bases.span, system.covectors[i], 100 * policy.eps_rank)) out.push_back(i);
  }
  return out;
}

RestrictionResult restrict(const CovectorSystem& system, std::span<const std::size_t> b_indices,
                           const TolerancePolicy& policy) {
  if (b_indices.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "restriction needs a nonempty subsystem");
  }
  std::vector<Covector> u;
  for (std::size_t i : b_indices) {
    if (i >= system.size()) {
      throw Error(ErrorCode::PreconditionViolated,
                  "covector index " + std::to_string(i) + " out of range");
    }
    u.push_back(system.covectors[i]);
  }
  std::vector<std::size_t> closed = subsystem_of(system, u, policy);
  const std::string name = system.name + "|B=" + index_list(closed);
  return restrict_impl(system, u, std::move(closed), name, policy);
}

RestrictionResult restrict_along(const CovectorSystem& system, std::span<const Covector> u,
                                 const TolerancePolicy& policy) {
  if (u.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "restriction needs at least one covector");
  }
  for (const auto& c : u) {
    if (c.size() != system.dim) {
      throw Error(ErrorCode::PreconditionViolated, "covector length differs from dimension");
    }
  }
  std::vector<std::size_t> closed = subsystem_of(system, u, policy);
  const std::string name = system.name + "|B=" + index_list(closed);
  return restrict_impl(system, u, std::move(closed), name, policy);
}

double limit_check(const CovectorSystem& system, std::span<const std::size_t> b_indices,
                   const Point& x0, const Vector& u, const Vector& v,
                   const TolerancePolicy& policy, double delta) {
  const RestrictionResult r = restrict(system, b_indices, policy);
  const double eps = 100 * policy.eps_rank;
  require_tangent(r.subspace.normal_basis, x0, eps, "x0");
  require_tangent(r.subspace.normal_basis, u, eps, "u");
  require_tangent(r.subspace.normal_basis, v, eps, "v");

  const LogFrobenius restricted(r.system, policy);
  double scale = 0.0;
  const Vector lifted =
      r.frame * restricted.multiply(r.frame.transpose() * x0, r.frame.transpose() * u,
                                    r.frame.transpose() * v, &scale);

  std::mt19937_64 rng(policy.rng_seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector dir(system.dim);
  for (Eigen::Index i = 0; i < dir.size(); ++i) dir[i] = normal(rng);
  dir.normalize();
  const Point x = x0 + delta * x0.norm() * dir;
  const Vector full = LogFrobenius(system, policy).multiply(x, u, v);
  if (scale == 0.0) return (full - lifted).norm();
  return (full - lifted).norm() / scale;
}

double tangency_check(const CovectorSystem& system, std::size_t alpha_index, const Point& x,
                      const Vector& u, const Vector& v, const TolerancePolicy& policy) {
  if (alpha_index >= system.size()) {
    throw Error(ErrorCode::PreconditionViolated, "covector index out of range");
  }
  const Covector& alpha = system.covectors[alpha_index];
  const double eps = 100 * policy.eps_rank;
  const double an = alpha.norm();
  if (std::abs(alpha.dot(x)) > eps * an * x.norm()) {
    throw Error(ErrorCode::PreconditionViolated, "x is not on the hyperplane of alpha");
  }
  if (std::abs(alpha.dot(u)) > eps * an * std::max(1.0, u.norm()) ||
      std::abs(alpha.dot(v)) > eps * an * std::max(1.0, v.norm())) {
    throw Error(ErrorCode::PreconditionViolated, "u and v must lie on the hyperplane of alpha");
  }
  const GramForm form = gram(system, policy);
  const Vector adual = cvee(alpha, form);
  double value = 0.0;
  double scale = 0.0;
  for (std::size_t b = 0; b < system.size(); ++b) {
    if (b == alpha_index) continue;
    const Covector& beta = system.covectors[b];
    const double bx = beta.dot(x);
    if (std::abs(bx) <= policy.eps_rank * beta.norm() * x.norm()) {
      throw Error(ErrorCode::SingularPoint,
                  "x lies on the hyperplane of covector " + std::to_string(b));
    }
    // alpha(beta^v) = beta(alpha^v) since G^{-1} is symmetric.
    const double term = beta.dot(u) * beta.dot(v) / bx * beta.dot(adual);
    value += term;
    scale += std::abs(term);
  }
  return scale > 0 ? std::abs(value) / scale : 0.0;
}

}  // namespace veesys
