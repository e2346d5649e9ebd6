#include "veesys/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace veesys {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroCovector: return "ZeroCovector";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::EmptySubspace: return "EmptySubspace";
    case ErrorCode::EmptyRestriction: return "EmptyRestriction";
    case ErrorCode::IndefiniteForm: return "IndefiniteForm";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void TolerancePolicy::validate() const {
  if (!(eps_rank > 0) || !(eps_residual > 0) || !(eps_regular > 0)) {
    throw Error(ErrorCode::PreconditionViolated, "tolerances must be strictly positive");
  }
  if (max_draws <= 0) {
    throw Error(ErrorCode::PreconditionViolated, "max_draws must be positive");
  }
}

Matrix CovectorSystem::as_rows() const {
  Matrix m(static_cast<Eigen::Index>(covectors.size()), dim);
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = covectors[i].transpose();
  }
  return m;
}

Covector canonical_direction(const Covector& v, double eps_rank) {
  const double top = v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  if (!(top >= eps_rank)) {
    throw Error(ErrorCode::ZeroCovector, "all coordinates below eps_rank");
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > eps_rank * top) {
      return v[i] < 0 ? Covector(-v) : v;
    }
  }
  return v;
}

bool collinear(const Vector& a, const Vector& b, double eps) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return true;
  const double sign = a.dot(b) >= 0 ? 1.0 : -1.0;
  // 1 - cos^2 cancels badly near 0; the chord 2 sin(theta/2) does not.
  const Vector chord = a / na - sign * b / nb;
  return chord.norm() < eps;
}

namespace {

bool lex_less(const Covector& a, const Covector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

GramForm gram(std::span<const Covector> covectors, int dim, const TolerancePolicy& policy) {
  std::vector<const Covector*> order;
  order.reserve(covectors.size());
  for (const auto& c : covectors) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Covector* a, const Covector* b) { return lex_less(*a, *b); });

  GramForm form;
  form.dim = dim;
  form.g = Matrix::Zero(dim, dim);
  for (const Covector* c : order) form.g.noalias() += (*c) * c->transpose();
  form.g = 0.5 * (form.g + form.g.transpose()).eval();

  if (dim == 0 || covectors.empty()) {
    throw Error(ErrorCode::DegenerateForm, "empty covector system");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(form.g);
  const Vector& ev = eig.eigenvalues();
  const double largest = ev.cwiseAbs().maxCoeff();
  const double smallest = ev.cwiseAbs().minCoeff();
  if (!(largest > 0) || smallest <= policy.eps_rank * largest) {
    std::ostringstream os;
    os << "Gram form has rank below " << dim << " (covectors do not span the dual space)";
    throw Error(ErrorCode::DegenerateForm, os.str());
  }
  form.condition_number = largest / smallest;
  form.positive_definite = ev.minCoeff() > 0;
  const Matrix& v = eig.eigenvectors();
  form.g_inv = v * ev.cwiseInverse().asDiagonal() * v.transpose();
  form.g_inv = 0.5 * (form.g_inv + form.g_inv.transpose()).eval();
  return form;
}

GramForm gram(const CovectorSystem& system, const TolerancePolicy& policy) {
  return gram(system.covectors, system.dim, policy);
}

Vector cvee(const Covector& alpha, const GramForm& form) { return form.g_inv * alpha; }

double regularity_margin(const CovectorSystem& system, const Point& x) {
  const double nx = x.norm();
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& a : system.covectors) {
    margin = std::min(margin, std::abs(a.dot(x)) / (a.norm() * nx));
  }
  return margin;
}

namespace {

Point draw_regular(const CovectorSystem& system, double margin, int max_draws,
                   std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Point x(system.dim);
  for (int draw = 0; draw < max_draws; ++draw) {
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = normal(rng);
    const double n = x.norm();
    if (n == 0.0) continue;
    x /= n;
    if (regularity_margin(system, x) >= margin) return x;
  }
  std::ostringstream os;
  os << "no point with margin " << margin << " found in " << max_draws << " draws";
  throw Error(ErrorCode::SamplingExhausted, os.str());
}

}  // namespace

Point random_regular_point(const CovectorSystem& system, const TolerancePolicy& policy) {
  policy.validate();
  std::mt19937_64 rng(policy.rng_seed);
  return draw_regular(system, policy.eps_regular, policy.max_draws, rng);
}

RegularSample sample_regular_points(const CovectorSystem& system, std::size_t count,
                                    const TolerancePolicy& policy) {
  policy.validate();
  constexpr double kMarginFloor = 1e-4;
  std::mt19937_64 rng(policy.rng_seed);
  RegularSample sample;
  sample.margin = policy.eps_regular;
  while (sample.points.size() < count) {
    try {
      sample.points.push_back(draw_regular(system, sample.margin, policy.max_draws, rng));
    } catch (const Error&) {
      if (sample.margin / 2 < kMarginFloor) throw;
      sample.margin /= 2;
    }
  }
  return sample;
}

int numeric_rank(const Matrix& m, double eps_rank) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& s = svd.singularValues();
  if (s.size() == 0 || s[0] <= 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > eps_rank * s[0]) ++rank;
  }
  return rank;
}

SpanBases span_bases(std::span<const Vector> vectors, int dim, double eps_rank) {
  SpanBases out;
  if (vectors.empty()) {
    out.span = Matrix(dim, 0);
    out.complement = Matrix::Identity(dim, dim);
    return out;
  }
  Matrix cols(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    cols.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeFullU);
  const Vector& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[0] > 0 && s[i] > eps_rank * s[0]) ++rank;
  }
  out.span = svd.matrixU().leftCols(rank);
  out.complement = svd.matrixU().rightCols(dim - rank);
  return out;
}

MergedCovectors merge_collinear(std::span<const Covector> covectors, double eps_rank) {
  MergedCovectors out;
  std::vector<Vector> units;  // canonical unit direction of each output group
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    const Covector& c = covectors[i];
    if (c.size() == 0 || c.cwiseAbs().maxCoeff() < eps_rank) {
      out.dropped_zero.push_back(i);
      continue;
    }
    std::size_t g = 0;
    for (; g < units.size(); ++g) {
      if (collinear(units[g], c, eps_rank)) break;
    }
    if (g == units.size()) {
      units.push_back(canonical_direction(c, eps_rank).normalized());
      out.groups.emplace_back();
      out.scalars.emplace_back();
    }
    out.groups[g].push_back(i);
    out.scalars[g].push_back(c.dot(units[g]));
  }
  for (std::size_t g = 0; g < units.size(); ++g) {
    if (out.groups[g].size() == 1) {
      out.covectors.push_back(canonical_direction(covectors[out.groups[g][0]], eps_rank));
      continue;
    }
    double sq = 0.0;
    for (double s : out.scalars[g]) sq += s * s;
    out.covectors.push_back(std::sqrt(sq) * units[g]);
  }
  return out;
}

CovectorSystem make_system(std::string name, int dim, std::span<const Covector> covectors,
                           std::map<std::string, double> params, const TolerancePolicy& policy) {
  CovectorSystem sys;
  sys.name = std::move(name);
  sys.dim = dim;
  sys.params = std::move(params);
  for (const auto& c : covectors) {
    if (c.size() != dim) {
      throw Error(ErrorCode::PreconditionViolated, "covector length differs from dimension");
    }
  }
  MergedCovectors merged = merge_collinear(covectors, policy.eps_rank);
  if (!merged.dropped_zero.empty()) {
    std::ostringstream os;
    os << "dropped " << merged.dropped_zero.size() << " zero covector(s)";
    sys.notes.push_back(os.str());
  }
  for (std::size_t g = 0; g < merged.groups.size(); ++g) {
    if (merged.groups[g].size() > 1) {
      std::ostringstream os;
      os << "merged " << merged.groups[g].size() << " collinear covectors into one";
      sys.notes.push_back(os.str());
    }
  }
  sys.covectors = std::move(merged.covectors);
  return sys;
}

}  // namespace veesys
