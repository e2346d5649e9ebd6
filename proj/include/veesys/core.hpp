#pragma once

// Numeric primitives and domain types shared by every veesys module.
//
// A covector system is stored as one representative per +/- pair, in
// canonical direction (first significant coordinate positive), with no two
// members collinear.  All arithmetic is double precision; every comparison
// against zero goes through a TolerancePolicy.

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace veesys {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
/// Coordinates of a linear functional on the ambient space.
using Covector = Eigen::VectorXd;
/// Coordinates of a point of the ambient space.
using Point = Eigen::VectorXd;

enum class ErrorCode {
  ZeroCovector,
  DegenerateForm,
  SamplingExhausted,
  InvalidSpec,
  SingularPoint,
  EmptySubspace,
  EmptyRestriction,
  IndefiniteForm,
  PreconditionViolated,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct TolerancePolicy {
  double eps_rank = 1e-9;
  double eps_residual = 1e-8;
  double eps_regular = 0.05;
  std::uint64_t rng_seed = 1;
  /// Rejection budget of random_regular_point.
  int max_draws = 10000;

  /// Throws PreconditionViolated unless every epsilon is strictly positive.
  void validate() const;
};

struct CovectorSystem {
  std::string name;
  int dim = 0;
  std::vector<Covector> covectors;
  std::map<std::string, double> params;
  /// Rows are an orthonormal basis of this system's space inside a larger
  /// coordinate space (e.g. the sum-zero hyperplane for A_n).  Covector
  /// literals written in those outer coordinates are mapped through it.
  /// Empty means the system's own coordinates are the outer ones.
  Matrix embedding;
  /// Construction notes: dropped zero covectors, merged collinear groups.
  std::vector<std::string> notes;

  std::size_t size() const noexcept { return covectors.size(); }
  /// size() x dim matrix with one covector per row.
  Matrix as_rows() const;
  int ambient_dim() const noexcept {
    return embedding.size() == 0 ? dim : static_cast<int>(embedding.cols());
  }
};

struct GramForm {
  Matrix g;
  Matrix g_inv;
  int dim = 0;
  double condition_number = 0.0;
  /// True when every eigenvalue of g is positive.
  bool positive_definite = false;
};

/// Returns +v or -v so that the first coordinate that is significant
/// relative to the largest one is positive.
Covector canonical_direction(const Covector& v, double eps_rank = 1e-9);

/// |sin| of the angle between a and b is below eps.
bool collinear(const Vector& a, const Vector& b, double eps);

/// G = sum of a a^T with its inverse.  Summation runs in a canonical order
/// of the covectors, so the result does not depend on their storage order.
GramForm gram(std::span<const Covector> covectors, int dim, const TolerancePolicy& policy = {});
GramForm gram(const CovectorSystem& system, const TolerancePolicy& policy = {});

/// The dual vector G^{-1} a.
Vector cvee(const Covector& alpha, const GramForm& form);

/// Unit vector x with |alpha(x)| >= eps_regular |alpha| |x| for every member,
/// by seeded rejection sampling.
Point random_regular_point(const CovectorSystem& system, const TolerancePolicy& policy);

struct RegularSample {
  std::vector<Point> points;
  /// Margin actually enforced; smaller than policy.eps_regular when the
  /// requested one had to be relaxed.
  double margin = 0.0;
};

/// Draws `count` regular points from one seeded stream.  When a draw exhausts
/// the rejection budget the margin is halved (down to 1e-4) and sampling
/// continues; some arrangements (E_8) have chambers too thin for 0.05.
RegularSample sample_regular_points(const CovectorSystem& system, std::size_t count,
                                    const TolerancePolicy& policy);

/// Smallest |alpha(x)| / (|alpha| |x|) over the system.
double regularity_margin(const CovectorSystem& system, const Point& x);

int numeric_rank(const Matrix& m, double eps_rank);

/// Orthonormal basis (columns) of span(vectors) and of its orthogonal
/// complement in R^dim.
struct SpanBases {
  Matrix span;
  Matrix complement;
};
SpanBases span_bases(std::span<const Vector> vectors, int dim, double eps_rank);

struct MergedCovectors {
  std::vector<Covector> covectors;
  /// For every output covector: the input indices it came from.
  std::vector<std::vector<std::size_t>> groups;
  /// For every output covector: signed scale of each input relative to the
  /// output's unit direction.
  std::vector<std::vector<double>> scalars;
  std::vector<std::size_t> dropped_zero;
};

/// Drops zero inputs and replaces every collinear group lambda_i * u by the
/// single covector lambda * u with lambda^2 = sum lambda_i^2.  Output in
/// canonical direction, ordered by first occurrence.
MergedCovectors merge_collinear(std::span<const Covector> covectors, double eps_rank);

/// Builds a system from raw covectors: canonical directions, zero covectors
/// dropped and collinear groups merged (both recorded in notes).
CovectorSystem make_system(std::string name, int dim, std::span<const Covector> covectors,
                           std::map<std::string, double> params = {},
                           const TolerancePolicy& policy = {});

}  // namespace veesys
