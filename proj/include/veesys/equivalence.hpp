#pragma once

// Equivalence of covector systems: after the change of coordinates that makes
// both Gram forms the identity, the systems must agree up to an orthogonal map
// and a sign per covector.  Unit-Gram normalization also removes overall scale.

#include "veesys/core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace veesys {

struct Pairing {
  std::size_t target = 0;
  int sign = 1;
};

struct Certificate {
  /// Orthogonal map taking each normalized source covector i to
  /// pairing[i].sign times normalized target covector pairing[i].target.
  Matrix map;
  std::vector<Pairing> pairing;
  /// Largest of the covector mismatch and |map^T map - Id|.
  double max_error = 0.0;
};

/// Covectors G^{-1/2} alpha.  IndefiniteForm unless G is positive definite.
CovectorSystem normalize_to_unit_gram(const CovectorSystem& system,
                                      const TolerancePolicy& policy = {});

/// Deterministic signed matching; inner products compared to 10 eps_rank.
std::optional<Certificate> equivalent(const CovectorSystem& a, const CovectorSystem& b,
                                      const TolerancePolicy& policy = {});

/// Same, but covector i of a may only pair with covectors of b carrying the
/// same label.  Label vectors must match the system sizes.
std::optional<Certificate> equivalent_labelled(const CovectorSystem& a, std::span<const int> labels_a,
                                               const CovectorSystem& b, std::span<const int> labels_b,
                                               const TolerancePolicy& policy = {});

}  // namespace veesys
