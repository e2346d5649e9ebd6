#pragma once

// Constructors for every named covector system: Coxeter root systems (with
// one length parameter per orbit), the deformed A_n / B_n families, the
// F_n-type systems, the four-dimensional one-parameter family with its two
// restricted three-dimensional families, and the F_3 variants.
//
// Coordinate conventions:
//   A_n            e_i - e_j written in the orthonormal basis
//                  h_k = (1,...,1,-k,0,...,0)/sqrt(k(k+1)) of the sum-zero
//                  hyperplane of R^{n+1} (the basis is kept as embedding).
//   B_n(L)         e_i +- e_j, L e_i          (L = 0, 1, 2 give D_n, B_n, C_n)
//   E_8            e_i +- e_j, (1/2)(+-1,...,+-1) with an even number of minus
//                  signs.  E_7 and E_6 are the E_8 roots in the span of the
//                  first 7 / 6 Bourbaki simple roots, written in the
//                  Gram-Schmidt basis of those simple roots.
//   F_4(L)         e_i +- e_j, 2L e_i, L(e_1 +- e_2 +- e_3 +- e_4)
//   H_3, H_4       unit roots with golden-ratio coordinates
//   I_2(m)         (cos(k pi/m), sin(k pi/m)), k = 0..m-1

#include "veesys/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace veesys {

enum class Family {
  A,
  B,
  C,
  D,
  E6,
  E7,
  E8,
  F4,
  H3,
  H4,
  I2,
  AnDeformed,
  BnDeformed,
  FnType,
  Theorem4,
  Theorem4Raw,
  Theorem4RestEij,
  Theorem4RestLong,
  F3Variant1,
  F3Variant2,
  E8EvenSign,
};

struct SystemSpec {
  Family family = Family::A;
  /// Rank for A..D and F_n-type; m for I_2(m).
  int rank = 0;
  /// Scalar parameters: "lambda", "M", "K", "gamma".
  std::map<std::string, double> params;
  /// c-list of the deformed families.
  std::vector<double> c;
};

/// Parses the canonical string form "F4:lambda=1", "Fn:n=5,lambda=sqrt(6),M=1",
/// "An_def:c=2,1,1".  Numbers may be written as decimals, a/b or sqrt(x).
/// Throws InvalidSpec naming the offending token.
SystemSpec parse_spec(std::string_view text);
std::string format_spec(const SystemSpec& spec);
std::string_view family_name(Family family);

/// Throws InvalidSpec on bad arity, m < 3, or a negative radicand.
CovectorSystem build(const SystemSpec& spec);
CovectorSystem build(std::string_view spec_text);

CovectorSystem build_e8_even_sign_variant();

// Direct constructors.
CovectorSystem root_system_a(int n);
CovectorSystem root_system_b(int n, double lambda);
CovectorSystem root_system_d(int n);
CovectorSystem root_system_e(int rank);
CovectorSystem root_system_f4(double lambda);
CovectorSystem root_system_h3();
CovectorSystem root_system_h4();
CovectorSystem root_system_i2(int m);
CovectorSystem deformed_a(const std::vector<double>& c);
CovectorSystem deformed_b(double gamma, const std::vector<double>& c);
CovectorSystem fn_type(int n, double lambda, double m);
/// Lambda and K derived from M: Lambda^2 = 2(2M^2+1), K^2 = 2M^2(2M^2-1)/(M^2+1).
CovectorSystem theorem4(double m);
CovectorSystem theorem4_raw(double lambda, double k, double m);
/// Restriction of theorem4(M) along e_i +- e_j, in closed form.
CovectorSystem theorem4_rest_eij(double m);
/// Restriction of theorem4(M) along e_1 + e_2 + e_3 - e_4, in closed form.
CovectorSystem theorem4_rest_long(double m);
CovectorSystem f3_variant1(double lambda);
CovectorSystem f3_variant2(double lambda);

/// Bourbaki simple roots of E_6 / E_7 / E_8 in the coordinates of
/// root_system_e(rank), or of F_4 in the coordinates of root_system_f4 with
/// the short ones given by direction only (e_4 and e_1 - e_2 - e_3 - e_4), so
/// that they stay meaningful at lambda = 0.
std::vector<Vector> simple_roots_e(int rank);
std::vector<Vector> simple_roots_f4();

/// Orthonormal basis (rows) of the sum-zero hyperplane of R^{n+1}.
Matrix sum_zero_basis(int n);

}  // namespace veesys
