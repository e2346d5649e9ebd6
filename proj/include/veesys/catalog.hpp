#pragma once

// Restrictions of the exceptional root systems along their parabolic
// subsystems of corank >= 3, one entry per conjugacy class.
//
// Simple roots use the Bourbaki numbering (1-based in labels and subsets):
//   E_8: a1 = (1/2)(e1 + e8 - e2 - ... - e7), a2 = e1 + e2, a_k = e_{k-1} - e_{k-2}
//        (k >= 3); E_7 / E_6 keep the first 7 / 6.
//   F_4: a1 = e2 - e3, a2 = e3 - e4, a3 ~ e4, a4 ~ e1 - e2 - e3 - e4 (directions).
// Two subsets are in one class when an automorphism of the root system maps
// one subsystem onto the other.  When a type splits into several classes the
// one containing the reference subset below is class 1:
//   E_7 A_1^3: {2,5,7}        E_7 A_1 x A_3: {2,5,6,7}
//   F_4 A_1:   {3} (the orbit of 2 lambda e_i)

#include "veesys/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace veesys {

enum class Group { E6, E7, E8, F4 };

Group parse_group(std::string_view text);
std::string_view group_name(Group group);

struct ParabolicClass {
  Group group = Group::E8;
  /// Type with class index when the type splits, e.g. "A_1^3 (class 1)".
  std::string subtype_label;
  /// Type alone, e.g. "A_1 x A_3".
  std::string type_label;
  /// 0 when the type has a single class, else 1, 2, ...
  int class_index = 0;
  /// Representative subset, 1-based.
  std::vector<int> simple_root_subset;
  /// Every subset in the class, 1-based.
  std::vector<std::vector<int>> members;
  int corank = 0;
};

struct CatalogEntry {
  ParabolicClass parabolic;
  CovectorSystem system;
  int dim = 0;
  int count = 0;
  bool is_vee = false;
  std::optional<std::string> identified_as;
  /// Other classes of the same group whose restriction is equivalent to this one.
  std::vector<std::string> equivalent_to;
};

std::vector<ParabolicClass> enumerate_parabolic_classes(Group group);

/// lambda is used by F_4 only (default 1).  Results are cached per process.
std::vector<CatalogEntry> build_catalog(Group group, std::optional<double> lambda = std::nullopt);

/// The restricted system of one class, e.g. catalog_system(Group::E7, "A_1^3", 1).
CovectorSystem catalog_system(Group group, std::string_view type_label, int class_index = 0,
                              std::optional<double> lambda = std::nullopt);

/// Name of a known system equivalent to `system`, fitting one-parameter
/// families where needed, e.g. "F_4(lambda=0.5)".
std::optional<std::string> identify(const CovectorSystem& system,
                                    const TolerancePolicy& policy = {});

struct VerificationLine {
  std::string statement;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationLine> lines;
  bool all_pass() const;
};

VerificationReport verify_equivalence_table(const TolerancePolicy& policy = {});
VerificationReport verify_theorem4_identifications(const TolerancePolicy& policy = {});

}  // namespace veesys
