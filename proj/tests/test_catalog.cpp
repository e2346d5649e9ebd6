#include "veesys/builders.hpp"
#include "veesys/catalog.hpp"
#include "veesys/equivalence.hpp"
#include "veesys/veecheck.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace veesys;

namespace {

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, const std::string& type,
                               int class_index = 0) {
  for (const auto& e : cat) {
    if (e.parabolic.type_label == type &&
        (class_index == 0 || e.parabolic.class_index == class_index)) {
      return &e;
    }
  }
  return nullptr;
}

int classes_of_type(const std::vector<ParabolicClass>& classes, const std::string& type) {
  return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                        [&](const auto& c) { return c.type_label == type; }));
}

}  // namespace

TEST_CASE("group names") {
  CHECK(parse_group("E7") == Group::E7);
  CHECK(parse_group("f4") == Group::F4);
  CHECK(group_name(Group::E8) == "E8");
  CHECK_THROWS_AS(parse_group("G2"), Error);
}

TEST_CASE("parabolic classes of corank at least 3") {
  const auto f4 = enumerate_parabolic_classes(Group::F4);
  CHECK(f4.size() == 2);
  CHECK(classes_of_type(f4, "A_1") == 2);

  const auto e6 = enumerate_parabolic_classes(Group::E6);
  CHECK(classes_of_type(e6, "A_1^2") == 1);
  const auto e7 = enumerate_parabolic_classes(Group::E7);
  CHECK(classes_of_type(e7, "A_1^3") == 2);
  CHECK(classes_of_type(e7, "A_1 x A_3") == 2);
  const auto e8 = enumerate_parabolic_classes(Group::E8);
  for (const auto& c : e8) {
    CAPTURE(c.subtype_label);
    CHECK(classes_of_type(e8, c.type_label) == 1);
    CHECK(c.corank >= 3);
    CHECK(c.corank == 8 - static_cast<int>(c.simple_root_subset.size()));
  }
  for (const auto* classes : {&f4, &e6, &e7, &e8}) {
    for (const auto& c : *classes) {
      CHECK_FALSE(c.members.empty());
      CHECK(std::find(c.members.begin(), c.members.end(), c.simple_root_subset) != c.members.end());
    }
  }
}

TEST_CASE("F_4 catalog") {
  for (double l : {0.5, 1.0, 1.3}) {
    CAPTURE(l);
    const auto cat = build_catalog(Group::F4, l);
    REQUIRE(cat.size() == 2);
    for (const auto& e : cat) {
      CHECK(e.dim == 3);
      CHECK(e.count == 13);
      CHECK(e.is_vee);
    }
    const CatalogEntry* first = find_entry(cat, "A_1", 1);
    REQUIRE(first != nullptr);
    CHECK(equivalent(first->system, f3_variant1(l)).has_value());
  }
}

TEST_CASE("E_8 catalog rows") {
  const auto cat = build_catalog(Group::E8);
  for (const auto& e : cat) {
    CAPTURE(e.system.name);
    CHECK(e.is_vee);
    CHECK(e.dim == e.parabolic.corank);
    CHECK(e.count == static_cast<int>(e.system.size()));
  }
  const CatalogEntry* a12 = find_entry(cat, "A_1^2");
  REQUIRE(a12 != nullptr);
  CHECK(a12->dim == 6);
  CHECK(a12->count == 68);
  CHECK(a12->identified_as == std::optional<std::string>("F_6"));
  const CatalogEntry* a3 = find_entry(cat, "A_3");
  REQUIRE(a3 != nullptr);
  CHECK(a3->dim == 5);
  CHECK(a3->count == 41);
  CHECK(a3->identified_as == std::optional<std::string>("F_5"));
}

TEST_CASE("catalog entries of one group are pairwise inequivalent") {
  for (Group g : {Group::E6, Group::E7, Group::E8}) {
    const auto cat = build_catalog(g);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        if (cat[i].dim != cat[j].dim || cat[i].count != cat[j].count) continue;
        const bool eq = equivalent(cat[i].system, cat[j].system).has_value();
        // Distinct classes may still restrict to the same system; the catalog says so.
        const auto& names = cat[i].equivalent_to;
        const bool listed = std::find(names.begin(), names.end(), cat[j].system.name) != names.end();
        CHECK(eq == listed);
      }
    }
  }
}

TEST_CASE("E_7 split classes") {
  const auto cat = build_catalog(Group::E7);
  const CatalogEntry* a13_1 = find_entry(cat, "A_1^3", 1);
  const CatalogEntry* a13_2 = find_entry(cat, "A_1^3", 2);
  REQUIRE(a13_1 != nullptr);
  REQUIRE(a13_2 != nullptr);
  CHECK(a13_1->system.name == "(E7,A_1^3)_1");
  CHECK(a13_1->count != a13_2->count);
  CHECK(equivalent(a13_1->system, root_system_f4(0.5)).has_value());
  CHECK(a13_1->parabolic.simple_root_subset == std::vector<int>{2, 5, 7});
}

TEST_CASE("catalog_system lookups") {
  CHECK(catalog_system(Group::E8, "A_1^2").size() == 68);
  CHECK(catalog_system(Group::F4, "A_1", 1, 0.5).size() == 13);
  CHECK_THROWS_AS(catalog_system(Group::E8, "G_2"), Error);
}

TEST_CASE("identify names fixed and fitted systems") {
  CHECK(identify(fn_type(5, std::sqrt(6.0), 1.0)) == std::optional<std::string>("F_5"));
  const auto f4 = identify(root_system_f4(0.8));
  REQUIRE(f4.has_value());
  CHECK(f4->find("F_4(lambda=0.8)") != std::string::npos);
  const auto b3 = identify(root_system_b(3, 0.6));
  REQUIRE(b3.has_value());
  CHECK(b3->find("B_3(lambda=0.6)") != std::string::npos);
  CHECK_FALSE(identify(fn_type(5, 2.0, 1.0)).has_value());
}

TEST_CASE("equivalence table and one-parameter identifications pass") {
  const VerificationReport table = verify_equivalence_table();
  CHECK(table.lines.size() >= 12);
  for (const auto& line : table.lines) {
    CAPTURE(line.statement);
    CAPTURE(line.detail);
    CHECK(line.pass);
  }
  const VerificationReport t4 = verify_theorem4_identifications();
  CHECK(t4.lines.size() == 8);
  CHECK(t4.all_pass());
}
