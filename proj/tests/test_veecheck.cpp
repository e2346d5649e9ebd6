#include "support.hpp"

#include "veesys/builders.hpp"
#include "veesys/veecheck.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace veesys;
using testing_support::independent_vee_residual;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

std::size_t index_of(const CovectorSystem& s, const Vector& v) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (collinear(s.covectors[i], v, 1e-9)) return i;
  }
  return s.size();
}

const PlaneClass* class_with(const std::vector<PlaneClass>& planes, std::size_t a, std::size_t b) {
  for (const auto& p : planes) {
    const auto& m = p.members;
    if (std::find(m.begin(), m.end(), a) != m.end() && std::find(m.begin(), m.end(), b) != m.end()) {
      return &p;
    }
  }
  return nullptr;
}

}  // namespace

TEST_CASE("plane_partition covers every pair exactly once") {
  for (const CovectorSystem& s : {root_system_a(3), root_system_f4(1.0), root_system_h3()}) {
    const auto planes = plane_partition(s);
    std::vector<int> seen(s.size() * s.size(), 0);
    for (const auto& p : planes) {
      for (std::size_t i = 0; i < p.members.size(); ++i) {
        for (std::size_t j = i + 1; j < p.members.size(); ++j) {
          const auto a = std::min(p.members[i], p.members[j]);
          const auto b = std::max(p.members[i], p.members[j]);
          ++seen[a * s.size() + b];
        }
      }
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) CHECK(seen[a * s.size() + b] == 1);
    }
  }
}

TEST_CASE("plane classes of A_3, F_4 and a pair") {
  // A_3 in its own coordinates: the plane of e1-e2, e2-e3 holds e1-e3 too.
  const CovectorSystem a3 = root_system_a(3);
  const auto p3 = plane_partition(a3);
  const auto* c = class_with(p3, 0, 3);  // members are ordered e1-e2, e1-e3, e1-e4, e2-e3, ...
  REQUIRE(c != nullptr);
  CHECK(c->members.size() == 3);

  const double l = 0.8;
  const CovectorSystem f4 = root_system_f4(l);
  const std::size_t i = index_of(f4, vec({1, 0, 0, 0}));
  const std::size_t j = index_of(f4, vec({1, 1, 1, 1}));
  const std::size_t k = index_of(f4, vec({1, -1, -1, -1}));
  REQUIRE(std::max({i, j, k}) < f4.size());
  const auto* f = class_with(plane_partition(f4), i, j);
  REQUIRE(f != nullptr);
  CHECK(f->members.size() == 3);
  CHECK(std::find(f->members.begin(), f->members.end(), k) != f->members.end());

  const std::vector<Covector> pair = {vec({1, 0}), vec({1, 2})};
  const auto pp = plane_partition(make_system("pair", 2, pair));
  REQUIRE(pp.size() == 1);
  CHECK(pp[0].members.size() == 2);
}

TEST_CASE("two-dimensional systems are always v-systems") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::vector<Covector> cs;
    for (int i = 0; i < 5; ++i) cs.push_back(testing_support::random_vector(rng, 2));
    CHECK(check_vee(make_system("random2", 2, cs)).is_vee);
  }
}

TEST_CASE("Fn-type verdicts") {
  CHECK(check_vee(fn_type(5, std::sqrt(6.0), 1.0)).is_vee);
  CHECK(check_vee(fn_type(6, 2.0, 1.0 / std::sqrt(2.0))).is_vee);
  for (double l : {0.5, 1.0, 2.0, 3.0}) CHECK_FALSE(check_vee(fn_type(7, l, 0.5)).is_vee);
  CHECK(check_vee(theorem4(1.0)).is_vee);
}

TEST_CASE("a non-v Fn-type system names the offending plane") {
  const CovectorSystem s = fn_type(5, 2.0, 1.0);
  const VeeReport r = check_vee(s);
  REQUIRE_FALSE(r.is_vee);
  CHECK(r.violations.size() > 0);
  // The plane through M(e1+...+e5), M(-e1+e2+...+e5) and e1 must be among them.
  const std::size_t a = index_of(s, vec({1, 1, 1, 1, 1}));
  const std::size_t b = index_of(s, vec({-1, 1, 1, 1, 1}));
  const std::size_t c = index_of(s, vec({1, 0, 0, 0, 0}));
  bool found = false;
  for (const auto& v : r.violations) {
    const auto& m = r.planes[v.plane].members;
    auto has = [&](std::size_t i) { return std::find(m.begin(), m.end(), i) != m.end(); };
    found = found || (has(a) && has(b) && has(c));
  }
  CHECK(found);
}

TEST_CASE("well-distributed sets") {
  const double s3 = std::sqrt(3.0);
  const std::vector<Covector> a2 = {vec({std::sqrt(2.0), 0}), vec({1 / std::sqrt(2.0), s3 / std::sqrt(2.0)}),
                                    vec({1 / std::sqrt(2.0), -s3 / std::sqrt(2.0)})};
  const auto l = check_well_distributed(a2, 2);
  REQUIRE(l.has_value());
  CHECK(*l == doctest::Approx(3.0));

  const std::vector<Covector> basis = {vec({1, 0}), vec({0, 1})};
  REQUIRE(check_well_distributed(basis, 2).has_value());
  CHECK(*check_well_distributed(basis, 2) == doctest::Approx(1.0));

  const std::vector<Covector> skew = {vec({1, 0}), vec({1, 1})};
  CHECK_FALSE(check_well_distributed(skew, 2).has_value());
}

TEST_CASE("reducible sets") {
  const std::vector<Covector> basis = {vec({1, 0}), vec({0, 1})};
  const auto r = check_reducible(basis);
  REQUIRE(r.has_value());
  CHECK(r->first.size() == 1);
  CHECK(r->second.size() == 1);

  const double s3 = std::sqrt(3.0);
  const std::vector<Covector> a2 = {vec({2, 0}), vec({1, s3}), vec({1, -s3})};
  CHECK_FALSE(check_reducible(a2).has_value());

  const std::vector<Covector> three = {vec({1, -1, 0, 0}), vec({0, 0, 1, -1}), vec({1, 1, 0, 0})};
  const auto r3 = check_reducible(three);
  REQUIRE(r3.has_value());
  auto blocks = std::vector<std::vector<std::size_t>>{r3->first, r3->second};
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  CHECK(blocks[0] == std::vector<std::size_t>{0, 2});
  CHECK(blocks[1] == std::vector<std::size_t>{1});
}

TEST_CASE("verdicts agree with the corpus and the independent oracle") {
  for (const auto& item : testing_support::corpus()) {
    CAPTURE(item.label);
    const VeeReport r = check_vee(item.system);
    CHECK(r.is_vee == item.is_vee);
    CHECK(r.is_vee == r.violations.empty());
    CHECK(check_vee_geometric(item.system) == item.is_vee);
    if (item.system.size() <= 70) {
      CHECK((independent_vee_residual(item.system) <= 1e-8) == item.is_vee);
    }
  }
}

TEST_CASE("verdict is invariant under scaling, rotation and reordering") {
  std::mt19937_64 rng(17);
  for (const auto& item : testing_support::corpus()) {
    if (item.system.size() > 70) continue;
    CAPTURE(item.label);
    const Matrix q = testing_support::random_orthogonal(rng, item.system.dim);
    CovectorSystem moved = testing_support::transformed(item.system, q);
    for (auto& c : moved.covectors) c *= 3.7;
    std::shuffle(moved.covectors.begin(), moved.covectors.end(), rng);
    CHECK(check_vee(moved).is_vee == item.is_vee);
  }
}

TEST_CASE("Coxeter systems are v for every orbit length") {
  for (double l : {0.3, 1.0, 2.7}) {
    CAPTURE(l);
    CHECK(check_vee(root_system_b(4, l)).is_vee);
    CHECK(check_vee(root_system_f4(l)).is_vee);
  }
}

TEST_CASE("deformed families with random positive parameters are v") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pos(0.2, 3.0);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> c(4);
    for (auto& x : c) x = pos(rng);
    CHECK(check_vee(deformed_a(c)).is_vee);
    CHECK(check_vee(deformed_b(pos(rng), {c[0], c[1], c[2]})).is_vee);
  }
}

TEST_CASE("check_vee rejects degenerate forms") {
  const std::vector<Covector> cs = {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})};
  CovectorSystem s;
  s.name = "flat";
  s.dim = 3;
  s.covectors = cs;
  try {
    check_vee(s);
    FAIL("expected DegenerateForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateForm);
  }
}
