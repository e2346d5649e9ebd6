#include "veesys/catalog.hpp"

#include "veesys/builders.hpp"
#include "veesys/equivalence.hpp"
#include "veesys/restriction.hpp"
#include "veesys/veecheck.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace veesys {
namespace {

int group_rank(Group g) {
  switch (g) {
    case Group::E6: return 6;
    case Group::E7: return 7;
    case Group::E8: return 8;
    case Group::F4: return 4;
  }
  return 0;
}

CovectorSystem root_system(Group g, double lambda) {
  return g == Group::F4 ? root_system_f4(lambda) : root_system_e(group_rank(g));
}

std::vector<Vector> simple_roots(Group g) {
  return g == Group::F4 ? simple_roots_f4() : simple_roots_e(group_rank(g));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------- type labels

/// 0 orthogonal, 1 single bond, 2 double bond, 3 the H-type bond (angle pi/5).
int bond(const Vector& a, const Vector& b) {
  const double c = a.dot(b);
  const double c2 = c * c / (a.squaredNorm() * b.squaredNorm());
  if (c2 < 0.01) return 0;
  if (std::abs(c2 - 0.25) < 0.01) return 1;
  if (std::abs(c2 - 0.5) < 0.01) return 2;
  return 3;
}

std::string type_label(const std::vector<Vector>& simple, const std::vector<int>& subset) {
  const std::size_t k = subset.size();
  std::vector<std::vector<int>> bonds(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) bonds[i][j] = bond(simple[subset[i]], simple[subset[j]]);
    }
  }
  std::vector<int> comp(k, -1);
  std::vector<std::pair<char, int>> parts;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s}, stack{s};
    comp[s] = static_cast<int>(parts.size());
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < k; ++w) {
        if (comp[w] < 0 && bonds[u][w] > 0) {
          comp[w] = comp[s];
          nodes.push_back(w);
          stack.push_back(w);
        }
      }
    }
    int max_bond = 0;
    std::size_t branch = k;
    for (std::size_t u : nodes) {
      int degree = 0;
      for (std::size_t w : nodes) {
        max_bond = std::max(max_bond, bonds[u][w]);
        degree += bonds[u][w] > 0;
      }
      if (degree >= 3) branch = u;
    }
    const int n = static_cast<int>(nodes.size());
    char letter = 'A';
    if (max_bond == 3) {
      letter = 'H';
    } else if (max_bond == 2) {
      letter = 'B';
    } else if (branch < k) {
      std::vector<int> arms;
      for (std::size_t w : nodes) {
        if (bonds[branch][w] == 0) continue;
        int len = 0;
        std::size_t prev = branch, cur = w;
        while (true) {
          ++len;
          std::size_t next = k;
          for (std::size_t x : nodes) {
            if (x != prev && x != cur && bonds[cur][x] > 0) next = x;
          }
          if (next == k) break;
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      letter = arms.size() >= 2 && arms[0] == 1 && arms[1] == 1 ? 'D' : 'E';
    }
    parts.emplace_back(letter, n);
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i > 0) os << " x ";
    os << parts[i].first << '_' << parts[i].second;
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

// ------------------------------------------------------------ classification

struct Reference {
  Group group;
  const char* type;
  std::vector<int> subset;
};

const std::vector<Reference>& references() {
  static const std::vector<Reference> refs{
      {Group::E7, "A_1^3", {2, 5, 7}},
      {Group::E7, "A_1 x A_3", {2, 5, 6, 7}},
      {Group::F4, "A_1", {3}},
  };
  return refs;
}

std::vector<Vector> pick(const std::vector<Vector>& simple, const std::vector<int>& subset1) {
  std::vector<Vector> out;
  for (int i : subset1) out.push_back(simple[static_cast<std::size_t>(i - 1)]);
  return out;
}

std::vector<ParabolicClass> classify(Group group) {
  const TolerancePolicy policy;
  const CovectorSystem roots = root_system(group, 1.0);
  const std::vector<Vector> simple = simple_roots(group);
  const int rank = group_rank(group);

  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    if (rank - std::popcount(mask) < 3) continue;
    std::vector<int> s;
    for (int i = 0; i < rank; ++i) {
      if (mask >> i & 1u) s.push_back(i + 1);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  struct Working {
    ParabolicClass cls;
    CovectorSystem restricted;
    std::vector<int> labels;
  };
  std::vector<Working> work;
  for (const auto& subset : subsets) {
    std::vector<int> zero_based;
    for (int i : subset) zero_based.push_back(i - 1);
    const std::string type = type_label(simple, zero_based);
    const std::vector<Vector> u = pick(simple, subset);
    const std::vector<std::size_t> closed = subsystem_of(roots, u, policy);
    std::vector<int> labels(roots.size(), 0);
    for (std::size_t i : closed) labels[i] = 1;
    CovectorSystem restricted = restrict_along(roots, u, policy).system;

    bool placed = false;
    for (auto& w : work) {
      if (w.cls.type_label != type || w.restricted.size() != restricted.size()) continue;
      if (!equivalent(restricted, w.restricted, policy)) continue;
      if (!equivalent_labelled(roots, labels, roots, w.labels, policy)) continue;
      w.cls.members.push_back(subset);
      placed = true;
      break;
    }
    if (placed) continue;
    Working w;
    w.cls.group = group;
    w.cls.type_label = type;
    w.cls.simple_root_subset = subset;
    w.cls.members.push_back(subset);
    w.cls.corank = rank - static_cast<int>(subset.size());
    w.restricted = std::move(restricted);
    w.labels = std::move(labels);
    work.push_back(std::move(w));
  }

  // Class indices for split types.
  std::map<std::string, std::vector<std::size_t>> by_type;
  for (std::size_t i = 0; i < work.size(); ++i) by_type[work[i].cls.type_label].push_back(i);
  for (auto& [type, idx] : by_type) {
    if (idx.size() < 2) {
      work[idx[0]].cls.subtype_label = type;
      continue;
    }
    for (const auto& ref : references()) {
      if (ref.group != group || type != ref.type) continue;
      auto holds = [&](std::size_t i) {
        const auto& m = work[i].cls.members;
        return std::find(m.begin(), m.end(), ref.subset) != m.end();
      };
      std::stable_partition(idx.begin(), idx.end(), holds);
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
      auto& cls = work[idx[k]].cls;
      cls.class_index = static_cast<int>(k + 1);
      cls.subtype_label = type + " (class " + std::to_string(k + 1) + ")";
    }
  }

  std::vector<ParabolicClass> out;
  for (auto& w : work) out.push_back(std::move(w.cls));
  return out;
}

// ----------------------------------------------------------- identification

double norm_ratio(const CovectorSystem& system, const TolerancePolicy& policy) {
  const CovectorSystem n = normalize_to_unit_gram(system, policy);
  double lo = INFINITY, hi = 0.0;
  for (const auto& a : n.covectors) {
    lo = std::min(lo, a.norm());
    hi = std::max(hi, a.norm());
  }
  return hi / lo;
}

struct FixedCandidate {
  std::string label;
  std::function<CovectorSystem()> make;
};

struct FamilyCandidate {
  std::string prefix;
  std::string param;
  std::function<CovectorSystem(double)> make;
};

std::vector<FixedCandidate> fixed_candidates(int dim) {
  std::vector<FixedCandidate> out;
  const std::string d = std::to_string(dim);
  out.push_back({"A_" + d, [dim] { return root_system_a(dim); }});
  if (dim >= 4) out.push_back({"D_" + d, [dim] { return root_system_d(dim); }});
  if (dim >= 6 && dim <= 8) out.push_back({"E_" + d, [dim] { return root_system_e(dim); }});
  if (dim == 3) {
    out.push_back({"H_3", [] { return root_system_h3(); }});
    const double m = 1 / std::sqrt(2.0);
    out.push_back({"Thm4_eij(M=" + fmt(m) + ")", [m] { return theorem4_rest_eij(m); }});
    out.push_back({"Thm4_long(M=" + fmt(m) + ")", [m] { return theorem4_rest_long(m); }});
  }
  if (dim == 4) {
    out.push_back({"H_4", [] { return root_system_h4(); }});
    const double m = 1 / std::sqrt(2.0);
    out.push_back({"Thm4(M=" + fmt(m) + ")", [m] { return theorem4(m); }});
  }
  if (dim == 5) out.push_back({"F_5", [] { return fn_type(5, std::sqrt(6.0), 1.0); }});
  if (dim == 6) out.push_back({"F_6", [] { return fn_type(6, 2.0, 1 / std::sqrt(2.0)); }});
  return out;
}

std::vector<FamilyCandidate> family_candidates(int dim) {
  std::vector<FamilyCandidate> out;
  if (dim >= 2) {
    out.push_back({"B_" + std::to_string(dim), "lambda",
                   [dim](double p) { return root_system_b(dim, p); }});
  }
  if (dim == 3) {
    out.push_back({"F_3^1", "lambda", [](double p) { return f3_variant1(p); }});
    out.push_back({"Thm4_eij", "M", [](double p) { return theorem4_rest_eij(p); }});
    out.push_back({"Thm4_long", "M", [](double p) { return theorem4_rest_long(p); }});
  }
  if (dim == 4) {
    out.push_back({"F_4", "lambda", [](double p) { return root_system_f4(p); }});
    out.push_back({"Thm4", "M", [](double p) { return theorem4(p); }});
  }
  return out;
}

/// Parameters in [1e-2, 1e2] where the family's normalized norm ratio meets
/// `target`: sign changes refined by bisection, near-touching minima by
/// golden section.
std::vector<double> fit_parameter(const FamilyCandidate& fam, std::size_t count, double target,
                                  const TolerancePolicy& policy) {
  constexpr int kGrid = 240;
  std::vector<double> t(kGrid), g(kGrid, NAN);
  auto eval = [&](double logp) -> double {
    try {
      const CovectorSystem s = fam.make(std::exp(logp));
      if (s.size() != count) return NAN;
      return norm_ratio(s, policy) - target;
    } catch (const Error&) {
      return NAN;
    }
  };
  const double lo = std::log(1e-2), hi = std::log(1e2);
  for (int i = 0; i < kGrid; ++i) {
    t[i] = lo + (hi - lo) * i / (kGrid - 1);
    g[i] = eval(t[i]);
  }
  std::vector<double> roots;
  for (int i = 0; i + 1 < kGrid; ++i) {
    if (std::isnan(g[i]) || std::isnan(g[i + 1])) continue;
    if (g[i] == 0) {
      roots.push_back(t[i]);
    } else if ((g[i] < 0) != (g[i + 1] < 0)) {
      double a = t[i], b = t[i + 1], ga = g[i];
      for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (a + b);
        const double gm = eval(m);
        if (std::isnan(gm)) break;
        if ((gm < 0) == (ga < 0)) {
          a = m;
          ga = gm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
  }
  const double invphi = (std::sqrt(5.0) - 1) / 2;
  for (int i = 1; i + 1 < kGrid; ++i) {
    if (std::isnan(g[i - 1]) || std::isnan(g[i]) || std::isnan(g[i + 1])) continue;
    const double v = std::abs(g[i]);
    if (!(v <= std::abs(g[i - 1]) && v <= std::abs(g[i + 1]))) continue;
    if ((g[i - 1] < 0) != (g[i + 1] < 0)) continue;  // handled as a sign change
    if (v > 1e-2 * target) continue;
    double a = t[i - 1], b = t[i + 1];
    for (int it = 0; it < 100; ++it) {
      const double c = b - invphi * (b - a);
      const double d = a + invphi * (b - a);
      const double gc = std::abs(eval(c)), gd = std::abs(eval(d));
      if (std::isnan(gc) || std::isnan(gd)) break;
      if (gc < gd) {
        b = d;
      } else {
        a = c;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  std::vector<double> out;
  for (double r : roots) out.push_back(std::exp(r));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// ------------------------------------------------------------------- caches

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<ParabolicClass>& classes_cached(Group group) {
  static std::map<Group, std::vector<ParabolicClass>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(group);
  if (it == cache.end()) it = cache.emplace(group, classify(group)).first;
  return it->second;
}

std::string entry_name(Group group, double lambda, const ParabolicClass& cls) {
  std::ostringstream os;
  os << '(' << group_name(group);
  if (group == Group::F4) os << "(lambda=" << fmt(lambda) << ')';
  os << ',' << cls.type_label << ')';
  if (cls.class_index > 0) os << '_' << cls.class_index;
  return os.str();
}

std::vector<CatalogEntry> compute_catalog(Group group, double lambda) {
  const TolerancePolicy policy;
  const std::vector<ParabolicClass>& classes = classes_cached(group);
  const CovectorSystem roots = root_system(group, lambda);
  const std::vector<Vector> simple = simple_roots(group);
  std::vector<CatalogEntry> out;
  for (const auto& cls : classes) {
    CatalogEntry e;
    e.parabolic = cls;
    e.system = restrict_along(roots, pick(simple, cls.simple_root_subset), policy).system;
    e.system.name = entry_name(group, lambda, cls);
    e.system.params.clear();
    if (group == Group::F4) e.system.params["lambda"] = lambda;
    e.dim = e.system.dim;
    e.count = static_cast<int>(e.system.size());
    try {
      e.is_vee = check_vee(e.system, policy).is_vee;
    } catch (const Error&) {
      e.is_vee = false;
    }
    try {
      e.identified_as = identify(e.system, policy);
    } catch (const Error&) {
    }
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i].dim != out[j].dim || out[i].count != out[j].count) continue;
      bool eq = false;
      try {
        eq = equivalent(out[i].system, out[j].system, policy).has_value();
      } catch (const Error&) {
      }
      if (!eq) continue;
      out[i].equivalent_to.push_back(out[j].system.name);
      out[j].equivalent_to.push_back(out[i].system.name);
    }
  }
  return out;
}

// ------------------------------------------------------------- verification

VerificationLine check_line(std::string statement,
                            const std::vector<std::pair<CovectorSystem, CovectorSystem>>& pairs,
                            bool expect_equivalent, const TolerancePolicy& policy) {
  VerificationLine line;
  line.statement = std::move(statement);
  line.pass = true;
  std::ostringstream detail;
  for (const auto& [a, b] : pairs) {
    try {
      const auto cert = equivalent(a, b, policy);
      const bool ok = cert.has_value() == expect_equivalent;
      line.pass = line.pass && ok;
      detail << a.name << " [" << a.size() << "] vs " << b.name << " [" << b.size() << "]: ";
      if (cert) {
        detail << "equivalent, max error " << cert->max_error;
      } else {
        detail << "not equivalent";
      }
      detail << "; ";
    } catch (const Error& e) {
      line.pass = false;
      detail << a.name << " vs " << b.name << ": " << e.what() << "; ";
    }
  }
  line.detail = detail.str();
  if (line.detail.size() >= 2) line.detail.resize(line.detail.size() - 2);
  return line;
}

VerificationLine guarded(const std::string& statement,
                         const std::function<VerificationLine()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {statement, false, e.what()};
  }
}

}  // namespace

Group parse_group(std::string_view text) {
  std::string up;
  for (char c : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "E6") return Group::E6;
  if (up == "E7") return Group::E7;
  if (up == "E8") return Group::E8;
  if (up == "F4") return Group::F4;
  throw Error(ErrorCode::InvalidSpec, "unknown group '" + std::string(text) + "' (use E6, E7, E8 or F4)");
}

std::string_view group_name(Group group) {
  switch (group) {
    case Group::E6: return "E6";
    case Group::E7: return "E7";
    case Group::E8: return "E8";
    case Group::F4: return "F4";
  }
  return "?";
}

std::vector<ParabolicClass> enumerate_parabolic_classes(Group group) {
  return classes_cached(group);
}

std::vector<CatalogEntry> build_catalog(Group group, std::optional<double> lambda) {
  const double l = group == Group::F4 ? lambda.value_or(1.0) : 0.0;
  static std::map<std::pair<Group, double>, std::shared_ptr<const std::vector<CatalogEntry>>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({group, l});
    if (it != cache.end()) return *it->second;
  }
  auto entries = std::make_shared<const std::vector<CatalogEntry>>(compute_catalog(group, l));
  std::lock_guard lock(cache_mutex());
  cache.emplace(std::pair{group, l}, entries);
  return *entries;
}

CovectorSystem catalog_system(Group group, std::string_view type_label, int class_index,
                              std::optional<double> lambda) {
  for (const auto& e : build_catalog(group, lambda)) {
    if (e.parabolic.type_label == type_label && e.parabolic.class_index == class_index) {
      return e.system;
    }
  }
  std::ostringstream os;
  os << "no class " << type_label;
  if (class_index > 0) os << " (class " << class_index << ")";
  os << " in the catalog of " << group_name(group);
  throw Error(ErrorCode::InvalidSpec, os.str());
}

std::optional<std::string> identify(const CovectorSystem& system, const TolerancePolicy& policy) {
  const int dim = system.dim;
  for (const auto& cand : fixed_candidates(dim)) {
    CovectorSystem c;
    try {
      c = cand.make();
    } catch (const Error&) {
      continue;
    }
    if (c.size() != system.size()) continue;
    if (equivalent(system, c, policy)) return cand.label;
  }
  const double target = norm_ratio(system, policy);
  for (const auto& fam : family_candidates(dim)) {
    std::vector<std::string> hits;
    for (double p : fit_parameter(fam, system.size(), target, policy)) {
      CovectorSystem c;
      try {
        c = fam.make(p);
      } catch (const Error&) {
        continue;
      }
      if (c.size() != system.size() || !equivalent(system, c, policy)) continue;
      const std::string label = fam.prefix + "(" + fam.param + "=" + fmt(p) + ")";
      if (std::find(hits.begin(), hits.end(), label) == hits.end()) hits.push_back(label);
    }
    if (hits.empty()) continue;
    std::string joined;
    for (std::size_t i = 0; i < hits.size(); ++i) joined += (i ? " = " : "") + hits[i];
    return joined;
  }
  return std::nullopt;
}

bool VerificationReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.pass; });
}

VerificationReport verify_equivalence_table(const TolerancePolicy& policy) {
  const double r2 = std::sqrt(2.0);
  VerificationReport report;
  auto add = [&](const std::string& statement,
                 std::function<std::vector<std::pair<CovectorSystem, CovectorSystem>>()> pairs) {
    report.lines.push_back(guarded(statement, [&] {
      return check_line(statement, pairs(), true, policy);
    }));
  };
  auto f4a1 = [](double lambda, int cls) {
    return catalog_system(Group::F4, "A_1", cls, lambda);
  };

  add("(E8,D_4) = F_4(sqrt 2)", [&] {
    return std::vector{std::pair{catalog_system(Group::E8, "D_4"), root_system_f4(r2)}};
  });
  add("(E8,D_5) = (F_4(sqrt 2),A_1)_1", [&] {
    return std::vector{std::pair{catalog_system(Group::E8, "D_5"), f4a1(r2, 1)}};
  });
  add("(E8,A_1 x D_4) = (F_4(sqrt 2),A_1)_2", [&] {
    return std::vector{std::pair{catalog_system(Group::E8, "A_1 x D_4"), f4a1(r2, 2)}};
  });
  add("(E7,A_1^3)_1 = F_4(1/2)", [&] {
    return std::vector{std::pair{catalog_system(Group::E7, "A_1^3", 1), root_system_f4(0.5)}};
  });
  add("(E7,A_1^4) = (F_4(1/2),A_1)_1", [&] {
    return std::vector{std::pair{catalog_system(Group::E7, "A_1^4"), f4a1(0.5, 1)}};
  });
  add("(E7,A_1 x A_3)_1 = (F_4(1/2),A_1)_2", [&] {
    return std::vector{std::pair{catalog_system(Group::E7, "A_1 x A_3", 1), f4a1(0.5, 2)}};
  });
  add("(E7,D_4) = B_3(sqrt 2/2)", [&] {
    return std::vector{std::pair{catalog_system(Group::E7, "D_4"), root_system_b(3, r2 / 2)}};
  });
  add("(E6,A_3) = B_3(-2/3; 1,1,2/3)", [&] {
    return std::vector{
        std::pair{catalog_system(Group::E6, "A_3"), deformed_b(-2.0 / 3, {1, 1, 2.0 / 3})}};
  });
  for (double lambda : {0.3, 0.5, 1.0, r2, 2.0}) {
    add("(F_4(" + fmt(lambda) + "),A_1)_1 = (F_4(" + fmt(1 / (2 * lambda)) + "),A_1)_2", [&] {
      return std::vector{std::pair{f4a1(lambda, 1), f4a1(1 / (2 * lambda), 2)}};
    });
  }
  add("(F_4(0),A_1)_1 = B_3(0; 1,1,1) = B_3(sqrt 2)", [&] {
    return std::vector{std::pair{f4a1(0.0, 1), deformed_b(0.0, {1, 1, 1})},
                       std::pair{f4a1(0.0, 1), root_system_b(3, r2)}};
  });
  add("(F_4(0),A_1)_2 = B_3(-1; 1,1,2)", [&] {
    return std::vector{std::pair{f4a1(0.0, 2), deformed_b(-1.0, {1, 1, 2})}};
  });
  for (double lambda : {0.3, 0.7, 1.0, 2.0}) {
    add("F_4(" + fmt(lambda) + ") = F_4(" + fmt(1 / (2 * lambda)) + ")", [&] {
      return std::vector{std::pair{root_system_f4(lambda), root_system_f4(1 / (2 * lambda))}};
    });
  }
  return report;
}

VerificationReport verify_theorem4_identifications(const TolerancePolicy& policy) {
  const double h = 1 / std::sqrt(2.0);
  VerificationReport report;
  auto add = [&](const std::string& statement, bool expect,
                 std::function<std::pair<CovectorSystem, CovectorSystem>()> pair) {
    report.lines.push_back(guarded(statement, [&] {
      return check_line(statement, {pair()}, expect, policy);
    }));
  };
  add("Thm4(M=1) = (E7,A_3)", true,
      [&] { return std::pair{theorem4(1.0), catalog_system(Group::E7, "A_3")}; });
  add("Thm4(M=1/sqrt 2) = (E6,A_1^2)", true,
      [&] { return std::pair{theorem4(h), catalog_system(Group::E6, "A_1^2")}; });
  add("Thm4_eij(M=1) = (E7,A_1 x A_3)_2", true,
      [&] { return std::pair{theorem4_rest_eij(1.0), catalog_system(Group::E7, "A_1 x A_3", 2)}; });
  add("Thm4_eij(M=1/sqrt 2) = (E6,A_1^3)", true,
      [&] { return std::pair{theorem4_rest_eij(h), catalog_system(Group::E6, "A_1^3")}; });
  add("Thm4_long(M=1) = (E7,A_4)", true,
      [&] { return std::pair{theorem4_rest_long(1.0), catalog_system(Group::E7, "A_4")}; });
  add("Thm4_long(M=1/sqrt 2) = (E6,A_1 x A_2)", true,
      [&] { return std::pair{theorem4_rest_long(h), catalog_system(Group::E6, "A_1 x A_2")}; });
  add("Thm4(M=0.8) != (E7,A_3)", false,
      [&] { return std::pair{theorem4(0.8), catalog_system(Group::E7, "A_3")}; });
  add("Thm4(M=0.8) != (E6,A_1^2)", false,
      [&] { return std::pair{theorem4(0.8), catalog_system(Group::E6, "A_1^2")}; });
  return report;
}

}  // namespace veesys
