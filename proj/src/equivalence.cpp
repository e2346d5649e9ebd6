#include "veesys/equivalence.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

namespace veesys {
namespace {

/// Integer ids for real values: sorted values whose gaps stay within tol share an id.
class ValueClasses {
 public:
  ValueClasses(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    for (double v : values) {
      if (upper_.empty() || v - upper_.back() > tol) {
        upper_.push_back(v);
      } else {
        upper_.back() = v;
      }
    }
  }
  int id(double v) const {
    return static_cast<int>(std::lower_bound(upper_.begin(), upper_.end(), v) - upper_.begin());
  }

 private:
  std::vector<double> upper_;
};

/// Colour refinement on the disjoint union of both systems, edges labelled by
/// |inner product| class.  Returns one colour per vertex (A first, then B).
std::vector<int> refine_colours(const Matrix& pa, const Matrix& pb, std::span<const int> labels,
                                double tol) {
  const Eigen::Index na = pa.rows();
  const Eigen::Index n = na + pb.rows();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n * n));
  for (const Matrix* p : {&pa, &pb}) {
    for (Eigen::Index i = 0; i < p->rows(); ++i) {
      for (Eigen::Index j = i; j < p->cols(); ++j) values.push_back(std::abs((*p)(i, j)));
    }
  }
  const ValueClasses classes(std::move(values), tol);
  auto entry = [&](Eigen::Index i, Eigen::Index j) {
    return i < na ? std::abs(pa(i, j)) : std::abs(pb(i - na, j - na));
  };
  auto block = [&](Eigen::Index i) { return i < na ? std::pair{Eigen::Index{0}, na} : std::pair{na, n}; };

  std::vector<int> colour(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const int label = labels.empty() ? 0 : labels[static_cast<std::size_t>(i)];
    colour[i] = classes.id(entry(i, i)) * 1000003 + label;
  }
  std::size_t distinct = 0;
  for (int round = 0; round < 8; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(colour.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      std::vector<int> sig;
      const auto [lo, hi] = block(i);
      for (Eigen::Index j = lo; j < hi; ++j) {
        if (j == i) continue;
        sig.push_back(classes.id(entry(i, j)) * 1000003 + colour[j]);
      }
      std::sort(sig.begin(), sig.end());
      sig.push_back(colour[i]);
      next[i] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
    colour.swap(next);
    if (ids.size() == distinct) break;
    distinct = ids.size();
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const Matrix& pa, const Matrix& pb, const std::vector<int>& colour, double tol)
      : pa_(pa), pb_(pb), tol_(tol), n_(static_cast<std::size_t>(pa.rows())) {
    domain_.assign(n_, std::vector<char>(2 * n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (colour[i] == colour[n_ + j] && std::abs(pa(i, i) - pb(j, j)) <= tol) {
          domain_[i][2 * j] = 1;
          domain_[i][2 * j + 1] = 1;
        }
      }
    }
    assigned_.assign(n_, Pairing{});
    done_.assign(n_, 0);
  }

  bool run() {
    // The global sign is free: fix the first choice to +.
    return step(0, true);
  }

  const std::vector<Pairing>& pairing() const { return assigned_; }

 private:
  using Domains = std::vector<std::vector<char>>;

  std::size_t domain_size(std::size_t i) const {
    return static_cast<std::size_t>(std::count(domain_[i].begin(), domain_[i].end(), 1));
  }

  bool step(std::size_t matched, bool first) {
    if (matched == n_) return true;
    std::size_t best = n_;
    std::size_t best_size = 2 * n_ + 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (done_[i]) continue;
      const std::size_t s = domain_size(i);
      if (s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best_size == 0) return false;
    const std::size_t i = best;
    const std::vector<char> options = domain_[i];
    for (std::size_t opt = 0; opt < 2 * n_; ++opt) {
      if (!options[opt]) continue;
      const std::size_t j = opt / 2;
      const int sign = opt % 2 ? -1 : 1;
      if (first && sign < 0) continue;
      Domains saved = domain_;
      if (assign(i, j, sign)) {
        if (step(matched + 1, false)) return true;
      }
      domain_.swap(saved);
      done_[i] = 0;
    }
    return false;
  }

  /// Forward checking: prune every open domain against i -> sign * j.
  bool assign(std::size_t i, std::size_t j, int sign) {
    done_[i] = 1;
    assigned_[i] = {j, sign};
    for (std::size_t k = 0; k < n_; ++k) {
      if (done_[k]) continue;
      auto& dom = domain_[k];
      bool any = false;
      for (std::size_t l = 0; l < n_; ++l) {
        if (l == j) {
          dom[2 * l] = dom[2 * l + 1] = 0;
          continue;
        }
        for (int s = 0; s < 2; ++s) {
          char& ok = dom[2 * l + s];
          if (!ok) continue;
          const double sk = s ? -1.0 : 1.0;
          if (std::abs(sk * sign * pa_(k, i) - pb_(l, j)) > tol_) ok = 0;
          any = any || ok;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  const Matrix& pa_;
  const Matrix& pb_;
  double tol_;
  std::size_t n_;
  Domains domain_;
  std::vector<Pairing> assigned_;
  std::vector<char> done_;
};

}  // namespace

CovectorSystem normalize_to_unit_gram(const CovectorSystem& system, const TolerancePolicy& policy) {
  const GramForm form = gram(system, policy);
  if (!form.positive_definite) {
    throw Error(ErrorCode::IndefiniteForm,
                "Gram form of '" + system.name + "' is not positive definite");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(form.g);
  const Matrix inv_sqrt = eig.operatorInverseSqrt();
  CovectorSystem out;
  out.name = system.name;
  out.dim = system.dim;
  out.params = system.params;
  for (const auto& a : system.covectors) out.covectors.push_back(inv_sqrt * a);
  return out;
}

static std::optional<Certificate> equivalent_impl(const CovectorSystem& a, const CovectorSystem& b,
                                                  std::span<const int> labels,
                                                  const TolerancePolicy& policy) {
  const CovectorSystem na = normalize_to_unit_gram(a, policy);
  const CovectorSystem nb = normalize_to_unit_gram(b, policy);
  if (na.dim != nb.dim || na.size() != nb.size()) return std::nullopt;

  const double tol = 10 * policy.eps_rank;
  const Matrix ra = na.as_rows();
  const Matrix rb = nb.as_rows();
  const Matrix pa = ra * ra.transpose();
  const Matrix pb = rb * rb.transpose();

  const std::vector<int> colour = refine_colours(pa, pb, labels, tol);
  std::vector<int> ca(colour.begin(), colour.begin() + static_cast<long>(na.size()));
  std::vector<int> cb(colour.begin() + static_cast<long>(na.size()), colour.end());
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;

  Matcher matcher(pa, pb, colour, tol);
  if (!matcher.run()) return std::nullopt;

  Certificate cert;
  cert.pairing = matcher.pairing();
  // Both normalized systems satisfy sum a a^T = Id, so the least-squares map
  // sum s b a^T is exact when the pairing is.
  cert.map = Matrix::Zero(na.dim, na.dim);
  for (std::size_t i = 0; i < na.size(); ++i) {
    const auto& p = cert.pairing[i];
    cert.map.noalias() += p.sign * nb.covectors[p.target] * na.covectors[i].transpose();
  }
  double err = (cert.map.transpose() * cert.map - Matrix::Identity(na.dim, na.dim)).norm();
  for (std::size_t i = 0; i < na.size(); ++i) {
    const auto& p = cert.pairing[i];
    err = std::max(err, (cert.map * na.covectors[i] - p.sign * nb.covectors[p.target]).norm());
  }
  cert.max_error = err;
  if (err > std::sqrt(static_cast<double>(na.size())) * tol) return std::nullopt;
  return cert;
}

std::optional<Certificate> equivalent(const CovectorSystem& a, const CovectorSystem& b,
                                      const TolerancePolicy& policy) {
  return equivalent_impl(a, b, {}, policy);
}

std::optional<Certificate> equivalent_labelled(const CovectorSystem& a, std::span<const int> labels_a,
                                               const CovectorSystem& b, std::span<const int> labels_b,
                                               const TolerancePolicy& policy) {
  if (labels_a.size() != a.size() || labels_b.size() != b.size()) {
    throw Error(ErrorCode::PreconditionViolated, "one label per covector required");
  }
  std::vector<int> labels(labels_a.begin(), labels_a.end());
  labels.insert(labels.end(), labels_b.begin(), labels_b.end());
  return equivalent_impl(a, b, labels, policy);
}

}  // namespace veesys
