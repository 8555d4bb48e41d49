#include "c1cox/cone.hpp"

#include <algorithm>
#include <set>

#include "c1cox/error.hpp"
#include "c1cox/linear_program.hpp"

namespace c1cox {

namespace {

std::vector<IntVector> normalize_rays(std::vector<IntVector> rays, std::size_t dim) {
  std::set<IntVector> unique;
  for (IntVector& r : rays) {
    if (r.size() != dim)
      throw Error(ErrorKind::InvalidArgument, "generator has wrong ambient dimension");
    if (is_zero(r)) continue;
    unique.insert(primitive(r));
  }
  return {unique.begin(), unique.end()};
}

// Lattice basis of the saturated span of arbitrary vectors.
std::vector<IntVector> span_basis(const std::vector<IntVector>& vs, std::size_t dim) {
  std::vector<IntVector> nonzero;
  for (const IntVector& v : vs) {
    if (v.size() != dim)
      throw Error(ErrorKind::InvalidArgument, "generator has wrong ambient dimension");
    if (!is_zero(v)) nonzero.push_back(v);
  }
  if (nonzero.empty()) return {};
  const auto normals = integer_kernel(IntMatrix::from_rows(nonzero));
  if (normals.empty()) return IntMatrix::identity(dim).column_list();
  return integer_kernel(IntMatrix::from_rows(normals));
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
    if (b > (1ULL << 40)) return b;
  }
  return b;
}

constexpr std::uint64_t kSubsetCap = 2'000'000;

}  // namespace

Cone::Cone(std::size_t ambient_dim) : dim_(ambient_dim) {}

Cone::Cone(std::size_t ambient_dim, std::vector<IntVector> rays,
           std::vector<IntVector> lineality)
    : dim_(ambient_dim),
      rays_(normalize_rays(std::move(rays), ambient_dim)),
      lineality_(span_basis(lineality, ambient_dim)) {}

std::size_t Cone::dimension() const {
  std::vector<IntVector> all = rays_;
  all.insert(all.end(), lineality_.begin(), lineality_.end());
  return rank(all);
}

bool Cone::contains(std::span<const Integer> v) const {
  if (v.size() != dim_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  FeasibilityProblem lp(dim_);
  for (const IntVector& r : rays_) lp.add_nonnegative(r);
  for (const IntVector& l : lineality_) lp.add_free(l);
  lp.set_rhs(v);
  return lp.feasible();
}

bool Cone::contains(const Cone& other) const {
  if (other.dim_ != dim_) return false;
  for (const IntVector& r : other.rays_)
    if (!contains(r)) return false;
  for (const IntVector& l : other.lineality_) {
    if (!contains(l)) return false;
    IntVector neg = l;
    for (Integer& x : neg) x = -x;
    if (!contains(neg)) return false;
  }
  return true;
}

bool Cone::relint_contains(std::span<const Integer> v) const {
  if (v.size() != dim_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  // sum c_k r_k + lineality = t v with every c_k > 0 and t > 0, homogenized to
  // c_k >= 1, t >= 1.
  FeasibilityProblem lp(dim_);
  for (const IntVector& r : rays_) lp.add_at_least_one(r);
  for (const IntVector& l : lineality_) lp.add_free(l);
  IntVector neg(v.begin(), v.end());
  for (Integer& x : neg) x = -x;
  lp.add_at_least_one(neg);
  lp.set_rhs(IntVector(dim_, Integer(0)));
  return lp.feasible();
}

bool Cone::relint_meets(const Cone& other) const {
  if (other.dim_ != dim_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  FeasibilityProblem lp(dim_);
  for (const IntVector& r : rays_) lp.add_at_least_one(r);
  for (const IntVector& l : lineality_) lp.add_free(l);
  for (const IntVector& r : other.rays_) {
    IntVector neg = r;
    for (Integer& x : neg) x = -x;
    lp.add_nonnegative(neg);
  }
  for (const IntVector& l : other.lineality_) lp.add_free(l);
  lp.set_rhs(IntVector(dim_, Integer(0)));
  return lp.feasible();
}

bool Cone::is_pointed() const {
  if (!reduced().lineality_.empty()) return false;
  return true;
}

Cone Cone::reduced() const {
  std::vector<IntVector> lin = lineality_;
  std::vector<IntVector> rest;
  for (const IntVector& r : rays_) {
    IntVector neg = r;
    for (Integer& x : neg) x = -x;
    if (contains(neg)) {
      lin.push_back(r);
    } else {
      rest.push_back(r);
    }
  }
  Cone current(dim_, rest, lin);
  for (std::size_t i = 0; i < current.rays_.size();) {
    Cone without = current;
    without.rays_.erase(without.rays_.begin() + static_cast<std::ptrdiff_t>(i));
    if (without.contains(current.rays_[i])) {
      current = std::move(without);
    } else {
      ++i;
    }
  }
  return current;
}

Cone::HRep Cone::h_representation() const {
  const Cone dual = cone_from_inequalities(dim_, rays_, lineality_);
  return {dual.rays(), dual.lineality()};
}

Cone Cone::intersection(const Cone& other) const {
  if (other.dim_ != dim_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  HRep a = h_representation();
  HRep b = other.h_representation();
  a.inequalities.insert(a.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
  a.equations.insert(a.equations.end(), b.equations.begin(), b.equations.end());
  return cone_from_inequalities(dim_, a.inequalities, a.equations);
}

std::vector<std::vector<std::size_t>> Cone::faces() const {
  const HRep h = h_representation();
  std::vector<std::size_t> all(rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> facets;
  for (const IntVector& a : h.inequalities) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (dot(a, rays_[i]) == 0) tight.push_back(i);
    facets.push_back(std::move(tight));
  }
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& facet : facets) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), facet.begin(), facet.end(),
                            std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(meet);
    }
  }
  std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

bool Cone::is_face_of(const Cone& other) const {
  if (!other.contains(*this)) return false;
  IntVector x(dim_, Integer(0));
  for (const IntVector& r : rays_)
    for (std::size_t i = 0; i < dim_; ++i) x[i] += r[i];
  const Cone sigma = other.reduced();
  const HRep h = sigma.h_representation();
  std::vector<const IntVector*> tight;
  for (const IntVector& a : h.inequalities)
    if (dot(a, x) == 0) tight.push_back(&a);
  // The smallest face of sigma through x must not exceed this cone.
  for (const IntVector& r : sigma.rays()) {
    bool on_face = std::all_of(tight.begin(), tight.end(),
                               [&](const IntVector* a) { return dot(*a, r) == 0; });
    if (on_face && !contains(r)) return false;
  }
  for (const IntVector& l : sigma.lineality())
    if (!contains(l)) return false;
  return true;
}

std::string Cone::to_string() const {
  std::string out = "cone(";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) out += ", ";
    out += c1cox::to_string(rays_[i]);
  }
  out += ")";
  if (!lineality_.empty()) {
    out += " + lin(";
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (i) out += ", ";
      out += c1cox::to_string(lineality_[i]);
    }
    out += ")";
  }
  return out;
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.rays_ == b.rays_ && a.lineality_ == b.lineality_) return true;
  return a.contains(b) && b.contains(a);
}

Cone cone_from_inequalities(std::size_t ambient_dim,
                            const std::vector<IntVector>& inequalities,
                            const std::vector<IntVector>& equations) {
  const std::vector<IntVector> ineqs = normalize_rays(inequalities, ambient_dim);
  std::vector<IntVector> eqs;
  for (const IntVector& e : equations)
    if (!is_zero(e)) eqs.push_back(e);

  std::vector<IntVector> all = ineqs;
  all.insert(all.end(), eqs.begin(), eqs.end());
  std::vector<IntVector> lineality =
      all.empty() ? IntMatrix::identity(ambient_dim).column_list()
                  : integer_kernel(IntMatrix::from_rows(all, ambient_dim));

  // Pointed part: intersect with the orthogonal complement of the lineality.
  std::vector<IntVector> fixed = eqs;
  fixed.insert(fixed.end(), lineality.begin(), lineality.end());
  const std::size_t fixed_rank = rank(fixed);
  if (fixed_rank + 1 > ambient_dim) return Cone(ambient_dim, {}, lineality);
  const std::size_t k = ambient_dim - 1 - fixed_rank;
  if (binomial(ineqs.size(), k) > kSubsetCap)
    throw Error(ErrorKind::UnsupportedDimension,
                "too many constraint subsets for exact ray enumeration");

  std::vector<IntVector> rays;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  auto visit = [&]() {
    std::vector<IntVector> rows = fixed;
    for (std::size_t i : pick) rows.push_back(ineqs[i]);
    if (rank(rows) != ambient_dim - 1) return;
    const auto kernel = integer_kernel(IntMatrix::from_rows(rows, ambient_dim));
    if (kernel.size() != 1) return;
    IntVector x = kernel.front();
    bool nonneg = true;
    bool nonpos = true;
    for (const IntVector& a : ineqs) {
      const Integer v = dot(a, x);
      if (v < 0) nonneg = false;
      if (v > 0) nonpos = false;
    }
    if (nonneg) {
      rays.push_back(x);
    } else if (nonpos) {
      for (Integer& e : x) e = -e;
      rays.push_back(x);
    }
  };
  if (k <= ineqs.size()) {
    while (true) {
      visit();
      // next k-subset in lexicographic order
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == ineqs.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return Cone(ambient_dim, std::move(rays), std::move(lineality));
}

bool generates_pointed_cone(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t dim = vectors.front().size();
  for (const IntVector& v : vectors)
    if (is_zero(v)) return false;
  // No nontrivial nonnegative combination sums to zero.
  FeasibilityProblem lp(dim + 1);
  for (const IntVector& v : vectors) {
    IntVector col = v;
    col.emplace_back(1);
    lp.add_nonnegative(col);
  }
  IntVector rhs(dim + 1, Integer(0));
  rhs[dim] = 1;
  lp.set_rhs(rhs);
  if (lp.feasible()) return false;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    FeasibilityProblem member(dim);
    for (std::size_t j = 0; j < vectors.size(); ++j)
      if (j != i) member.add_nonnegative(vectors[j]);
    member.set_rhs(vectors[i]);
    if (member.feasible()) return false;
  }
  return true;
}

}  // namespace c1cox
