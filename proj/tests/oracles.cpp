#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using c1cox::Rational;

Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer previous = 1;
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    Integer g = 0;
    for (const auto& rows : k_subsets(m.rows(), k))
      for (const auto& cols : k_subsets(m.cols(), k)) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        g = gcd(g, leibniz_det(minor));
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

bool cokernel_torsion_free(const IntMatrix& m) {
  for (const Integer& d : invariant_factors_by_minors(m))
    if (d != 1) return false;
  return true;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

namespace {

long long det(const Point& p, const Point& q) { return p[0] * q[1] - p[1] * q[0]; }

}  // namespace

std::vector<Point> hj_boundary(Point a, Point b) {
  if (det(a, b) < 0) {
    std::vector<Point> out = hj_boundary(b, a);
    std::reverse(out.begin(), out.end());
    return out;
  }
  const long long n = det(a, b);
  const long long lo0 = std::min({0LL, a[0], b[0], a[0] + b[0]});
  const long long hi0 = std::max({0LL, a[0], b[0], a[0] + b[0]});
  const long long lo1 = std::min({0LL, a[1], b[1], a[1] + b[1]});
  const long long hi1 = std::max({0LL, a[1], b[1], a[1] + b[1]});
  std::vector<Point> pts;
  for (long long x = lo0; x <= hi0; ++x)
    for (long long y = lo1; y <= hi1; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::gcd(x, y) != 1) continue;
      const Point p{x, y};
      const long long s = det(p, b);
      const long long t = det(a, p);
      if (s < 0 || s > n || t < 0 || t > n) continue;
      pts.push_back(p);
    }
  std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return det(p, q) > 0; });
  std::vector<Point> hull;
  for (const Point& x : pts) {
    while (hull.size() >= 2) {
      const Point& p = hull[hull.size() - 2];
      const Point& q = hull.back();
      const Point u{q[0] - p[0], q[1] - p[1]};
      const Point v{x[0] - q[0], x[1] - q[1]};
      if (det(u, v) > 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(x);
  }
  return hull;
}

c1cox::C1Data random_data(std::mt19937& rng, c1cox::DataType type, std::size_t max_r,
                          std::size_t max_block, long max_l, std::size_t m, std::size_t s) {
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  c1cox::C1Data data;
  data.type = type;
  const std::size_t r = static_cast<std::size_t>(uniform(2, static_cast<long>(max_r)));
  const std::size_t blocks = type == c1cox::DataType::Type1 ? r : r + 1;
  for (std::size_t k = 0; k < blocks; ++k) {
    std::vector<Integer> block;
    const long size = uniform(1, static_cast<long>(max_block));
    for (long j = 0; j < size; ++j) block.push_back(uniform(1, max_l));
    data.blocks.push_back(std::move(block));
  }
  data.m = m;
  // distinct values, respectively pairwise independent columns (1, t_i) scaled
  std::vector<long> pool;
  for (long v = -6; v <= 6; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (type == c1cox::DataType::Type1) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < r; ++i) a.push_back(Rational(pool[i], uniform(1, 3)));
    // distinct numerators over possibly different denominators may collide
    for (std::size_t i = 0; i < r; ++i) a[i].canonicalize();
    data.A = {a};
  } else {
    std::vector<Rational> row0, row1;
    for (std::size_t i = 0; i <= r; ++i) {
      const Rational scale(uniform(1, 3) * (uniform(0, 1) ? 1 : -1), uniform(1, 2));
      row0.push_back(scale);
      row1.push_back(scale * pool[i]);
    }
    data.A = {row0, row1};
  }
  if (s > 0) {
    // exponent (or 0 for an S-column) sitting above each column of d
    std::vector<long> top;
    for (const auto& block : data.blocks)
      for (const Integer& l : block) top.push_back(l.get_si());
    top.resize(data.n() + m, 0);
    IntMatrix d(s, data.n() + m);
    for (std::size_t j = 0; j < d.cols(); ++j) {
      // a few redraws to make the column primitive; give up silently otherwise
      for (int attempt = 0; attempt < 8; ++attempt) {
        long g = top[j];
        for (std::size_t i = 0; i < s; ++i) {
          d(i, j) = uniform(-4, 4);
          g = std::gcd(g, d(i, j).get_si());
        }
        if (g == 1) break;
      }
    }
    data.d = d;
  }
  return data;
}

}  // namespace oracle
