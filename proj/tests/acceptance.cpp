// Acceptance run: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "c1cox/catalog.hpp"
#include "c1cox/error.hpp"
#include "c1cox/fan.hpp"
#include "c1cox/ringdata.hpp"
#include "c1cox/surface.hpp"
#include "c1cox/trinomial.hpp"
#include "oracles.hpp"

using namespace c1cox;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::set<IntVector> column_set(const IntMatrix& m) {
  const auto cols = m.column_list();
  return {cols.begin(), cols.end()};
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (int q = 4; q <= 8; ++q) out.push_back(duval_catalog(DuValType::D, q));
  for (DuValType t : {DuValType::E6, DuValType::E7, DuValType::E8}) out.push_back(duval_catalog(t));
  return out;
}

bool all_minus_two(const Resolution& res) {
  for (const auto& [column, label] : exceptional_self_intersections(res))
    if (label != -2) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const CatalogEntry& e : catalog()) {
    const Resolution res = resolve(catalog_data(e));
    if (column_set(res.resolved_p) != column_set(e.P_tilde)) fail(o, e.name + ": columns differ");
    if (resolved_relation_string(res) != e.g_tilde)
      fail(o, e.name + ": relation " + resolved_relation_string(res));
  }
  const double t = seconds_since(start);
  if (t >= 1.0) fail(o, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "8 catalog entries, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t curves = 0;
  for (const CatalogEntry& e : catalog()) {
    const Resolution res = resolve(catalog_data(e));
    curves += res.exceptional.size();
    if (!all_minus_two(res)) fail(o, e.name + ": a curve is not -2");
  }
  std::string sweep;
  for (long c = -3; c <= 3; ++c) {
    const bool ok = all_minus_two(resolve(e6_family(c)));
    if (ok) sweep += (sweep.empty() ? "" : ",") + std::to_string(c);
    if (ok != (c == -1)) fail(o, "E6 family c = " + std::to_string(c));
  }
  if (o.pass)
    o.detail = std::to_string(curves) + " curves all -2; E6 family all -2 only at c = " + sweep;
  return o;
}

Outcome criterion3() {
  Outcome o;
  C1Data sl2;
  sl2.blocks = {{1, 1}, {1, 1}};
  sl2.A = {{Rational(0), Rational(1)}};
  sl2 = validate(sl2);
  const GradingMap q = grading(sl2, GradingLevel::K0);
  if (!(q.target() == FgAbelianGroup{2, {}})) fail(o, "K0 = " + q.target().to_string());
  const IntMatrix given_q{{1, -1, 0, 0}, {0, 0, 1, -1}};
  const IntMatrix p0 = build_p0(sl2);
  if (!(given_q * p0.transpose() == IntMatrix(2, 2))) fail(o, "Q P0^* != 0");
  if (!is_surjective(given_q)) fail(o, "Q not surjective");
  const IntMatrix& g = q.projection();
  if (!same_kernel(g, given_q) || !equal_up_to_basis_change(g, given_q))
    fail(o, "kernels differ");
  // independent: G = U Q with U the columns 1 and 3 of G, det U = +-1
  const std::vector<std::size_t> pick{0, 2};
  const IntMatrix u = g.select_columns(pick);
  const Integer det = oracle::leibniz_det(u);
  if (det != 1 && det != -1) fail(o, "U not unimodular");
  if (!(u * given_q == g)) fail(o, "G != U Q");
  if (o.pass) o.detail = "K0 = Z^2, projection = U Q with det U = " + det.get_str();
  return o;
}

// All size-1 blocks (l >= 2) and unordered size-2 blocks with entries <= 4.
std::vector<std::vector<Integer>> block_kinds() {
  std::vector<std::vector<Integer>> out;
  for (long l = 2; l <= 4; ++l) out.push_back({l});
  for (long a = 1; a <= 4; ++a)
    for (long b = a; b <= 4; ++b) out.push_back({a, b});
  return out;
}

void multisets(std::size_t kinds, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == size) {
    visit(cur);
    return;
  }
  for (std::size_t k = start; k < kinds; ++k) {
    cur.push_back(k);
    multisets(kinds, size, k, cur, visit);
    cur.pop_back();
  }
}

// Calls visit on every Type 1 / Type 2 datum of the sweep (A fixed, no d).
void factoriality_sweep(const std::function<void(const C1Data&)>& visit) {
  const auto kinds = block_kinds();
  for (DataType type : {DataType::Type1, DataType::Type2})
    for (std::size_t r = 2; r <= 3; ++r) {
      const std::size_t blocks = type == DataType::Type1 ? r : r + 1;
      std::vector<std::size_t> cur;
      multisets(kinds.size(), blocks, 0, cur, [&](const std::vector<std::size_t>& pick) {
        C1Data d;
        d.type = type;
        for (std::size_t k : pick) d.blocks.push_back(kinds[k]);
        if (type == DataType::Type1) {
          std::vector<Rational> a;
          for (std::size_t i = 0; i < r; ++i) a.push_back(Rational(static_cast<long>(i)));
          d.A = {a};
        } else {
          std::vector<Rational> row0, row1;
          for (std::size_t i = 0; i <= r; ++i) {
            row0.push_back(Rational(1));
            row1.push_back(Rational(static_cast<long>(i)));
          }
          d.A = {row0, row1};
        }
        visit(validate(d));
      });
    }
}

Outcome criterion4() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t cases = 0;
  factoriality_sweep([&](const C1Data& d) {
    const FactorialityCertificate cert = is_factorial(d);
    const bool minors = oracle::cokernel_torsion_free(build_p0(d).transpose());
    if (cert.torsion_free != minors) fail(o, describe(d) + ": SNF and minors disagree");
    if (cert.verdict != minors) fail(o, describe(d) + ": verdict disagrees");
    ++cases;
  });
  const double t = seconds_since(start);
  if (t >= 30.0) fail(o, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(cases) + " cases agree, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(505);
  std::size_t done = 0, s_pairs = 0;
  while (done < 200) {
    C1Data d = oracle::random_data(rng, DataType::Type1, 5, 3, 3, 0, 0);
    try {
      d = validate(d);
    } catch (const Error&) {
      continue;
    }
    try {
      s_pairs += groebner_certificate(d).s_pairs_checked;
    } catch (const Error& e) {
      fail(o, describe(d) + ": " + e.what());
    }
    // pairwise coprime leading monomials already force every S-polynomial to zero
    const auto g = groebner_basis_candidate(d);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b)
        if (!g[a].leading_monomial().coprime(g[b].leading_monomial()))
          fail(o, describe(d) + ": leading monomials share a variable");
    ++done;
  }
  const double t = seconds_since(start);
  if (t >= 30.0) fail(o, "took " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = "200 data, " + std::to_string(s_pairs) + " S-pairs reduced, " + std::to_string(t) +
               " s";
  return o;
}

// Exponent difference lies in the row lattice of m: adding it as a row keeps
// rank and the gcd of maximal minors.
bool in_row_lattice(const IntMatrix& m, const IntVector& x) {
  const auto before = oracle::invariant_factors_by_minors(m.transpose());
  const auto after =
      oracle::invariant_factors_by_minors(m.stacked(IntMatrix::from_rows({x})).transpose());
  if (before.size() != after.size()) return false;
  Integer a = 1, b = 1;
  for (const Integer& f : before) a *= f;
  for (const Integer& f : after) b *= f;
  return a == b;
}

IntVector exponent_difference(const Monomial& a, const Monomial& b, std::size_t n) {
  IntVector out(n, Integer(0));
  for (std::size_t v = 0; v < n; ++v)
    out[v] = Integer(static_cast<unsigned long>(a.exponent(v))) -
             Integer(static_cast<unsigned long>(b.exponent(v)));
  return out;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937 rng(606);
  std::size_t done = 0, with_d = 0;
  while (done < 500) {
    const DataType type = done % 2 ? DataType::Type2 : DataType::Type1;
    const std::size_t m = done % 3 == 0 ? 1 : 0;
    C1Data d = oracle::random_data(rng, type, 3, 2, 4, m, done % 4 == 0 ? 0 : 1);
    try {
      d = validate(d);
    } catch (const Error&) {
      continue;
    }
    const std::size_t n = d.num_columns();
    std::vector<std::pair<GradingMap, IntMatrix>> levels{
        {grading(d, GradingLevel::K0), build_p0(d)}};
    if (d.d) {
      levels.emplace_back(grading(d, GradingLevel::K), build_p(d));
      ++with_d;
    }
    for (const TrinomialRelation& rel : build_relations(d))
      for (const auto& [q, p] : levels) {
        if (!is_homogeneous(rel.poly, q)) fail(o, describe(d) + ": g" + std::to_string(rel.index));
        const Monomial& lead = rel.poly.leading_monomial();
        for (const auto& [mono, coeff] : rel.poly.terms())
          if (!in_row_lattice(p, exponent_difference(lead, mono, n)))
            fail(o, describe(d) + ": oracle finds g" + std::to_string(rel.index) +
                        " inhomogeneous");
      }
    ++done;
  }
  if (o.pass)
    o.detail = "500 data (" + std::to_string(with_d) + " with d), K0 and K homogeneous";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::vector<oracle::Point> prim;
  for (long long x = -12; x <= 12; ++x)
    for (long long y = -12; y <= 12; ++y)
      if ((x || y) && oracle::gcd_ll(x, y) == 1) prim.push_back({x, y});
  auto det = [](const IntVector& a, const IntVector& b) -> Integer {
    return a[0] * b[1] - a[1] * b[0];
  };
  std::size_t cones = 0;
  for (const auto& a : prim)
    for (const auto& b : prim) {
      if (a[0] * b[1] - a[1] * b[0] <= 0) continue;
      ++cones;
      const IntVector va = make_vector({static_cast<long>(a[0]), static_cast<long>(a[1])});
      const IntVector vb = make_vector({static_cast<long>(b[0]), static_cast<long>(b[1])});
      std::vector<IntVector> chain{va};
      for (IntVector& v : hirzebruch_jung_2d(va, vb)) chain.push_back(std::move(v));
      chain.push_back(vb);
      const auto hull = oracle::hj_boundary(a, b);
      bool same = hull.size() == chain.size();
      for (std::size_t i = 0; same && i < hull.size(); ++i)
        same = chain[i] ==
               make_vector({static_cast<long>(hull[i][0]), static_cast<long>(hull[i][1])});
      if (!same) fail(o, "cone " + to_string(va) + ", " + to_string(vb) + ": oracle differs");
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (det(chain[i], chain[i + 1]) != 1) fail(o, "cone " + to_string(va) + ": det != 1");
      for (std::size_t i = 1; i + 1 < chain.size(); ++i)
        if (Integer(abs(det(chain[i - 1], chain[i + 1]))) == 1)
          fail(o, "cone " + to_string(va) + ": removable ray " + to_string(chain[i]));
    }
  const double t = seconds_since(start);
  if (t >= 60.0) fail(o, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(cones) + " cones agree, " + std::to_string(t) + " s";
  return o;
}

// Disjoint union of paths: no vertex of degree > 2 and no cycle.
bool is_union_of_paths(const ResolutionGraph& g) {
  std::vector<std::size_t> degree(g.nodes.size(), 0);
  for (const auto& [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (std::size_t x : degree)
    if (x > 2) return false;
  std::vector<std::size_t> parent(g.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const auto& [a, b] : g.edges) {
    const std::size_t ra = root(a), rb = root(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(808);
  std::map<SurfaceKind, std::size_t> kinds;
  std::size_t done = 0, tries = 0;
  while (done < 100 && tries < 200000) {
    ++tries;
    const bool parabolic = tries % 2;
    C1Data d = oracle::random_data(rng, DataType::Type1, 4, parabolic ? 1 : 2, 4,
                                   parabolic ? 1 : 0, 1);
    Resolution res;
    SurfaceKind kind;
    try {
      d = validate(d);
      kind = classify_case(d);
      res = resolve(d);
    } catch (const Error&) {
      continue;
    }
    if (res.exceptional.empty() || !all_minus_two(res)) continue;
    const ResolutionGraph g = resolution_graph(res);
    if (!is_union_of_paths(g)) fail(o, describe(d) + ": not a chain");
    for (const std::string& type : g.component_types)
      if (type.empty() || type[0] != 'A') fail(o, describe(d) + ": component " + type);
    ++kinds[kind];
    ++done;
  }
  if (done < 100) fail(o, "only " + std::to_string(done) + " samples found");
  if (o.pass)
    o.detail = std::to_string(kinds[SurfaceKind::Parabolic]) + " parabolic, " +
               std::to_string(kinds[SurfaceKind::Hyperbolic]) + " hyperbolic, all type A";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t valid = 0, skipped = 0;
  factoriality_sweep([&](const C1Data& base) {
    C1Data d = base;
    IntMatrix row(1, d.num_columns());
    for (std::size_t j = 0; j < row.cols(); ++j) row(0, j) = 1 + 12 * static_cast<long>(j);
    d.d = row;
    try {
      d = validate(d);
    } catch (const Error&) {
      ++skipped;
      return;
    }
    ++valid;
    if (!is_almost_free(d)) fail(o, describe(d) + ": not almost free");
  });
  if (o.pass)
    o.detail = std::to_string(valid) + " data almost free (" + std::to_string(skipped) +
               " without room for d skipped)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,
                                                       criterion4, criterion5, criterion6,
                                                       criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
