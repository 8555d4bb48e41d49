#include "c1cox/linear_program.hpp"

#include "c1cox/error.hpp"

namespace c1cox {

std::optional<std::vector<Rational>> find_nonnegative_solution(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a.front().size() : 0;
  if (m == 0) return std::vector<Rational>(n, Rational(0));

  // Tableau columns: n structural, m artificial, 1 right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? -b[i] : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective sum(artificials).
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one

    const Rational inv = 1 / t[leave][enter];
    for (Rational& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[n + m] != 0) return std::nullopt;  // objective value is -cost
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][n + m];
  return x;
}

FeasibilityProblem::FeasibilityProblem(std::size_t equations)
    : equations_(equations), rhs_(equations, Rational(0)) {}

void FeasibilityProblem::push(std::span<const Integer> column, bool negate) {
  if (column.size() != equations_)
    throw Error(ErrorKind::InvalidArgument, "feasibility column has wrong length");
  std::vector<Rational> c(equations_);
  for (std::size_t i = 0; i < equations_; ++i)
    c[i] = negate ? Rational(-column[i]) : Rational(column[i]);
  columns_.push_back(std::move(c));
}

void FeasibilityProblem::add_nonnegative(std::span<const Integer> column) {
  push(column, false);
}

void FeasibilityProblem::add_free(std::span<const Integer> column) {
  push(column, false);
  push(column, true);
}

void FeasibilityProblem::add_at_least_one(std::span<const Integer> column) {
  // x = 1 + y with y >= 0 moves one copy of the column to the right side.
  push(column, false);
  for (std::size_t i = 0; i < equations_; ++i) rhs_[i] -= column[i];
}

void FeasibilityProblem::set_rhs(std::span<const Integer> rhs) {
  if (rhs.size() != equations_)
    throw Error(ErrorKind::InvalidArgument, "feasibility rhs has wrong length");
  // Keep contributions already moved over by add_at_least_one.
  for (std::size_t i = 0; i < equations_; ++i) rhs_[i] += rhs[i];
}

bool FeasibilityProblem::feasible() const {
  std::vector<std::vector<Rational>> a(equations_,
                                       std::vector<Rational>(columns_.size()));
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (std::size_t i = 0; i < equations_; ++i) a[i][j] = columns_[j][i];
  return find_nonnegative_solution(a, rhs_).has_value();
}

}  // namespace c1cox
