#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "c1cox/lattice.hpp"

namespace c1cox {

/// Exact feasibility of { x >= 0 : A x = b } over the rationals, by a
/// phase-one simplex with Bland's rule. Returns a witness when feasible.
std::optional<std::vector<Rational>> find_nonnegative_solution(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

/// Builder for small feasibility questions of the form
///   sum_k column_k * x_k = rhs
/// where each x_k is nonnegative, free, or bounded below by one.
class FeasibilityProblem {
 public:
  explicit FeasibilityProblem(std::size_t equations);

  void add_nonnegative(std::span<const Integer> column);
  void add_free(std::span<const Integer> column);
  void add_at_least_one(std::span<const Integer> column);
  void set_rhs(std::span<const Integer> rhs);

  bool feasible() const;

 private:
  void push(std::span<const Integer> column, bool negate);

  std::size_t equations_;
  std::vector<std::vector<Rational>> columns_;
  std::vector<Rational> rhs_;
};

}  // namespace c1cox
