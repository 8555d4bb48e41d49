#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "c1cox/lattice.hpp"

namespace c1cox {

/// Power product; variable 0 is the largest in the lexicographic order.
class Monomial {
 public:
  using Power = std::pair<std::size_t, std::uint64_t>;

  Monomial() = default;
  static Monomial variable(std::size_t var, std::uint64_t exponent = 1);

  std::uint64_t exponent(std::size_t var) const;
  const std::vector<Power>& powers() const noexcept { return powers_; }
  bool is_one() const noexcept { return powers_.empty(); }
  std::uint64_t total_degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in the sense other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Power> powers_;  // sorted by variable, exponents > 0
};

/// -1, 0, +1 as a is lex-smaller, equal, lex-larger than b.
int lex_compare(const Monomial& a, const Monomial& b);

struct LexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) > 0;
  }
};

class VariableNames;

/// Sparse polynomial with rational coefficients; terms iterate from the
/// lex-leading term downwards.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational, LexDescending>;

  SparsePoly() = default;
  static SparsePoly constant(const Rational& c);
  static SparsePoly term(const Rational& c, const Monomial& m);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  void add_term(const Rational& c, const Monomial& m);

  SparsePoly operator+(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& other) const;
  SparsePoly scaled(const Rational& c, const Monomial& m = {}) const;

  std::string to_string(const VariableNames& names) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Terms terms_;
};

/// Display names for the variables of a polynomial ring.
class VariableNames {
 public:
  explicit VariableNames(std::vector<std::string> names);
  const std::string& operator[](std::size_t var) const;
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g);

/// Remainder of multivariate division by `divisors` in lex order. At each
/// step the leading term is divided by the first divisor whose leading
/// monomial divides it.
SparsePoly reduce(const SparsePoly& f, const std::vector<SparsePoly>& divisors);

}  // namespace c1cox
