#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace c1cox {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> entries);
std::string to_string(std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t rows = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> column_list() const;
  IntMatrix transpose() const;
  /// Rows of `this` followed by rows of `below`.
  IntMatrix stacked(const IntMatrix& below) const;
  /// Columns of `this` followed by columns of `right`.
  IntMatrix joined(const IntMatrix& right) const;
  IntMatrix select_columns(std::span<const std::size_t> indices) const;

  IntVector operator*(std::span<const Integer> v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  /// col[target] += factor * col[source]
  void add_column_multiple(std::size_t target, std::size_t source,
                           const Integer& factor);
  void negate_row(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... ,
/// nonzero diagonal entries first and positive.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + sum Z/d_i with
/// 1 < d_1 | d_2 | ... ; structural equality is group isomorphism.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_torsion_free() const { return invariant_factors.empty(); }
  std::string to_string() const;
  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

/// The projection Z^n -> Z^n / im(M) in Smith coordinates. Each degree is a
/// vector (free coordinates..., torsion residues...), torsion residues taken
/// in [0, d_i).
class GradingMap {
 public:
  GradingMap(FgAbelianGroup target, IntMatrix projection);

  const FgAbelianGroup& target() const noexcept { return target_; }
  /// (free_rank + #torsion) x n, torsion rows already reduced.
  const IntMatrix& projection() const noexcept { return projection_; }
  std::size_t source_rank() const noexcept { return projection_.cols(); }

  IntVector degree_of_column(std::size_t j) const;
  /// Degree of an arbitrary element of the source lattice.
  IntVector degree(std::span<const Integer> element) const;
  /// Reduces torsion coordinates into canonical range.
  IntVector normalize(IntVector degree) const;
  /// Free coordinates only; the image in K tensor Q.
  IntVector free_part(std::span<const Integer> degree) const;

 private:
  FgAbelianGroup target_;
  IntMatrix projection_;
};

/// Z^rows / (column span of m), together with the projection.
GradingMap cokernel(const IntMatrix& m);

/// Divides out the gcd of the entries. Rejects the zero vector.
IntVector primitive(std::span<const Integer> v);
Integer content(std::span<const Integer> v);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<IntVector>& vectors);

/// Lattice basis of {x in Z^cols : m x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Lattice basis of span_Q(vs) intersected with Z^d. Rejects dependent input.
std::vector<IntVector> saturation_basis(const std::vector<IntVector>& vs);

/// Integer coordinates of v in the given lattice basis; throws when v is not
/// in the lattice generated by the basis.
IntVector lattice_coordinates(std::span<const Integer> v,
                              const std::vector<IntVector>& basis);

/// True when both maps have the same kernel in Z^n.
bool same_kernel(const IntMatrix& a, const IntMatrix& b);
/// True when the integer matrix maps Z^cols onto Z^rows.
bool is_surjective(const IntMatrix& m);
/// Same kernel and both onto free targets: the maps differ by an
/// automorphism of the target.
bool equal_up_to_basis_change(const IntMatrix& a, const IntMatrix& b);

}  // namespace c1cox
