#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "c1cox/lattice.hpp"

namespace c1cox {

enum class DataType { Type1, Type2 };

/// Defining data of a trinomial algebra R(A, P0), optionally downgraded by an
/// s x (n+m) matrix d to R(A, P).
///
/// Blocks are stored in order; block position k carries the label k + iota,
/// so Type 1 blocks are labelled 1..r and Type 2 blocks 0..r. Variables are
/// indexed block by block (T_{iota 1}, ..., T_{r n_r}) followed by S_1..S_m;
/// this is also the column order of P0 and P.
struct C1Data {
  DataType type = DataType::Type1;
  std::vector<std::vector<Integer>> blocks;
  std::size_t m = 0;
  /// Type 1: a single row (a_1, ..., a_r). Type 2: two rows, the columns
  /// a_0, ..., a_r.
  std::vector<std::vector<Rational>> A;
  std::optional<IntMatrix> d;

  int iota() const { return type == DataType::Type1 ? 1 : 0; }
  /// r: number of blocks minus (1 - iota).
  std::size_t r() const;
  std::size_t n() const;
  std::size_t s() const { return d ? d->rows() : 0; }
  std::size_t num_columns() const { return n() + m; }
  std::size_t block_count() const { return blocks.size(); }
  int block_label(std::size_t position) const {
    return static_cast<int>(position) + iota();
  }
  /// Position of the block with the given label.
  std::size_t block_position(int label) const;
  std::size_t column_index(std::size_t position, std::size_t j) const;
  std::size_t s_column_index(std::size_t k) const { return n() + k; }
  /// Block position of a T-column, or nullopt for an S-column.
  std::optional<std::size_t> block_of_column(std::size_t column) const;

  friend bool operator==(const C1Data&, const C1Data&) = default;
};

/// Checks every requirement on the data; returns the data unchanged or throws
/// Error with the kind naming the violated requirement.
C1Data validate(C1Data data);

/// r x (n+m) exponent matrix.
IntMatrix build_p0(const C1Data& data);
/// (r+s) x (n+m) stack matrix [P0; d]. Throws MissingD without d.
IntMatrix build_p(const C1Data& data);

enum class GradingLevel { K0, K };

/// Cokernel of P0^* (level K0) or P^* (level K) with the degrees of all
/// variables.
GradingMap grading(const C1Data& data, GradingLevel level);

struct FactorialityCertificate {
  bool verdict = false;
  std::vector<Integer> per_block_gcds;
  bool torsion_free = false;
  std::string reason;
};

/// Gcd criterion for factoriality, with torsion-freeness of K0 computed
/// independently. Throws HypothesisViolated when r < 2 or some
/// n_i * l_ij = 1; in that case the criterion does not apply.
FactorialityCertificate is_factorial(const C1Data& data);

/// Primality of the variable T_{label, j} (j is 1-based); Type 1 only.
bool variable_is_prime(const C1Data& data, int label, std::size_t j);

/// Removing any single column still leaves degrees generating K, i.e.
/// e_c lies in span(e_j, j != c) + im(P^*) for every column c.
bool is_almost_free(const IntMatrix& p);
bool is_almost_free(const C1Data& data);

/// Krull dimension n + m - r + 1.
std::size_t dimension(const C1Data& data);

std::string describe(const C1Data& data);

}  // namespace c1cox
