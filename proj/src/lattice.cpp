#include "c1cox/lattice.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "c1cox/error.hpp"

namespace c1cox {

IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

std::string to_string(std::span<const Integer> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long e : r) data_.emplace_back(e);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorKind::InvalidArgument, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns,
                                  std::size_t rows) {
  if (!columns.empty()) rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw Error(ErrorKind::InvalidArgument, "ragged column list");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::column_list() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_)
    throw Error(ErrorKind::InvalidArgument, "stacking matrices of different width");
  IntMatrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
  return m;
}

IntMatrix IntMatrix::joined(const IntMatrix& right) const {
  if (cols_ == 0) return right;
  if (right.cols_ == 0) return *this;
  if (right.rows_ != rows_)
    throw Error(ErrorKind::InvalidArgument, "joining matrices of different height");
  IntMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, indices[k]);
  return m;
}

IntVector IntMatrix::operator*(std::span<const Integer> v) const {
  if (v.size() != cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix-vector size mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::InvalidArgument, "matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source,
                                    const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  return os << m.to_string();
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  while (r < D.rows() && r < D.cols() && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Position of a nonzero entry of least absolute value in D[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(
    const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = f.D;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      auto pivot = smallest_pivot(d, t);
      if (!pivot) return f;
      d.swap_rows(t, pivot->first);
      f.U.swap_rows(t, pivot->first);
      d.swap_columns(t, pivot->second);
      f.V.swap_columns(t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_column_multiple(j, t, -q);
        f.V.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool fixed = true;
      for (std::size_t i = t + 1; i < d.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            f.U.add_row_multiple(t, i, 1);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Groups and gradings

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const Integer& d : invariant_factors) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

GradingMap::GradingMap(FgAbelianGroup target, IntMatrix projection)
    : target_(std::move(target)), projection_(std::move(projection)) {}

IntVector GradingMap::degree_of_column(std::size_t j) const {
  return projection_.column(j);
}

IntVector GradingMap::degree(std::span<const Integer> element) const {
  return normalize(projection_ * element);
}

IntVector GradingMap::normalize(IntVector degree) const {
  const std::size_t f = target_.free_rank;
  for (std::size_t k = 0; k < target_.invariant_factors.size(); ++k) {
    Integer& x = degree[f + k];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(),
               target_.invariant_factors[k].get_mpz_t());
  }
  return degree;
}

IntVector GradingMap::free_part(std::span<const Integer> degree) const {
  return IntVector(degree.begin(), degree.begin() + target_.free_rank);
}

GradingMap cokernel(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  const std::size_t r = f.rank();
  FgAbelianGroup group;
  group.free_rank = m.rows() - r;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < r; ++i)
    if (f.D(i, i) != 1) {
      group.invariant_factors.push_back(f.D(i, i));
      torsion_rows.push_back(i);
    }
  IntMatrix projection(group.free_rank + torsion_rows.size(), m.rows());
  for (std::size_t k = 0; k < group.free_rank; ++k)
    for (std::size_t j = 0; j < m.rows(); ++j) projection(k, j) = f.U(r + k, j);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      Integer x = f.U(torsion_rows[k], j);
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(),
                 group.invariant_factors[k].get_mpz_t());
      projection(group.free_rank + k, j) = x;
    }
  return GradingMap(std::move(group), std::move(projection));
}

// ---------------------------------------------------------------------------
// Vectors and lattices

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  const Integer g = content(v);
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "primitive of the zero vector");
  IntVector out(v.begin(), v.end());
  if (g != 1)
    for (Integer& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (Rational& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  RationalMatrix a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return row_reduce(a, m.cols()).size();
}

std::size_t rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors));
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  if (m.rows() == 0) {
    std::vector<IntVector> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) basis.push_back(IntMatrix::identity(m.cols()).column(j));
    return basis;
  }
  const SmithForm f = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t j = f.rank(); j < m.cols(); ++j) basis.push_back(f.V.column(j));
  return basis;
}

std::vector<IntVector> saturation_basis(const std::vector<IntVector>& vs) {
  if (vs.empty()) return {};
  const std::size_t d = vs.front().size();
  if (rank(vs) != vs.size())
    throw Error(ErrorKind::InvalidArgument,
                "saturation_basis needs linearly independent vectors");
  // span_Q(vs) is the orthogonal complement of ker(vs); its lattice points
  // are the integer kernel of a basis of that complement.
  const std::vector<IntVector> normals = integer_kernel(IntMatrix::from_rows(vs));
  if (normals.empty()) return IntMatrix::identity(d).column_list();
  return integer_kernel(IntMatrix::from_rows(normals));
}

IntVector lattice_coordinates(std::span<const Integer> v,
                              const std::vector<IntVector>& basis) {
  const std::size_t d = v.size();
  const std::size_t k = basis.size();
  RationalMatrix a(d, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  const auto pivots = row_reduce(a, k + 1);
  if (!pivots.empty() && pivots.back() == k)
    throw Error(ErrorKind::InvalidArgument, to_string(v) + " is not in the span");
  if (pivots.size() != k)
    throw Error(ErrorKind::InvalidArgument, "lattice basis is dependent");
  IntVector coords(k);
  for (std::size_t r = 0; r < k; ++r) {
    const Rational& x = a[r][k];
    if (x.get_den() != 1)
      throw Error(ErrorKind::InvalidArgument,
                  to_string(v) + " is not in the lattice");
    coords[pivots[r]] = x.get_num();
  }
  return coords;
}

bool same_kernel(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  for (const IntVector& x : integer_kernel(a))
    if (!is_zero(b * x)) return false;
  for (const IntVector& x : integer_kernel(b))
    if (!is_zero(a * x)) return false;
  return true;
}

bool is_surjective(const IntMatrix& m) {
  if (m.rows() == 0) return true;
  const SmithForm f = smith_normal_form(m);
  if (f.rank() != m.rows()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (f.D(i, i) != 1) return false;
  return true;
}

bool equal_up_to_basis_change(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && same_kernel(a, b) && is_surjective(a) &&
         is_surjective(b);
}

}  // namespace c1cox
