#include "c1cox/ringdata.hpp"

#include <numeric>
#include <set>

#include "c1cox/error.hpp"

namespace c1cox {

std::size_t C1Data::r() const {
  if (blocks.empty()) return 0;
  return type == DataType::Type1 ? blocks.size() : blocks.size() - 1;
}

std::size_t C1Data::n() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  return total;
}

std::size_t C1Data::block_position(int label) const {
  const int pos = label - iota();
  if (pos < 0 || static_cast<std::size_t>(pos) >= blocks.size())
    throw Error(ErrorKind::InvalidArgument, "no block " + std::to_string(label));
  return static_cast<std::size_t>(pos);
}

std::size_t C1Data::column_index(std::size_t position, std::size_t j) const {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < position; ++k) offset += blocks[k].size();
  return offset + j;
}

std::optional<std::size_t> C1Data::block_of_column(std::size_t column) const {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (column < offset + blocks[k].size()) return k;
    offset += blocks[k].size();
  }
  return std::nullopt;
}

namespace {

std::string column_name(std::size_t j) { return "column " + std::to_string(j + 1); }

void check_a(const C1Data& data) {
  const std::size_t r = data.r();
  if (data.type == DataType::Type1) {
    if (data.A.size() != 1 || data.A[0].size() != r)
      throw Error(ErrorKind::MalformedData,
                  "Type 1 needs A = (a_1, ..., a_r) with r = " + std::to_string(r));
    const auto& a = data.A[0];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (a[i] == a[j])
          throw Error(ErrorKind::DuplicateAValues,
                      "a_" + std::to_string(i + 1) + " = a_" + std::to_string(j + 1) +
                          " = " + a[i].get_str() + "; entries of A must be pairwise different");
    return;
  }
  if (data.A.size() != 2 || data.A[0].size() != r + 1 || data.A[1].size() != r + 1)
    throw Error(ErrorKind::MalformedData,
                "Type 2 needs a 2 x (r+1) matrix A with r = " + std::to_string(r));
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j) {
      const Rational minor = data.A[0][i] * data.A[1][j] - data.A[0][j] * data.A[1][i];
      if (minor == 0)
        throw Error(ErrorKind::DependentAColumns,
                    "columns a_" + std::to_string(i) + " and a_" + std::to_string(j) +
                        " of A are linearly dependent");
    }
}

void check_stack(const C1Data& data) {
  const IntMatrix& d = *data.d;
  const std::size_t columns = data.num_columns();
  if (d.cols() != columns)
    throw Error(ErrorKind::MalformedData,
                "d must have n + m = " + std::to_string(columns) + " columns");
  const std::size_t s = d.rows();
  if (s < 1 || s + data.r() > columns)
    throw Error(ErrorKind::BadSRange,
                "d has s = " + std::to_string(s) + " rows; need 1 <= s <= n + m - r = " +
                    std::to_string(columns - data.r()));
  const IntMatrix p = build_p(data);
  const auto cols = p.column_list();
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (content(cols[j]) != 1)
      throw Error(ErrorKind::NonprimitiveColumn,
                  column_name(j) + " of P " + to_string(cols[j]) +
                      " is not primitive; columns of the stack matrix must be primitive");
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[i] == cols[j])
        throw Error(ErrorKind::DuplicateColumn,
                    column_name(i) + " and " + column_name(j) + " of P coincide " +
                        to_string(cols[i]) + "; columns must be pairwise different");
  if (rank(p) != p.rows())
    throw Error(ErrorKind::RankDeficientP,
                "columns of P span a space of dimension " + std::to_string(rank(p)) +
                    " < r + s = " + std::to_string(p.rows()));
}

}  // namespace

C1Data validate(C1Data data) {
  const std::size_t min_blocks = data.type == DataType::Type1 ? 1 : 2;
  if (data.blocks.size() < min_blocks)
    throw Error(ErrorKind::MalformedData,
                "need r > 0, i.e. at least " + std::to_string(min_blocks) + " block(s)");
  for (std::size_t k = 0; k < data.blocks.size(); ++k) {
    if (data.blocks[k].empty())
      throw Error(ErrorKind::MalformedData,
                  "block " + std::to_string(data.block_label(k)) + " is empty");
    for (std::size_t j = 0; j < data.blocks[k].size(); ++j)
      if (data.blocks[k][j] <= 0)
        throw Error(ErrorKind::NonpositiveExponent,
                    "l_" + std::to_string(data.block_label(k)) + std::to_string(j + 1) +
                        " = " + data.blocks[k][j].get_str() + " must be positive");
  }
  check_a(data);
  if (data.d) check_stack(data);
  return data;
}

IntMatrix build_p0(const C1Data& data) {
  const std::size_t r = data.r();
  IntMatrix p0(r, data.num_columns());
  if (data.type == DataType::Type1) {
    for (std::size_t k = 0; k < data.blocks.size(); ++k)
      for (std::size_t j = 0; j < data.blocks[k].size(); ++j)
        p0(k, data.column_index(k, j)) = data.blocks[k][j];
    return p0;
  }
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t j = 0; j < data.blocks[0].size(); ++j)
      p0(row, j) = -data.blocks[0][j];
    const std::size_t k = row + 1;
    for (std::size_t j = 0; j < data.blocks[k].size(); ++j)
      p0(row, data.column_index(k, j)) = data.blocks[k][j];
  }
  return p0;
}

IntMatrix build_p(const C1Data& data) {
  if (!data.d) throw Error(ErrorKind::MissingD, "the stack matrix P needs d");
  return build_p0(data).stacked(*data.d);
}

GradingMap grading(const C1Data& data, GradingLevel level) {
  if (level == GradingLevel::K) {
    if (!data.d) throw Error(ErrorKind::MissingD, "the K-grading needs d");
    return cokernel(build_p(data).transpose());
  }
  return cokernel(build_p0(data).transpose());
}

FactorialityCertificate is_factorial(const C1Data& data) {
  FactorialityCertificate cert;
  for (const auto& block : data.blocks) cert.per_block_gcds.push_back(content(block));
  cert.torsion_free = grading(data, GradingLevel::K0).target().is_torsion_free();

  if (data.r() < 2)
    throw Error(ErrorKind::HypothesisViolated,
                "criterion needs r >= 2, have r = " + std::to_string(data.r()));
  for (std::size_t k = 0; k < data.blocks.size(); ++k)
    for (std::size_t j = 0; j < data.blocks[k].size(); ++j)
      if (data.blocks[k].size() == 1 && data.blocks[k][j] == 1)
        throw Error(ErrorKind::HypothesisViolated,
                    "n_" + std::to_string(data.block_label(k)) + " * l_" +
                        std::to_string(data.block_label(k)) + std::to_string(j + 1) +
                        " = 1; the variable occurs linearly and the criterion does not apply");

  cert.verdict = true;
  cert.reason = data.type == DataType::Type1 ? "all block gcds equal 1"
                                              : "block gcds are pairwise coprime";
  if (data.type == DataType::Type1) {
    for (std::size_t k = 0; k < cert.per_block_gcds.size(); ++k)
      if (cert.per_block_gcds[k] != 1) {
        cert.verdict = false;
        cert.reason = "block " + std::to_string(data.block_label(k)) + " has gcd " +
                      cert.per_block_gcds[k].get_str();
        break;
      }
    return cert;
  }
  for (std::size_t a = 0; a < cert.per_block_gcds.size() && cert.verdict; ++a)
    for (std::size_t b = a + 1; b < cert.per_block_gcds.size(); ++b) {
      const Integer g = gcd(cert.per_block_gcds[a], cert.per_block_gcds[b]);
      if (g != 1) {
        cert.verdict = false;
        cert.reason = "block gcds l_" + std::to_string(data.block_label(a)) + " = " +
                      cert.per_block_gcds[a].get_str() + " and l_" +
                      std::to_string(data.block_label(b)) + " = " +
                      cert.per_block_gcds[b].get_str() + " share the factor " + g.get_str();
        break;
      }
    }
  return cert;
}

bool variable_is_prime(const C1Data& data, int label, std::size_t j) {
  if (data.type != DataType::Type1)
    throw Error(ErrorKind::Type2Unsupported,
                "the gcd primality criterion is stated for Type 1 data");
  const std::size_t pos = data.block_position(label);
  if (j < 1 || j > data.blocks[pos].size())
    throw Error(ErrorKind::InvalidArgument,
                "block " + std::to_string(label) + " has no variable " + std::to_string(j));
  for (std::size_t k = 0; k < data.blocks.size(); ++k)
    if (k != pos && content(data.blocks[k]) != 1) return false;
  return true;
}

bool is_almost_free(const IntMatrix& p) {
  const IntMatrix pt = p.transpose();
  const std::size_t columns = p.cols();
  for (std::size_t c = 0; c < columns; ++c) {
    IntMatrix others(columns, columns - 1);
    for (std::size_t j = 0, k = 0; j < columns; ++j) {
      if (j == c) continue;
      others(j, k++) = 1;
    }
    if (!is_surjective(pt.joined(others))) return false;
  }
  return true;
}

bool is_almost_free(const C1Data& data) { return is_almost_free(build_p(data)); }

std::size_t dimension(const C1Data& data) { return data.n() + data.m - data.r() + 1; }

std::string describe(const C1Data& data) {
  std::string out = data.type == DataType::Type1 ? "Type 1" : "Type 2";
  out += ", r=" + std::to_string(data.r());
  out += ", n=(";
  for (std::size_t k = 0; k < data.blocks.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(data.blocks[k].size());
  }
  out += "), m=" + std::to_string(data.m);
  if (data.d) out += ", s=" + std::to_string(data.s());
  return out;
}

}  // namespace c1cox
