#include "c1cox/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "c1cox/error.hpp"

namespace c1cox {

std::string to_string(DuValType type) {
  switch (type) {
    case DuValType::D: return "D";
    case DuValType::E6: return "E6";
    case DuValType::E7: return "E7";
    case DuValType::E8: return "E8";
  }
  return "?";
}

DuValType parse_duval_type(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (t == "D") return DuValType::D;
  if (t == "E6") return DuValType::E6;
  if (t == "E7") return DuValType::E7;
  if (t == "E8") return DuValType::E8;
  throw Error(ErrorKind::InvalidArgument, "unknown du Val type '" + text + "' (D, E6, E7, E8)");
}

namespace {

std::string power(const std::string& var, long e) {
  return e == 1 ? var : var + "^" + std::to_string(e);
}

std::string indexed(long i, long j) {
  if (i < 10 && j < 10) return "T" + std::to_string(i) + std::to_string(j);
  return "T" + std::to_string(i) + "_" + std::to_string(j);
}

// T_i1^l T_i2^(l-1) ... T_il for each arm, joined by " + ".
std::string chain_relation(const std::vector<long>& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += " + ";
    for (long j = 1; j <= ls[i]; ++j) {
      if (j > 1) out += " ";
      out += power(indexed(static_cast<long>(i) + 1, j), ls[i] - j + 1);
    }
  }
  return out;
}

std::string plain_relation(const std::vector<long>& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += " + ";
    out += power("T" + std::to_string(i + 1), ls[i]);
  }
  return out;
}

IntMatrix from_long_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

CatalogEntry duval_catalog(DuValType type, int q) {
  CatalogEntry e;
  e.A = {{Rational(0), Rational(-1), Rational(1)}, {Rational(1), Rational(-1), Rational(0)}};
  std::vector<long> ls;
  switch (type) {
    case DuValType::D: {
      if (q < 4) throw Error(ErrorKind::BadQ, "D_q needs q >= 4, got " + std::to_string(q));
      const long k = q - 2;
      e.name = "D" + std::to_string(q);
      e.equation = "T1^2 + T2 T3^2 + " + power("T2", q - 1);
      e.P = from_long_rows({{-2, k, 0}, {-2, 0, 2}, {-1, 1, 1}});
      std::vector<std::vector<long>> rows{{-2, -1}, {-2, -1}, {-1, 0}};
      for (long x = k; x >= 1; --x) {
        rows[0].push_back(x);
        rows[1].push_back(0);
        rows[2].push_back(1);
      }
      for (long x : {2L, 1L, 0L}) {
        rows[0].push_back(0);
        rows[1].push_back(x);
        rows[2].push_back(1);
      }
      e.P_tilde = from_long_rows(rows);
      ls = {2, k, 2};
      break;
    }
    case DuValType::E6:
      e.name = "E6";
      e.equation = "T1^2 + T2^3 + T3^4";
      e.P = IntMatrix{{-3, 3, 0}, {-3, 0, 2}, {-2, 1, 1}};
      e.P_tilde = IntMatrix{{-3, -2, -1, 3, 2, 1, 0, 0, 0},
                            {-3, -2, -1, 0, 0, 0, 2, 1, 0},
                            {-2, -1, 0, 1, 1, 1, 1, 1, 1}};
      ls = {3, 3, 2};
      break;
    case DuValType::E7:
      e.name = "E7";
      e.equation = "T1^2 + T2^3 + T2 T3^3";
      e.P = IntMatrix{{-4, 3, 0}, {-4, 0, 2}, {-3, 1, 1}};
      e.P_tilde = IntMatrix{{-4, -3, -2, -1, 3, 2, 1, 0, 0, 0},
                            {-4, -3, -2, -1, 0, 0, 0, 2, 1, 0},
                            {-3, -2, -1, 0, 1, 1, 1, 1, 1, 1}};
      ls = {4, 3, 2};
      break;
    case DuValType::E8:
      e.name = "E8";
      e.equation = "T1^2 + T2^3 + T3^5";
      e.P = IntMatrix{{-5, 3, 0}, {-5, 0, 2}, {-4, 1, 1}};
      e.P_tilde = IntMatrix{{-5, -4, -3, -2, -1, 3, 2, 1, 0, 0, 0},
                            {-5, -4, -3, -2, -1, 0, 0, 0, 2, 1, 0},
                            {-4, -3, -2, -1, 0, 1, 1, 1, 1, 1, 1}};
      ls = {5, 3, 2};
      break;
  }
  e.g = plain_relation(ls);
  e.g_tilde = chain_relation(ls);
  return e;
}

C1Data catalog_data(const CatalogEntry& entry) {
  C1Data data;
  data.type = DataType::Type2;
  data.blocks = {{-entry.P(0, 0)}, {entry.P(0, 1)}, {entry.P(1, 2)}};
  data.m = 0;
  data.A = entry.A;
  IntMatrix d(1, 3);
  for (std::size_t j = 0; j < 3; ++j) d(0, j) = entry.P(2, j);
  data.d = d;
  return data;
}

C1Data e6_family(long c) {
  CatalogEntry e = duval_catalog(DuValType::E6);
  e.P(2, 0) = 1 + 3 * c;
  return catalog_data(e);
}

IntMatrix e6_family_resolved(long c) {
  return from_long_rows({{-3, -2, -1, 3, 2, 1, 0, 0, 0},
                         {-3, -2, -1, 0, 0, 0, 2, 1, 0},
                         {1 + 3 * c, 1 + 2 * c, 1 + c, 1, 1, 1, 1, 1, 1}});
}

}  // namespace c1cox
