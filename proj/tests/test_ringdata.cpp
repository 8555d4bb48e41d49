#include <gtest/gtest.h>

#include <random>

#include "c1cox/catalog.hpp"
#include "c1cox/error.hpp"
#include "c1cox/ringdata.hpp"
#include "oracles.hpp"

using namespace c1cox;

namespace {

C1Data sl2() {
  C1Data data;
  data.type = DataType::Type1;
  data.blocks = {{1, 1}, {1, 1}};
  data.A = {{Rational(0), Rational(1)}};
  return data;
}

ErrorKind kind_of(const C1Data& data) {
  try {
    validate(data);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Validate, AcceptsSl2AndCatalog) {
  EXPECT_NO_THROW(validate(sl2()));
  EXPECT_NO_THROW(validate(catalog_data(duval_catalog(DuValType::E6))));
  EXPECT_EQ(describe(sl2()), "Type 1, r=2, n=(2,2), m=0");
  EXPECT_EQ(describe(catalog_data(duval_catalog(DuValType::E8))), "Type 2, r=2, n=(1,1,1), m=0, s=1");
}

TEST(Validate, ErrorKinds) {
  C1Data d = sl2();
  d.A = {{Rational(1), Rational(1)}};
  EXPECT_EQ(kind_of(d), ErrorKind::DuplicateAValues);

  d = sl2();
  d.blocks[1][0] = 0;
  EXPECT_EQ(kind_of(d), ErrorKind::NonpositiveExponent);

  d = sl2();
  d.A = {{Rational(0), Rational(1), Rational(2)}};
  EXPECT_EQ(kind_of(d), ErrorKind::MalformedData);

  d = sl2();
  d.blocks = {};
  EXPECT_EQ(kind_of(d), ErrorKind::MalformedData);

  C1Data e6 = catalog_data(duval_catalog(DuValType::E6));
  C1Data bad = e6;
  bad.A = {{Rational(1), Rational(2), Rational(1)}, {Rational(1), Rational(2), Rational(0)}};
  EXPECT_EQ(kind_of(bad), ErrorKind::DependentAColumns);

  bad = e6;
  bad.d = IntMatrix{{3, 1, 1}};  // column 1 becomes (-3, -3, 3)
  try {
    validate(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonprimitiveColumn);
    EXPECT_NE(std::string(e.what()).find("column 1"), std::string::npos);
  }

  bad = e6;
  bad.d = IntMatrix{{1, 1}};
  EXPECT_EQ(kind_of(bad), ErrorKind::MalformedData);

  bad = e6;
  bad.d = IntMatrix{{1, 1, 1}, {0, 1, 2}};
  EXPECT_EQ(kind_of(bad), ErrorKind::BadSRange);

  C1Data dup;
  dup.type = DataType::Type1;
  dup.blocks = {{1, 2}, {2}};
  dup.m = 2;
  dup.A = {{Rational(0), Rational(1)}};
  dup.d = IntMatrix{{0, 1, 1, 1, 1}};
  try {
    validate(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateColumn);
    EXPECT_NE(std::string(e.what()).find("column 4 and column 5"), std::string::npos);
  }

  // d = sum of the rows of P0
  C1Data flat;
  flat.type = DataType::Type2;
  flat.blocks = {{1}, {1}, {1}};
  flat.A = e6.A;
  flat.d = IntMatrix{{-2, 1, 1}};
  EXPECT_EQ(kind_of(flat), ErrorKind::RankDeficientP);
}

TEST(Matrices, P0Shapes) {
  EXPECT_EQ(build_p0(sl2()), (IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}));
  const C1Data e6 = catalog_data(duval_catalog(DuValType::E6));
  EXPECT_EQ(build_p0(e6), (IntMatrix{{-3, 3, 0}, {-3, 0, 2}}));
  EXPECT_EQ(build_p(e6), duval_catalog(DuValType::E6).P);
  EXPECT_THROW(build_p(sl2()), Error);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(sl2()), 3u);
  EXPECT_EQ(dimension(catalog_data(duval_catalog(DuValType::E6))), 2u);
}

TEST(Grading, E6Groups) {
  const C1Data e6 = catalog_data(duval_catalog(DuValType::E6));
  EXPECT_EQ(grading(e6, GradingLevel::K0).target().to_string(), "Z + Z/3");
  EXPECT_EQ(grading(e6, GradingLevel::K).target().to_string(), "Z/3");
  EXPECT_THROW(grading(sl2(), GradingLevel::K), Error);
}

TEST(Grading, RelationsOfP0HaveDegreeZero) {
  const C1Data e6 = catalog_data(duval_catalog(DuValType::E6));
  for (GradingLevel level : {GradingLevel::K0, GradingLevel::K}) {
    const GradingMap q = grading(e6, level);
    const IntMatrix p = level == GradingLevel::K0 ? build_p0(e6) : build_p(e6);
    for (std::size_t i = 0; i < p.rows(); ++i) EXPECT_TRUE(is_zero(q.degree(p.row(i))));
  }
}

TEST(Factoriality, Verdicts) {
  EXPECT_TRUE(is_factorial(sl2()).verdict);
  C1Data d = sl2();
  d.blocks = {{2, 4}, {1, 1}};
  const auto cert = is_factorial(d);
  EXPECT_FALSE(cert.verdict);
  EXPECT_FALSE(cert.torsion_free);
  EXPECT_EQ(cert.per_block_gcds, (std::vector<Integer>{2, 1}));
  EXPECT_FALSE(variable_is_prime(d, 2, 1));
  EXPECT_TRUE(variable_is_prime(d, 1, 1));

  const C1Data e6 = catalog_data(duval_catalog(DuValType::E6));
  EXPECT_FALSE(is_factorial(e6).verdict);  // gcd(3, 3) = 3
  const C1Data e8 = catalog_data(duval_catalog(DuValType::E8));
  EXPECT_TRUE(is_factorial(e8).verdict);
  EXPECT_THROW(variable_is_prime(e8, 0, 1), Error);
}

TEST(Factoriality, HypothesisViolated) {
  C1Data d = sl2();
  d.blocks = {{1}, {2, 3}};
  try {
    is_factorial(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
  }
  d.blocks = {{2, 3}};
  d.A = {{Rational(0)}};
  EXPECT_THROW(is_factorial(d), Error);
}

TEST(Factoriality, VerdictMatchesTorsionFreeness) {
  std::mt19937 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const DataType type = trial % 2 ? DataType::Type2 : DataType::Type1;
    C1Data d = oracle::random_data(rng, type, 3, 2, 4, 0, 0);
    try {
      d = validate(d);
      const auto cert = is_factorial(d);
      ASSERT_EQ(cert.verdict, cert.torsion_free) << describe(d);
      ASSERT_EQ(cert.torsion_free, oracle::cokernel_torsion_free(build_p0(d).transpose()));
      ++checked;
    } catch (const Error&) {
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(AlmostFree, EquivalentToPrimitiveColumns) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    C1Data d = oracle::random_data(rng, trial % 2 ? DataType::Type2 : DataType::Type1, 3, 2, 3,
                                   trial % 3 == 0 ? 1 : 0, 1);
    d.d = std::nullopt;
    IntMatrix row(1, d.num_columns());
    for (std::size_t j = 0; j < row.cols(); ++j) row(0, j) = 1 + 12 * static_cast<long>(j);
    d.d = row;
    try {
      d = validate(d);
    } catch (const Error&) {
      continue;
    }
    const IntMatrix p = build_p(d);
    bool all_primitive = true;
    for (const auto& c : p.column_list()) all_primitive = all_primitive && content(c) == 1;
    ASSERT_EQ(is_almost_free(p), all_primitive);
    ++checked;
  }
  EXPECT_GT(checked, 50);
  EXPECT_FALSE(is_almost_free(IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_TRUE(is_almost_free(IntMatrix{{1, 0, -1}, {0, 1, -1}}));
}
