#include <gtest/gtest.h>

#include <random>

#include "unitlat/error.hpp"
#include "unitlat/relation.hpp"

using namespace unitlat;

namespace {

Ball dot(const IntVector& r, const std::vector<Ball>& x) {
  Ball s(x[0].prec());
  for (size_t i = 0; i < r.size(); ++i) s += x[i] * Ball::from_integer(r[i], x[0].prec());
  return s;
}

}  // namespace

TEST(IntegerRelation, EqualValuesGiveUnitRelation) {
  Prec p = 256;
  Ball a = log(Ball(7, p)) * 3;
  RelationResult r = integer_relation({a, log(Ball(343, p))}, 1000, p);
  ASSERT_EQ(r.status, RelationStatus::Found);
  EXPECT_EQ(r.relation, (IntVector{1, -1}));
}

TEST(IntegerRelation, LogSixIsSumOfLogTwoAndThree) {
  Prec p = 128;
  std::vector<Ball> x{log(Ball(2, p)), log(Ball(3, p)), log(Ball(6, p))};
  RelationResult r = integer_relation(x, 1000, p);
  ASSERT_EQ(r.status, RelationStatus::Found);
  EXPECT_EQ(r.relation, (IntVector{1, 1, -1}));
  EXPECT_LT(r.residual.mag().to_double(), std::ldexp(1.0, -32));
}

TEST(IntegerRelation, GoldenRatioHasNoSmallRelation) {
  // Oracle: the best approximations p/q of phi are Fibonacci ratios, and
  // |q phi - p| ~ 1/(sqrt5 q), so no relation a + b phi = 0 exists at all;
  // at 256 bits the certified bound must exceed 10^3.
  Prec p = 256;
  Ball phi = (Ball(1, p) + sqrt(Ball(5, p))) / 2;
  RelationResult r = integer_relation({Ball(1, p), phi}, 1000, p);
  ASSERT_EQ(r.status, RelationStatus::NoneBelow);
  EXPECT_GT(r.bound.to_double(), 1000.0);
  // every |a + b phi| with |a|,|b| <= 1000 is at least the Fibonacci one
  const double ph = (1 + std::sqrt(5.0)) / 2;
  long f0 = 1, f1 = 2;
  while (f1 <= 1000) {
    EXPECT_GT(std::fabs(f0 * ph - f1), 1e-4);
    long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
}

TEST(IntegerRelation, BoundMonotoneInPrecision) {
  std::vector<double> bounds;
  for (Prec p : {256, 384, 512}) {
    std::vector<Ball> x{log(Ball(2, p)), log(Ball(3, p)), log(Ball(5, p))};
    RelationResult r = integer_relation(x, 1000, p);
    ASSERT_EQ(r.status, RelationStatus::NoneBelow);
    bounds.push_back(r.bound.to_double());
  }
  EXPECT_LE(bounds[0], bounds[1]);
  EXPECT_LE(bounds[1], bounds[2]);
}

TEST(IntegerRelation, FindsPlantedRelation) {
  Prec p = 256;
  std::vector<Ball> x{log(Ball(2, p)), log(Ball(3, p)), log(Ball(5, p)), log(Ball(360, p))};
  // 360 = 2^3 3^2 5
  RelationResult r = integer_relation(x, 100, p);
  ASSERT_EQ(r.status, RelationStatus::Found);
  EXPECT_TRUE(dot(r.relation, x).contains_zero());
  EXPECT_EQ(r.relation, (IntVector{3, 2, 1, -1}));
}

TEST(IntegerRelation, IndependentLogsGiveCertifiedBound) {
  Prec p = 512;
  std::vector<Ball> x{log(Ball(2, p)), log(Ball(3, p)), log(Ball(5, p))};
  RelationResult r = integer_relation(x, 1000000, p);
  ASSERT_EQ(r.status, RelationStatus::NoneBelow);
  EXPECT_GE(r.bound.to_double(), 1e6);
}

TEST(IntegerRelation, LowPrecisionIsReported) {
  Prec p = 64;
  std::vector<Ball> x{log(Ball(2, p)), log(Ball(3, p)), log(Ball(5, p)), log(Ball(7, p))};
  try {
    integer_relation(x, Integer("1000000000000"), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientPrecision);
  }
}

TEST(IntegerRelation, PlantedRelationsProperty) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> c(-30, 30);
  Prec p = 384;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Ball> x{sqrt(Ball(2, p)), sqrt(Ball(3, p)), Ball::pi(p)};
    IntVector planted{c(rng), c(rng), c(rng)};
    Ball last(p);
    for (size_t i = 0; i < 3; ++i) last += x[i] * Ball::from_integer(planted[i], p);
    x.push_back(last);
    RelationResult r = integer_relation(x, 1000, p);
    ASSERT_EQ(r.status, RelationStatus::Found);
    EXPECT_TRUE(dot(r.relation, x).contains_zero());
    // relation is +-(planted, -1)
    IntVector expect = planted;
    expect.push_back(-1);
    IntVector neg = expect;
    for (auto& v : neg) v = -v;
    EXPECT_TRUE(r.relation == expect || r.relation == neg);
  }
}

TEST(Pslq, AgreesWithLll) {
  Prec p = 256;
  std::vector<Ball> x{log(Ball(2, p)), log(Ball(3, p)), log(Ball(5, p)), log(Ball(360, p))};
  PslqResult r = pslq(x, p, 100);
  ASSERT_TRUE(r.found);
  IntVector expect{3, 2, 1, -1}, neg{-3, -2, -1, 1};
  EXPECT_TRUE(r.relation == expect || r.relation == neg);
  PslqResult none = pslq({log(Ball(2, p)), log(Ball(3, p))}, p, 1000);
  EXPECT_FALSE(none.found);
}
