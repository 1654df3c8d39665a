#include <gtest/gtest.h>

#include "lattice_fixtures.hpp"
#include "unitlat/error.hpp"

using namespace unitlat;

TEST(GramJson, RoundTripPreservesEnclosures) {
  Prec p = 200;
  BallMatrix rows{{log(Ball(3, p)), log(Ball(5, p))}, {sqrt(Ball(2, p)), Ball::pi(p)}};
  GramMatrix g = GramMatrix::of_rows(rows);
  GramMatrix h = GramMatrix::from_json(g.to_json());
  ASSERT_EQ(h.rank(), 2u);
  EXPECT_EQ(h.prec(), g.prec());
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      // the reloaded ball must contain the original midpoint and be no
      // tighter than the original
      EXPECT_TRUE(h(i, j).contains(g(i, j).mid()));
      EXPECT_TRUE(h(i, j).upper() >= g(i, j).upper());
      EXPECT_TRUE(h(i, j).lower() <= g(i, j).lower());
    }
}

TEST(GramJson, RejectsMalformed) {
  nlohmann::json j = {{"schema", "unitlat.gram/v1"}, {"rank", 2}, {"prec", 64}, {"entries", nlohmann::json::array()}};
  EXPECT_THROW(GramMatrix::from_json(j), Error);
  j = {{"schema", "other"}};
  EXPECT_THROW(GramMatrix::from_json(j), Error);
}

TEST(GramMatrix, RejectsIndefinite) {
  try {
    GramMatrix(ball_matrix(IntMatrix{{1, 2}, {2, 1}}, 64));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
  }
}
