#include <gtest/gtest.h>

#include <map>

#include "lattice_fixtures.hpp"
#include "unitlat/enumerate.hpp"
#include "unitlat/error.hpp"

using namespace unitlat;
using namespace fixtures;

namespace {

// Brute force over a coefficient box; box radius chosen from the
// smallest eigenvalue bound so every vector of norm <= bound is inside.
std::map<Integer, size_t> brute_norm_counts(const IntMatrix& g, long box, const Integer& bound) {
  size_t n = g.size();
  std::map<Integer, size_t> counts;
  IntVector x(n, 0);
  std::vector<long> c(n, -box);
  for (;;) {
    bool zero = true;
    for (size_t i = 0; i < n; ++i) {
      x[i] = c[i];
      zero = zero && c[i] == 0;
    }
    if (!zero) {
      Integer q = quad(g, x);
      if (q <= bound) ++counts[q];
    }
    size_t i = 0;
    while (i < n && c[i] == box) c[i++] = -box;
    if (i == n) break;
    ++c[i];
  }
  for (auto& [k, v] : counts) v /= 2;
  return counts;
}

}  // namespace

TEST(Enumerate, MatchesBruteForceOnSmallLattices) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 8; ++rep) {
    // LLL-friendly small bases so that the box bound is easy: use identity-ish bases.
    IntMatrix b = random_int_matrix(rng, 3, 3, -2, 2);
    for (size_t i = 0; i < 3; ++i) b[i][i] += 4;
    if (det(b) == 0) continue;
    IntMatrix g = mul(b, transpose(b));
    Integer bound = 40;
    // For bound 40 and |det b| >= ..., coefficients are at most sqrt(bound)/s_min(b);
    // s_min >= 4 - 2*2 is not guaranteed, so use a generous box.
    auto brute = brute_norm_counts(g, 8, bound);
    auto got = vectors_up_to(gram_of(g, 128), Real(40, 128), 100000);
    std::map<Integer, size_t> counts;
    for (const auto& v : got) {
      Integer q = quad(g, v.coords);
      EXPECT_TRUE(v.norm.contains(Rational(q)));
      ++counts[q];
    }
    EXPECT_EQ(counts, brute);
  }
}

TEST(Enumerate, RootLatticeA2HasThreeMinimalPairs) {
  IntMatrix g{{2, -1}, {-1, 2}};
  ShortVectors sv = shortest_vectors(gram_of(g, 128), 100);
  EXPECT_TRUE(sv.minimum.contains(Rational(2)));
  EXPECT_EQ(sv.vectors.size(), 3u);
  EXPECT_FALSE(sv.truncated);
}

TEST(Enumerate, E8KissingNumber) {
  IntMatrix g{{4, -2, 0, 0, 0, 0, 0, 1},  {-2, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, 0},
              {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
              {0, 0, 0, 0, 0, -1, 2, 0},  {1, 0, 0, 0, 0, 0, 0, 2}};
  ASSERT_EQ(det(g), 1);
  ShortVectors sv = shortest_vectors(gram_of(g, 128), 1000);
  EXPECT_TRUE(sv.minimum.contains(Rational(2)));
  EXPECT_EQ(sv.vectors.size(), 120u);
}

TEST(Enumerate, CountBoundTruncates) {
  IntMatrix g{{2, -1}, {-1, 2}};
  ShortVectors sv = shortest_vectors(gram_of(g, 128), 2);
  EXPECT_TRUE(sv.truncated);
}

TEST(Enumerate, BudgetExceededThrows) {
  std::mt19937_64 rng(43);
  IntMatrix g = random_integral_gram(rng, 6, 3);
  try {
    vectors_up_to(gram_of(g, 128), Real(100000, 128), 1000000000, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationBudgetExceeded);
  }
}
