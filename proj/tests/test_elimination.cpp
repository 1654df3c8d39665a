#include <gtest/gtest.h>

#include <random>

#include "unitlat/error.hpp"
#include "unitlat/multipoly.hpp"

using namespace unitlat;

namespace {

// Product of the 2^n sign-twisted linear forms evaluated directly at x.
Rational product_oracle(const RationalVector& c, const RationalVector& x) {
  size_t n = c.size() - 1;
  Rational p(1);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    Rational s = c[0] * x[0];
    for (size_t i = 1; i <= n; ++i) s += ((mask >> (i - 1)) & 1 ? -1 : 1) * c[i] * x[i];
    p *= s;
  }
  return p;
}

RationalVector random_point(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  RationalVector x;
  for (size_t i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    x.push_back(q);
  }
  return x;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

TEST(SignOrbit, TwoVariables) {
  EXPECT_EQ(sign_orbit_product({Rational(1), Rational(1)}), MultiPoly::parse("x0^2 - x1^2"));
  EXPECT_EQ(sign_orbit_product({Rational(2), Rational(3)}), MultiPoly::parse("4*x0^2 - 9*x1^2"));
}

TEST(SignOrbit, ThreeVariablesMatchExpansion) {
  MultiPoly h = sign_orbit_product({Rational(1), Rational(1), Rational(1)});
  MultiPoly want = MultiPoly::parse("x0^4 + x1^4 + x2^4 - 2*x0^2*x1^2 - 2*x0^2*x2^2 - 2*x1^2*x2^2");
  EXPECT_EQ(h, want);
  // expansion oracle: the four factors multiplied by hand
  MultiPoly a = MultiPoly::parse("x0 + x1 + x2"), b = MultiPoly::parse("x0 - x1 + x2");
  MultiPoly c = MultiPoly::parse("x0 + x1 - x2"), d = MultiPoly::parse("x0 - x1 - x2");
  EXPECT_EQ(((a * b) * c) * d, want);
  EXPECT_EQ(desquare(h), MultiPoly::parse("x0^2 + x1^2 + x2^2 - 2*x0*x1 - 2*x0*x2 - 2*x1*x2"));
}

TEST(SignOrbit, RandomFormsAreSignInvariantEvenAndDesquare) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  std::uniform_int_distribution<size_t> vars(2, 5);
  for (int it = 0; it < 100; ++it) {
    size_t m = vars(rng);
    RationalVector c;
    for (size_t i = 0; i < m; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    if (c[0] == 0) c[0] = 1;
    MultiPoly h = sign_orbit_product(c);
    for (size_t i = 0; i < m; ++i) EXPECT_EQ(h.negate_variable(i), h);
    EXPECT_TRUE(h.is_even());
    MultiPoly f = desquare(h);
    EXPECT_EQ(f.square_substitute(), h);
    EXPECT_EQ(desquare(f.square_substitute()), f);
    // degree 2^n, and at most C(2^(n-1) + n, n) even monomials of that degree
    long n = static_cast<long>(m) - 1;
    size_t zeros = static_cast<size_t>(std::count_if(c.begin(), c.end(), [](const Rational& q) { return q == 0; }));
    if (zeros == 0) EXPECT_EQ(h.total_degree(), 1 << n);
    EXPECT_LE(Integer(static_cast<unsigned long>(h.term_count())), binomial((1L << (n - 1)) + n, n));
    for (int k = 0; k < 3; ++k) {
      RationalVector x = random_point(rng, m);
      EXPECT_EQ(h.eval(x), product_oracle(c, x));
    }
  }
}

TEST(SignOrbit, Budget) {
  EXPECT_THROW(sign_orbit_product(RationalVector(10, Rational(1))), Error);
  try {
    sign_orbit_product(RationalVector(10, Rational(1)));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(sign_orbit_product({Rational(0), Rational(0)}), Error);
}

TEST(SignOrbit, PartialProductDividesFullProduct) {
  RationalVector c{Rational(1), Rational(2), Rational(-3), Rational(5, 2)};
  MultiPoly part = partial_sign_product(c, {1});
  EXPECT_TRUE(part.is_even_in(1));
  EXPECT_FALSE(part.is_even_in(2));
  // the full product is the product of the partial ones over the remaining signs
  RationalVector c2 = c, c3 = c, c23 = c;
  c2[2] = -c2[2];
  c3[3] = -c3[3];
  c23[2] = -c23[2];
  c23[3] = -c23[3];
  MultiPoly full = part * partial_sign_product(c2, {1}) * partial_sign_product(c3, {1}) *
                   partial_sign_product(c23, {1});
  EXPECT_EQ(full, sign_orbit_product(c));
}

TEST(Desquare, RejectsOddPolynomials) {
  EXPECT_EQ(desquare(MultiPoly::parse("x0^2 - x1^2")), MultiPoly::parse("x0 - x1"));
  try {
    desquare(MultiPoly::parse("x0*x1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEven);
  }
}

TEST(MultiPoly, ParsePrintRoundTrip) {
  for (const char* s : {"4*x0^2 - 9*x1^2", "-x2 + 1/3*x0*x1^4 - 7", "x0^16", "0*x0 + 5"}) {
    MultiPoly p = MultiPoly::parse(s);
    EXPECT_EQ(MultiPoly::parse(p.to_string(), p.nvars()), p) << s;
  }
  EXPECT_EQ(MultiPoly::parse("4*x0^2 - 9*x1^2").to_string(), "4*x0^2 - 9*x1^2");
  EXPECT_EQ(MultiPoly::parse("x1 - x1").to_string(), "0");
  EXPECT_THROW(MultiPoly::parse("x0 +"), Error);
  EXPECT_THROW(MultiPoly::parse("y0"), Error);
  EXPECT_THROW(MultiPoly::parse("1/0*x0"), Error);
}

TEST(Vanishing, Verdicts) {
  Prec p = 256;
  MultiPoly d = MultiPoly::parse("x0 - x1");
  Ball r2 = log(Ball(1, p) + sqrt(Ball(2, p)));
  Ball r3 = log(Ball(2, p) + sqrt(Ball(3, p)));
  auto v = vanishing_check(d, {r2 * r2, r3 * r3}, 100);
  EXPECT_EQ(v.verdict, VanishingVerdict::Separated);
  v = vanishing_check(d, {r2 * r2, r2 * r2}, 200);
  EXPECT_EQ(v.verdict, VanishingVerdict::Vanishes);
  v = vanishing_check(MultiPoly::parse("x0*x1 + 3*x1^2"), {Ball(0, p), Ball(0, p)}, 1000);
  EXPECT_EQ(v.verdict, VanishingVerdict::Vanishes);
  EXPECT_TRUE(v.value.is_exact());
  // a wide ball around zero is neither
  Ball wide(Real(0, 64), Real::from_double(1e-3, 64));
  EXPECT_EQ(vanishing_check(d, {wide, Ball(0, 64)}, 40).verdict, VanishingVerdict::Undecided);
}
