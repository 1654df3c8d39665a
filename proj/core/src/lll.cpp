#include "unitlat/lll.hpp"

#include <algorithm>

#include "unitlat/error.hpp"

namespace unitlat {

namespace {

Real as_real(const Integer& z, Prec p) { return Real::from_integer(z, p); }
Real as_real(const Real& x, Prec p) { return x.with_prec(p); }

void sub_mul(Integer& a, const Integer& x, const Integer& b) { a -= x * b; }
void sub_mul(Real& a, const Integer& x, const Real& b) { a -= b * Real::from_integer(x, b.prec()); }

template <typename S>
void swap_index(std::vector<std::vector<S>>& g, size_t a, size_t b) {
  std::swap(g[a], g[b]);
  for (auto& row : g) std::swap(row[a], row[b]);
}

// Floating-point LLL on a Gram matrix with entries of type S (exact
// integers or MPFR reals). Gram-Schmidt data is kept in Real at wp bits.
template <typename S>
IntMatrix lll_gram(std::vector<std::vector<S>> g, double delta, Prec wp) {
  size_t n = g.size();
  IntMatrix u = int_identity(n);
  if (n <= 1) return u;
  std::vector<std::vector<Real>> mu(n, std::vector<Real>(n, Real(wp)));
  std::vector<std::vector<Real>> r(n, std::vector<Real>(n, Real(wp)));
  Real eta = Real::from_double(0.5, wp) + Real::pow2(-30, wp);
  Real dlt = Real::from_double(delta, wp);

  auto gso_row = [&](size_t k) {
    for (size_t j = 0; j <= k; ++j) {
      Real s = as_real(g[k][j], wp);
      for (size_t i = 0; i < j; ++i) s -= mu[j][i] * r[k][i];
      r[k][j] = s;
      if (j < k) mu[k][j] = s / r[j][j];
    }
  };

  gso_row(0);
  if (r[0][0].sign() <= 0) fail(ErrorCode::NotPositiveDefinite, "LLL input not positive definite");
  size_t k = 1;
  size_t steps = 0;
  const size_t max_steps = 200000 + 2000 * n * n;
  while (k < n) {
    if (++steps > max_steps) fail(ErrorCode::PrecisionExhausted, "LLL did not terminate");
    int passes = 0;
    while (true) {
      gso_row(k);
      bool changed = false;
      for (size_t jj = k; jj-- > 0;) {
        if (!(eta < abs(mu[k][jj]))) continue;
        Integer x = mu[k][jj].round_to_integer();
        changed = true;
        S gkj_old = g[k][jj];
        S gjj = g[jj][jj];
        for (size_t i = 0; i < n; ++i) {
          if (i == k) continue;
          sub_mul(g[k][i], x, g[jj][i]);
          g[i][k] = g[k][i];
        }
        // |b_k - x b_j|^2 = g_kk - 2x g_kj + x^2 g_jj
        sub_mul(g[k][k], x, gkj_old);
        sub_mul(g[k][k], x, gkj_old);
        Integer x2 = -x * x;
        sub_mul(g[k][k], x2, gjj);
        for (size_t c = 0; c < n; ++c) u[k][c] -= x * u[jj][c];
        Real xr = Real::from_integer(x, wp);
        for (size_t i = 0; i < jj; ++i) mu[k][i] -= xr * mu[jj][i];
        mu[k][jj] -= xr;
      }
      if (!changed) break;
      if (++passes > 64) fail(ErrorCode::PrecisionExhausted, "LLL size reduction unstable");
    }
    if (r[k][k].sign() <= 0) fail(ErrorCode::NotPositiveDefinite, "LLL met a non-positive GSO norm");
    Real lhs = r[k][k];
    Real rhs = (dlt - mu[k][k - 1] * mu[k][k - 1]) * r[k - 1][k - 1];
    if (!(lhs < rhs)) {
      ++k;
    } else {
      swap_index(g, k, k - 1);
      std::swap(u[k], u[k - 1]);
      k = std::max<size_t>(1, k - 1);
      if (k == 1) gso_row(0);
    }
  }
  return u;
}

}  // namespace

LllResult lll_reduce(const GramMatrix& g, double delta) {
  if (!(delta > 0.25 && delta < 1.0)) fail(ErrorCode::InvalidArgument, "delta must lie in (1/4, 1)");
  size_t n = g.rank();
  Prec wp = g.prec() + 64;
  std::vector<std::vector<Real>> m(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i].push_back(g(i, j).mid().with_prec(wp));
  IntMatrix t = lll_gram(std::move(m), delta, wp);
  return LllResult{t, g.transformed_rows(t)};
}

LllBasisResult lll_reduce(const BallMatrix& basis, double delta) {
  GramMatrix g = GramMatrix::of_rows(basis);
  LllResult r = lll_reduce(g, delta);
  BallMatrix b = mul(ball_matrix(r.transform, min_prec(basis)), basis);
  return LllBasisResult{r.transform, b};
}

IntMatrix lll_reduce_integral_gram(const IntMatrix& gram, double delta) {
  if (!(delta > 0.25 && delta < 1.0)) fail(ErrorCode::InvalidArgument, "delta must lie in (1/4, 1)");
  size_t bits = 64;
  for (const auto& row : gram)
    for (const auto& z : row) bits = std::max(bits, mpz_sizeinbase(z.get_mpz_t(), 2));
  Prec wp = static_cast<Prec>(bits + 64 + 4 * gram.size());
  return lll_gram(gram, delta, wp);
}

namespace {

struct BallGso {
  BallMatrix mu;
  BallVector r;
};

BallGso ball_gso(const BallMatrix& g) {
  size_t n = g.size();
  Prec p = min_prec(g);
  BallGso out{BallMatrix(n, BallVector(n, Ball(p))), BallVector(n, Ball(p))};
  BallMatrix rr(n, BallVector(n, Ball(p)));
  for (size_t k = 0; k < n; ++k) {
    for (size_t j = 0; j <= k; ++j) {
      Ball s = g[k][j];
      for (size_t i = 0; i < j; ++i) s -= out.mu[j][i] * rr[k][i];
      rr[k][j] = s;
      if (j < k) out.mu[k][j] = s / out.r[j];
    }
    out.r[k] = rr[k][k];
    if (!out.r[k].is_positive()) fail(ErrorCode::NotPositiveDefinite, "GSO norm not certified positive");
  }
  return out;
}

}  // namespace

bool is_lll_reduced(const BallMatrix& gram, double delta) {
  size_t n = gram.size();
  if (n == 0) return true;
  Prec p = min_prec(gram);
  BallGso gso = ball_gso(gram);
  Real eta = Real::from_double(0.5, p) + Real::pow2(-20, p);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (eta < abs(gso.mu[i][j]).lower()) return false;
  Ball d = Ball::from_double(delta, p);
  for (size_t k = 1; k < n; ++k) {
    Ball slack = gso.r[k - 1] * Ball::from_rational(Rational(1, 1 << 20), p);
    Ball lhs = gso.r[k] + slack;
    Ball rhs = (d - sqr(gso.mu[k][k - 1])) * gso.r[k - 1];
    if ((lhs - rhs).is_negative()) return false;
  }
  return true;
}

Real gso_min_sqnorm_lower(const BallMatrix& gram) {
  BallGso gso = ball_gso(gram);
  Real m;
  bool first = true;
  for (const auto& r : gso.r) {
    Real lo = r.lower();
    if (first || lo < m) m = lo;
    first = false;
  }
  return m;
}

}  // namespace unitlat
