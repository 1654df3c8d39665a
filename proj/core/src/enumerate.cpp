#include "unitlat/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "unitlat/error.hpp"
#include "unitlat/lll.hpp"

namespace unitlat {

namespace {

using LD = long double;

Ball quadratic_form(const GramMatrix& g, const IntVector& y) {
  size_t n = g.rank();
  Ball s(g.prec());
  for (size_t i = 0; i < n; ++i) {
    if (y[i] == 0) continue;
    Ball row(g.prec());
    for (size_t j = 0; j < n; ++j)
      if (y[j] != 0) row += g(i, j) * Ball::from_integer(y[j], g.prec());
    s += row * Ball::from_integer(y[i], g.prec());
  }
  return s;
}

void normalize_sign(IntVector& y) {
  for (const auto& c : y) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& d : y) d = -d;
    return;
  }
}

// Fincke-Pohst enumeration on an LLL-reduced form, in long double with a
// slack on the bound; candidates are re-evaluated in ball arithmetic.
std::vector<NormedVector> enumerate_reduced(const GramMatrix& g, const LllResult& red, const Real& bound,
                                            size_t max_count, size_t budget) {
  size_t n = g.rank();
  std::vector<std::vector<LD>> a(n, std::vector<LD>(n));
  LD maxdiag = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = red.gram(i, j).mid().to_long_double();
  for (size_t i = 0; i < n; ++i) maxdiag = std::max(maxdiag, a[i][i]);
  std::vector<std::vector<LD>> q(n, std::vector<LD>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    LD d = a[i][i];
    for (size_t k = 0; k < i; ++k) d -= q[k][k] * q[k][i] * q[k][i];
    if (!(d > 0)) fail(ErrorCode::PrecisionExhausted, "Cholesky pivot lost in double precision");
    q[i][i] = d;
    for (size_t j = i + 1; j < n; ++j) {
      LD s = a[i][j];
      for (size_t k = 0; k < i; ++k) s -= q[k][k] * q[k][i] * q[k][j];
      q[i][j] = s / d;
    }
  }
  LD c = bound.to_long_double();
  c = c * (1 + 1e-12L) + maxdiag * 1e-15L + 1e-30L;

  std::vector<long long> x(n, 0);
  std::vector<std::vector<long long>> found;
  size_t nodes = 0;
  std::function<void(size_t, LD, bool)> level = [&](size_t i, LD remaining, bool higher_zero) {
    LD center = 0;
    for (size_t j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<LD>(x[j]);
    LD t = std::sqrt(std::max<LD>(remaining, 0) / q[i][i]);
    long long lo = static_cast<long long>(std::ceil(center - t));
    long long hi = static_cast<long long>(std::floor(center + t));
    if (higher_zero) lo = std::max<long long>(lo, i == 0 ? 1 : 0);
    for (long long v = lo; v <= hi; ++v) {
      if (++nodes > budget)
        fail(ErrorCode::EnumerationBudgetExceeded, "enumeration exceeded " + std::to_string(budget) + " nodes");
      LD diff = static_cast<LD>(v) - center;
      LD rem = remaining - q[i][i] * diff * diff;
      if (rem < 0) continue;
      x[i] = v;
      if (i == 0) {
        found.push_back(x);
        if (found.size() > max_count)
          fail(ErrorCode::EnumerationBudgetExceeded,
               "more than " + std::to_string(max_count) + " vectors below the bound");
      } else {
        level(i - 1, rem, higher_zero && v == 0);
      }
    }
    x[i] = 0;
  };
  if (n > 0) level(n - 1, c, true);

  std::vector<NormedVector> out;
  for (const auto& xv : found) {
    IntVector y(n, Integer(0));
    for (size_t i = 0; i < n; ++i) {
      if (xv[i] == 0) continue;
      for (size_t j = 0; j < n; ++j) y[j] += red.transform[i][j] * static_cast<long>(xv[i]);
    }
    normalize_sign(y);
    Ball nb = quadratic_form(g, y);
    if (bound < nb.lower()) continue;
    out.push_back(NormedVector{std::move(y), std::move(nb)});
  }
  std::sort(out.begin(), out.end(), [](const NormedVector& u, const NormedVector& v) {
    if (u.norm.mid() < v.norm.mid()) return true;
    if (v.norm.mid() < u.norm.mid()) return false;
    return u.coords > v.coords;
  });
  return out;
}

}  // namespace

std::vector<NormedVector> vectors_up_to(const GramMatrix& g, const Real& bound, size_t max_count, size_t budget) {
  LllResult red = lll_reduce(g);
  return enumerate_reduced(g, red, bound, max_count, budget);
}

ShortVectors shortest_vectors(const GramMatrix& g, size_t count_bound, size_t budget) {
  if (g.rank() == 0) fail(ErrorCode::InvalidArgument, "rank-0 lattice has no nonzero vectors");
  LllResult red = lll_reduce(g);
  Real bound = red.gram(0, 0).upper();
  for (size_t i = 1; i < g.rank(); ++i) bound = min(bound, red.gram(i, i).upper());
  std::vector<NormedVector> cand = enumerate_reduced(g, red, bound, 1'000'000, budget);
  if (cand.empty()) fail(ErrorCode::PrecisionExhausted, "enumeration found no vector below a basis norm");
  Real lo = cand[0].norm.lower(), hi = cand[0].norm.upper();
  for (const auto& c : cand) {
    lo = min(lo, c.norm.lower());
    hi = min(hi, c.norm.upper());
  }
  ShortVectors out;
  Real mid = (lo + hi) / 2;
  Real rad(Ball::kRadPrec);
  mpfr_sub(rad.get(), hi.get(), mid.get(), MPFR_RNDU);
  Real rad2(Ball::kRadPrec);
  mpfr_sub(rad2.get(), mid.get(), lo.get(), MPFR_RNDU);
  out.minimum = Ball(mid, max(rad, rad2));
  for (const auto& c : cand) {
    if (hi < c.norm.lower()) continue;
    if (out.vectors.size() >= count_bound) {
      out.truncated = true;
      break;
    }
    out.vectors.push_back(c.coords);
  }
  return out;
}

}  // namespace unitlat
