#include "unitlat/relation.hpp"

#include <algorithm>

#include "unitlat/error.hpp"
#include "unitlat/lll.hpp"

namespace unitlat {

const char* to_string(RelationStatus s) { return s == RelationStatus::Found ? "Found" : "NoneBelow"; }

namespace {

Ball dot(const IntVector& r, const std::vector<Ball>& x) {
  Ball s(x[0].prec());
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) s += x[i] * Ball::from_integer(r[i], x[i].prec());
  return s;
}

void normalize_sign(IntVector& r) {
  for (const auto& c : r) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& d : r) d = -d;
    return;
  }
}

Integer max_abs(const IntVector& r) {
  Integer m = 0;
  for (const auto& c : r) m = std::max(m, Integer(abs(c)));
  return m;
}

Integer sqnorm(const IntVector& r) {
  Integer s = 0;
  for (const auto& c : r) s += c * c;
  return s;
}

}  // namespace

RelationResult integer_relation(const std::vector<Ball>& values, const Integer& coeff_bound, Prec prec) {
  size_t n = values.size();
  if (n < 2) fail(ErrorCode::InvalidArgument, "integer_relation needs at least two values");
  if (coeff_bound < 1) fail(ErrorCode::InvalidArgument, "coefficient bound must be positive");
  if (prec < 16) fail(ErrorCode::InvalidArgument, "precision too small");
  long half = static_cast<long>(prec / 2);
  Real radmax(Ball::kRadPrec);
  for (const auto& v : values) {
    if (!v.mid().is_finite()) fail(ErrorCode::InvalidArgument, "non-finite value");
    if (!(v.rad() < Real::pow2(-half, Ball::kRadPrec)))
      fail(ErrorCode::BallTooWide, "value radius " + v.rad().to_string(6) + " exceeds 2^-(prec/2)");
    radmax = max(radmax, v.rad());
  }
  IntVector a(n);
  for (size_t i = 0; i < n; ++i) {
    Real s(values[i].prec() + 8);
    mpfr_mul_2si(s.get(), values[i].mid().get(), half, MPFR_RNDN);
    a[i] = s.round_to_integer();
  }
  IntMatrix g(n, IntVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = a[i] * a[j] + (i == j ? 1 : 0);
  IntMatrix t = lll_reduce_integral_gram(g, 0.99);

  RelationResult out;
  out.prec = prec;
  Real threshold = Real::pow2(-static_cast<long>(prec / 4), Ball::kRadPrec);
  // A generic short LLL vector already has |r.x| near 2^(-prec/2 + prec/(2n));
  // a genuine relation must also be consistent with zero or far below that.
  Real floor_threshold = Real::pow2(-static_cast<long>(3 * prec / 4), Ball::kRadPrec);
  const IntVector* best = nullptr;
  Ball best_res;
  for (const auto& row : t) {
    if (max_abs(row) > coeff_bound) continue;
    Ball res = dot(row, values);
    if (!(res.mag() < threshold)) continue;
    if (!res.contains_zero() && !(res.mag() < floor_threshold)) continue;
    if (best == nullptr || sqnorm(row) < sqnorm(*best)) {
      best = &row;
      best_res = res;
    }
  }
  if (best != nullptr) {
    out.status = RelationStatus::Found;
    out.relation = *best;
    normalize_sign(out.relation);
    out.residual = best_res;
    return out;
  }

  // Certified lower bound on relation norms from the reduced basis.
  IntMatrix red = mul(mul(t, g), transpose(t));
  size_t bits = 64;
  for (const auto& row : red)
    for (const auto& z : row) bits = std::max(bits, mpz_sizeinbase(z.get_mpz_t(), 2));
  Prec wp = static_cast<Prec>(bits + 64);
  Real lam2 = gso_min_sqnorm_lower(ball_matrix(red, wp));
  // |sum r_i a_i| <= |r|_1 (1/2 + N rad) <= sqrt(n) |r|_2 (1/2 + N rad)
  Real nr(Ball::kRadPrec);
  mpfr_mul_2si(nr.get(), radmax.get(), half, MPFR_RNDU);
  Real c = detail::rad_add(nr, Real::from_double(0.5, Ball::kRadPrec));
  mpfr_sqr(c.get(), c.get(), MPFR_RNDU);
  mpfr_mul_ui(c.get(), c.get(), static_cast<unsigned long>(n), MPFR_RNDU);
  mpfr_add_ui(c.get(), c.get(), 1, MPFR_RNDU);
  Real b(wp);
  mpfr_div(b.get(), lam2.get(), c.get(), MPFR_RNDD);
  if (b.sign() < 0) mpfr_set_zero(b.get(), 1);
  mpfr_sqrt(b.get(), b.get(), MPFR_RNDD);
  if (b < Real::from_integer(coeff_bound, wp))
    fail(ErrorCode::InsufficientPrecision, "certified relation bound " + b.to_string(8) + " below " +
                                               coeff_bound.get_str() + " at precision " + std::to_string(prec));
  out.status = RelationStatus::NoneBelow;
  out.bound = b.with_prec(64, MPFR_RNDD);
  return out;
}

PslqResult pslq(const std::vector<Ball>& values, Prec prec, const Integer& coeff_bound, size_t max_iterations) {
  size_t n = values.size();
  if (n < 2) fail(ErrorCode::InvalidArgument, "pslq needs at least two values");
  PslqResult out;
  std::vector<Real> x;
  for (const auto& v : values) x.push_back(v.mid().with_prec(prec));
  Real nrm(prec);
  for (const auto& v : x) nrm += v * v;
  nrm = sqrt(nrm);
  if (nrm.is_zero()) fail(ErrorCode::InvalidArgument, "all values zero");
  for (auto& v : x) v /= nrm;

  std::vector<Real> s(n, Real(prec));
  for (size_t k = n; k-- > 0;) {
    Real t = x[k] * x[k];
    if (k + 1 < n) t += s[k + 1] * s[k + 1];
    s[k] = sqrt(t);
  }
  std::vector<std::vector<Real>> h(n, std::vector<Real>(n - 1, Real(prec)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j + 1 < n && j <= i; ++j) {
      if (i == j) {
        h[i][j] = s[j + 1] / s[j];
      } else {
        h[i][j] = -(x[i] * x[j]) / (s[j] * s[j + 1]);
      }
    }
  IntMatrix a = int_identity(n), b = int_identity(n);
  std::vector<Real> y = x;
  Real gamma = sqrt(Real(4, prec) / Real(3, prec));

  auto reduce_entry = [&](size_t i, size_t j) {
    if (h[j][j].is_zero()) return;
    Integer t = (h[i][j] / h[j][j]).round_to_integer();
    if (t == 0) return;
    Real tr = Real::from_integer(t, prec);
    y[j] += tr * y[i];
    for (size_t k = 0; k <= j; ++k) h[i][k] -= tr * h[j][k];
    for (size_t k = 0; k < n; ++k) {
      a[i][k] -= t * a[j][k];
      b[k][j] += t * b[k][i];
    }
  };
  for (size_t i = 1; i < n; ++i)
    for (size_t j = std::min(i, n - 1); j-- > 0;) reduce_entry(i, j);

  Real zero_tol = Real::pow2(-static_cast<long>(prec) * 3 / 4, prec);
  Real cb = Real::from_integer(coeff_bound, prec);
  for (size_t it = 0; it < max_iterations; ++it) {
    out.iterations = it + 1;
    size_t m = 0;
    Real best(prec), gp(1, prec);
    for (size_t i = 0; i + 1 < n; ++i) {
      gp *= gamma;
      Real v = gp * abs(h[i][i]);
      if (best < v) {
        best = v;
        m = i;
      }
    }
    std::swap(y[m], y[m + 1]);
    std::swap(a[m], a[m + 1]);
    std::swap(h[m], h[m + 1]);
    for (size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);
    if (m + 2 < n) {
      Real t0 = sqrt(h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]);
      Real t1 = h[m][m] / t0, t2 = h[m][m + 1] / t0;
      for (size_t i = m; i < n; ++i) {
        Real t3 = h[i][m], t4 = h[i][m + 1];
        h[i][m] = t1 * t3 + t2 * t4;
        h[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (size_t i = m + 1; i < n; ++i)
      for (size_t j = std::min(i - 1, m + 1) + 1; j-- > 0;) reduce_entry(i, j);

    Real hmax(prec);
    for (size_t j = 0; j + 1 < n; ++j) hmax = max(hmax, abs(h[j][j]));
    if (!hmax.is_zero()) out.norm_bound = (Real(1, prec) / hmax).with_prec(64);
    for (size_t j = 0; j < n; ++j) {
      if (abs(y[j]) < zero_tol) {
        IntVector r(n);
        for (size_t k = 0; k < n; ++k) r[k] = b[k][j];
        normalize_sign(r);
        if (max_abs(r) <= coeff_bound) {
          out.found = true;
          out.relation = r;
        }
        return out;
      }
    }
    if (!hmax.is_zero() && cb < out.norm_bound) return out;
  }
  return out;
}

}  // namespace unitlat
