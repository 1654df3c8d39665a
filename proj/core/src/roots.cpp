#include "unitlat/roots.hpp"

#include <algorithm>
#include <cmath>

#include "unitlat/error.hpp"

namespace unitlat {

namespace {

// Fujiwara bound on root moduli of a monic polynomial.
double root_radius_bound(const RationalPoly& q) {
  int n = q.degree();
  double b = 0;
  for (int k = 1; k <= n; ++k) {
    double c = std::fabs(q.coeff(n - k).get_d());
    if (c == 0) continue;
    if (k == n) c /= 2;
    b = std::max(b, std::pow(c, 1.0 / k));
  }
  return std::max(2 * b, 1e-3);
}

// Aberth-Ehrlich iteration, run at increasing precision up to wp.
std::vector<Complex> aberth(const RationalPoly& q, Prec wp) {
  int n = q.degree();
  Prec p = std::min<Prec>(64, wp);
  double rb = root_radius_bound(q);
  std::vector<Complex> z;
  Real two_pi = Real::pi(p) * 2;
  for (int k = 0; k < n; ++k) {
    Real ang = two_pi * k / n + Real::from_double(0.7, p);
    z.push_back(polar(Real::from_double(rb, p), ang));
  }
  const int max_iter = 600 + 20 * n;
  while (true) {
    int iter = 0;
    Real tol = Real::pow2(-static_cast<long>(p) + 12, 64);
    for (; iter < max_iter; ++iter) {
      Real worst(64);
      for (int k = 0; k < n; ++k) {
        auto [pv, dv] = q.eval_with_derivative(z[static_cast<size_t>(k)]);
        if (pv.is_zero()) continue;
        if (dv.is_zero()) {
          z[static_cast<size_t>(k)].re += Real::pow2(-static_cast<long>(p) / 2, p);
          worst = Real(1, 64);
          continue;
        }
        Complex ratio = pv / dv;
        Complex s(p);
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          Complex diff = z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
          if (diff.is_zero()) continue;
          s += Complex(1, p) / diff;
        }
        Complex den = Complex(1, p) - ratio * s;
        Complex w = den.is_zero() ? ratio : ratio / den;
        z[static_cast<size_t>(k)] -= w;
        Real scale = max(Real(1, 64), z[static_cast<size_t>(k)].abs().with_prec(64));
        Real rel = w.abs().with_prec(64) / scale;
        if (worst < rel) worst = rel;
      }
      if (worst < tol) break;
    }
    if (p >= wp) break;
    p = std::min<Prec>(wp, p * 2);
    for (auto& v : z) v = v.with_prec(p);
  }
  for (auto& v : z) v = v.with_prec(wp);
  return z;
}

struct Disc {
  Complex center;
  Real radius;
  bool real = false;
};

Real inclusion_radius(const RationalPoly& q, const ComplexBall& z) {
  auto [pv, dv] = q.eval_with_derivative(z);
  Real den = dv.mig();
  if (den.sign() <= 0) return Real(-1, Ball::kRadPrec);
  Real r(Ball::kRadPrec);
  mpfr_mul_ui(r.get(), pv.mag().get(), static_cast<unsigned long>(q.degree()), MPFR_RNDU);
  mpfr_div(r.get(), r.get(), den.get(), MPFR_RNDU);
  return r;
}

}  // namespace

std::vector<Root> poly_roots(const RationalPoly& p, Prec prec) {
  if (p.degree() < 1) fail(ErrorCode::InvalidArgument, "poly_roots needs degree >= 1");
  if (prec < 16) fail(ErrorCode::InvalidArgument, "precision too small");
  if (!is_squarefree(p)) fail(ErrorCode::NotSquarefree, "polynomial is not squarefree: " + p.to_string());
  RationalPoly q = p.monic();
  int n = q.degree();
  Prec wp = 2 * prec + 32;
  if (n == 1) {
    Ball r = Ball::from_rational(-q.coeff(0), wp);
    return {Root{ComplexBall(r), true}};
  }
  std::vector<Complex> z = aberth(q, wp);

  std::vector<Disc> discs;
  for (const auto& c : z) {
    Disc d;
    d.center = c;
    d.radius = inclusion_radius(q, ComplexBall(c));
    if (d.radius.sign() < 0)
      fail(ErrorCode::PrecisionExhausted, "derivative not separated from zero at a root approximation");
    Real im_abs = detail::abs_down(c.im);
    if (im_abs <= d.radius) {
      Complex rc(c.re, Real(wp));
      Real rr = inclusion_radius(q, ComplexBall(rc));
      if (rr.sign() >= 0) {
        d.center = rc;
        d.radius = rr;
        d.real = true;
      }
    }
    discs.push_back(std::move(d));
  }
  // Pairwise disjointness of the enclosing squares (half-side = radius).
  for (size_t i = 0; i < discs.size(); ++i) {
    for (size_t j = i + 1; j < discs.size(); ++j) {
      ComplexBall diff = ComplexBall(discs[i].center) - ComplexBall(discs[j].center);
      Real sep = diff.mig();
      Real need(Ball::kRadPrec);
      mpfr_add(need.get(), discs[i].radius.get(), discs[j].radius.get(), MPFR_RNDU);
      mpfr_mul_ui(need.get(), need.get(), 2, MPFR_RNDU);
      if (!(need < sep))
        fail(ErrorCode::PrecisionExhausted,
             "root isolation failed at precision " + std::to_string(prec));
    }
  }
  std::vector<Root> reals, complexes;
  for (auto& d : discs) {
    if (d.real) {
      reals.push_back(Root{ComplexBall(Ball(d.center.re, d.radius)), true});
    } else {
      complexes.push_back(
          Root{ComplexBall(Ball(d.center.re, d.radius), Ball(d.center.im, d.radius)), false});
    }
  }
  std::sort(reals.begin(), reals.end(),
            [](const Root& a, const Root& b) { return a.value.re().mid() < b.value.re().mid(); });
  std::sort(complexes.begin(), complexes.end(), [](const Root& a, const Root& b) {
    return a.value.mid().arg() < b.value.mid().arg();
  });
  reals.insert(reals.end(), complexes.begin(), complexes.end());
  return reals;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_rational_between(hi, lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return Rational(fl);
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
  Rational r = Rational(fl) + 1 / inner;
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_reconstruct(const Ball& x, const Integer& denom_bound) {
  if (denom_bound < 1) fail(ErrorCode::InvalidArgument, "denominator bound must be positive");
  Rational limit(1, 2 * denom_bound * denom_bound);
  limit.canonicalize();
  Rational rad = x.rad().to_rational();
  if (!(rad < limit))
    fail(ErrorCode::BallTooWide, "ball radius " + x.rad().to_string(6) +
                                     " too wide for denominator bound " + denom_bound.get_str());
  Rational mid = x.mid().to_rational();
  Rational s = simplest_rational_between(mid - rad, mid + rad);
  if (s.get_den() <= denom_bound) return s;
  return std::nullopt;
}

}  // namespace unitlat
