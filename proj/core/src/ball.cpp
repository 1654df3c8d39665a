#include "unitlat/ball.hpp"

#include <algorithm>
#include <cmath>

#include "unitlat/error.hpp"

namespace unitlat {

namespace detail {

Real ulp_bound(const Real& m) {
  Real r(Ball::kRadPrec);
  if (m.is_zero() || !m.is_finite()) return r;
  mpfr_set_ui_2exp(r.get(), 1, m.exponent() - static_cast<long>(m.prec()), MPFR_RNDU);
  return r;
}

Real rad_add(const Real& a, const Real& b) {
  Real r(Ball::kRadPrec);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real rad_mul(const Real& a, const Real& b) {
  Real r(Ball::kRadPrec);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real abs_up(const Real& x) {
  Real r(Ball::kRadPrec);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

Real abs_down(const Real& x) {
  Real r(Ball::kRadPrec);
  mpfr_abs(r.get(), x.get(), MPFR_RNDD);
  return r;
}

}  // namespace detail

using detail::abs_down;
using detail::abs_up;
using detail::rad_add;
using detail::rad_mul;
using detail::ulp_bound;

namespace {

Ball make(Real mid, Real rad, int ternary) {
  if (ternary != 0) rad = rad_add(rad, ulp_bound(mid));
  return Ball(mid, rad);
}

}  // namespace

Ball::Ball(Prec prec) : mid_(prec), rad_(kRadPrec) {}

Ball::Ball(const Real& mid) : mid_(mid), rad_(kRadPrec) {}

Ball::Ball(const Real& mid, const Real& rad) : mid_(mid), rad_(kRadPrec) {
  if (rad.sign() < 0) fail(ErrorCode::DomainError, "negative ball radius");
  mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

Ball::Ball(long v, Prec prec) : mid_(v, prec), rad_(kRadPrec) {
  if (mpfr_cmp_si(mid_.get(), v) != 0) rad_ = ulp_bound(mid_);
}

Ball Ball::from_rational(const Rational& q, Prec prec) {
  Real m(prec);
  int t = mpfr_set_q(m.get(), q.get_mpq_t(), MPFR_RNDN);
  return make(std::move(m), Real(kRadPrec), t);
}

Ball Ball::from_integer(const Integer& z, Prec prec) {
  Real m(prec);
  int t = mpfr_set_z(m.get(), z.get_mpz_t(), MPFR_RNDN);
  return make(std::move(m), Real(kRadPrec), t);
}

Ball Ball::from_double(double v, Prec prec) {
  Real m(prec);
  int t = mpfr_set_d(m.get(), v, MPFR_RNDN);
  return make(std::move(m), Real(kRadPrec), t);
}

Ball Ball::pi(Prec prec) {
  Real m(prec);
  int t = mpfr_const_pi(m.get(), MPFR_RNDN);
  return make(std::move(m), Real(kRadPrec), t);
}

Ball Ball::log2(Prec prec) {
  Real m(prec);
  int t = mpfr_const_log2(m.get(), MPFR_RNDN);
  return make(std::move(m), Real(kRadPrec), t);
}

Real Ball::lower() const {
  Real r(prec());
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Real Ball::upper() const {
  Real r(prec());
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

Real Ball::mag() const { return rad_add(abs_up(mid_), rad_); }

Real Ball::mig() const {
  Real r(kRadPrec);
  mpfr_sub(r.get(), abs_down(mid_).get(), rad_.get(), MPFR_RNDD);
  if (r.sign() < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool Ball::is_positive() const { return lower().sign() > 0; }
bool Ball::is_negative() const { return upper().sign() < 0; }

bool Ball::contains(const Rational& q) const {
  Rational d = mid_.to_rational() - q;
  return abs(d) <= rad_.to_rational();
}

bool Ball::contains(const Real& x) const { return contains(x.to_rational()); }

bool Ball::overlaps(const Ball& o) const {
  Prec p = std::max(prec(), o.prec()) + 8;
  Real d(p);
  mpfr_sub(d.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  Real dd = abs_down(d);
  Real s = rad_add(rad_add(rad_, o.rad_), ulp_bound(d));
  return dd <= s;
}

double Ball::rad_log2() const {
  if (rad_.is_zero()) return -1e9;
  Real l(kRadPrec);
  mpfr_log2(l.get(), rad_.get(), MPFR_RNDU);
  return l.to_double();
}

Ball& Ball::add_error(const Real& err) {
  rad_ = rad_add(rad_, abs_up(err));
  return *this;
}

Ball Ball::with_prec(Prec p) const {
  Real m(p);
  int t = mpfr_set(m.get(), mid_.get(), MPFR_RNDN);
  return make(std::move(m), rad_, t);
}

std::string Ball::to_string(int digits) const {
  return mid_.to_string(digits) + " +/- " + rad_.to_string(6);
}

Ball& Ball::operator+=(const Ball& o) { return *this = *this + o; }
Ball& Ball::operator-=(const Ball& o) { return *this = *this - o; }
Ball& Ball::operator*=(const Ball& o) { return *this = *this * o; }
Ball& Ball::operator/=(const Ball& o) { return *this = *this / o; }

Ball operator-(const Ball& a) { return Ball(-a.mid_, a.rad_); }

Ball operator+(const Ball& a, const Ball& b) {
  Real m(std::max(a.prec(), b.prec()));
  int t = mpfr_add(m.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return make(std::move(m), rad_add(a.rad_, b.rad_), t);
}

Ball operator-(const Ball& a, const Ball& b) {
  Real m(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(m.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return make(std::move(m), rad_add(a.rad_, b.rad_), t);
}

Ball operator*(const Ball& a, const Ball& b) {
  Real m(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(m.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Real r(Ball::kRadPrec);
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    r = rad_add(rad_mul(abs_up(a.mid_), b.rad_), rad_mul(abs_up(b.mid_), a.rad_));
    r = rad_add(r, rad_mul(a.rad_, b.rad_));
  }
  return make(std::move(m), std::move(r), t);
}

Ball operator/(const Ball& a, const Ball& b) {
  Real den(Ball::kRadPrec);
  mpfr_sub(den.get(), abs_down(b.mid_).get(), b.rad_.get(), MPFR_RNDD);
  if (den.sign() <= 0) fail(ErrorCode::DomainError, "division by a ball containing zero");
  Real m(std::max(a.prec(), b.prec()));
  int t = mpfr_div(m.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Real r(Ball::kRadPrec);
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    // |a/b - am/bm| <= (ra + |am/bm| rb) / (|bm| - rb)
    Real ratio(Ball::kRadPrec);
    mpfr_div(ratio.get(), abs_up(a.mid_).get(), abs_down(b.mid_).get(), MPFR_RNDU);
    r = rad_add(a.rad_, rad_mul(ratio, b.rad_));
    mpfr_div(r.get(), r.get(), den.get(), MPFR_RNDU);
  }
  return make(std::move(m), std::move(r), t);
}

Ball operator*(const Ball& a, long b) {
  Real m(a.prec());
  int t = mpfr_mul_si(m.get(), a.mid_.get(), b, MPFR_RNDN);
  Real r(Ball::kRadPrec);
  mpfr_mul_ui(r.get(), a.rad_.get(), static_cast<unsigned long>(b < 0 ? -b : b), MPFR_RNDU);
  return make(std::move(m), std::move(r), t);
}

Ball operator*(const Ball& a, const Rational& b) {
  return a * Ball::from_rational(b, a.prec());
}

Ball operator/(const Ball& a, long b) {
  if (b == 0) fail(ErrorCode::DomainError, "division by zero");
  Real m(a.prec());
  int t = mpfr_div_si(m.get(), a.mid_.get(), b, MPFR_RNDN);
  Real r(Ball::kRadPrec);
  mpfr_div_ui(r.get(), a.rad_.get(), static_cast<unsigned long>(b < 0 ? -b : b), MPFR_RNDU);
  return make(std::move(m), std::move(r), t);
}

Ball abs(const Ball& x) { return x.mid().sign() < 0 ? -x : x; }

Ball sqr(const Ball& x) { return x * x; }

Ball sqrt(const Ball& x) {
  Real lo = x.lower();
  if (lo.sign() <= 0) {
    if (x.is_exact() && lo.is_zero()) return Ball(x.prec());
    Real hi = x.upper();
    if (hi.sign() < 0) fail(ErrorCode::DomainError, "square root of a negative ball");
    // enclosure of sqrt on [0, hi]
    Real s(x.prec());
    mpfr_sqrt(s.get(), hi.get(), MPFR_RNDU);
    Real half(x.prec());
    mpfr_div_2ui(half.get(), s.get(), 1, MPFR_RNDU);
    return Ball(half, half);
  }
  Real m(x.prec());
  int t = mpfr_sqrt(m.get(), x.mid().get(), MPFR_RNDN);
  Real r(Ball::kRadPrec);
  if (!x.rad().is_zero()) {
    Real a(Ball::kRadPrec), b(Ball::kRadPrec), lo64(Ball::kRadPrec);
    mpfr_set(lo64.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(a.get(), lo64.get(), MPFR_RNDD);
    mpfr_set(b.get(), x.mid().get(), MPFR_RNDD);
    mpfr_sqrt(b.get(), b.get(), MPFR_RNDD);
    mpfr_add(a.get(), a.get(), b.get(), MPFR_RNDD);
    mpfr_div(r.get(), x.rad().get(), a.get(), MPFR_RNDU);
  }
  return make(std::move(m), std::move(r), t);
}

Ball log(const Ball& x) {
  Real lo = x.lower();
  if (lo.sign() <= 0) fail(ErrorCode::DomainError, "logarithm of a ball not certified positive");
  Real m(x.prec());
  int t = mpfr_log(m.get(), x.mid().get(), MPFR_RNDN);
  Real r(Ball::kRadPrec);
  if (!x.rad().is_zero()) {
    Real lo64(Ball::kRadPrec);
    mpfr_set(lo64.get(), lo.get(), MPFR_RNDD);
    mpfr_div(r.get(), x.rad().get(), lo64.get(), MPFR_RNDU);
  }
  return make(std::move(m), std::move(r), t);
}

Ball exp(const Ball& x) {
  Real m(x.prec());
  int t = mpfr_exp(m.get(), x.mid().get(), MPFR_RNDN);
  Real r(Ball::kRadPrec);
  if (!x.rad().is_zero()) {
    Real e(Ball::kRadPrec), d(Ball::kRadPrec);
    mpfr_exp(e.get(), x.mid().get(), MPFR_RNDU);
    mpfr_expm1(d.get(), x.rad().get(), MPFR_RNDU);
    r = rad_mul(e, d);
  }
  return make(std::move(m), std::move(r), t);
}

Ball pow(const Ball& x, unsigned long e) {
  Ball result(1, x.prec());
  Ball base = x;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Ball root(const Ball& x, unsigned long n) {
  if (n == 0) fail(ErrorCode::DomainError, "zeroth root");
  if (n == 1) return x;
  return exp(log(x) / static_cast<long>(n));
}

Ball hull(const Ball& a, const Ball& b) {
  Prec p = std::max(a.prec(), b.prec());
  Real lo = min(a.lower(), b.lower()).with_prec(p, MPFR_RNDD);
  Real hi = max(a.upper(), b.upper()).with_prec(p, MPFR_RNDU);
  Real m(p);
  mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  Real r1(Ball::kRadPrec), r2(Ball::kRadPrec);
  mpfr_sub(r1.get(), hi.get(), m.get(), MPFR_RNDU);
  mpfr_sub(r2.get(), m.get(), lo.get(), MPFR_RNDU);
  return Ball(m, max(r1, r2));
}

}  // namespace unitlat
