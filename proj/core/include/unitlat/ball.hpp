#pragma once

#include <string>

#include "unitlat/real.hpp"

namespace unitlat {

// Midpoint-radius enclosure of a real number. The midpoint carries the
// working precision; the radius is a 64-bit value always rounded upward,
// so every operation returns a ball containing the exact result.
class Ball {
 public:
  static constexpr Prec kRadPrec = 64;

  explicit Ball(Prec prec = 53);
  explicit Ball(const Real& mid);
  Ball(const Real& mid, const Real& rad);
  Ball(long v, Prec prec);

  static Ball from_rational(const Rational& q, Prec prec);
  static Ball from_integer(const Integer& z, Prec prec);
  static Ball from_double(double v, Prec prec);
  static Ball pi(Prec prec);
  static Ball log2(Prec prec);

  const Real& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  Prec prec() const { return mid_.prec(); }

  Real lower() const;
  Real upper() const;
  // Upper bound for |x| and lower bound for |x| (zero when the ball meets 0).
  Real mag() const;
  Real mig() const;

  bool is_exact() const { return rad_.is_zero(); }
  bool is_positive() const;
  bool is_negative() const;
  bool is_nonzero() const { return is_positive() || is_negative(); }
  bool contains_zero() const { return !is_nonzero(); }
  bool contains(const Rational& q) const;
  bool contains(const Real& x) const;
  bool overlaps(const Ball& o) const;
  // Upper bound of log2(rad); -infinity reported as a large negative number.
  double rad_log2() const;

  Ball& add_error(const Real& err);
  Ball with_prec(Prec prec) const;
  std::string to_string(int digits = 0) const;

  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Ball& o);
  Ball& operator/=(const Ball& o);

  friend Ball operator-(const Ball& a);
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, long b);
  friend Ball operator*(const Ball& a, const Rational& b);
  friend Ball operator/(const Ball& a, long b);

 private:
  Real mid_;
  Real rad_;
};

Ball abs(const Ball& x);
Ball sqr(const Ball& x);
Ball sqrt(const Ball& x);
Ball log(const Ball& x);
Ball exp(const Ball& x);
Ball pow(const Ball& x, unsigned long e);
// x^(1/n) for x > 0
Ball root(const Ball& x, unsigned long n);
// Ball covering both arguments.
Ball hull(const Ball& a, const Ball& b);

namespace detail {
// Upper bound of 2^(exponent(m) - prec(m)), the rounding error of an
// inexact round-to-nearest operation producing m.
Real ulp_bound(const Real& m);
Real rad_add(const Real& a, const Real& b);
Real rad_mul(const Real& a, const Real& b);
Real abs_up(const Real& x);
Real abs_down(const Real& x);
}  // namespace detail

}  // namespace unitlat
