#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace unitlat {

using Integer = mpz_class;
using Rational = mpq_class;
using Prec = mpfr_prec_t;

// Owning MPFR value. Every Real carries its own precision; binary
// operations produce a result at the larger of the two precisions.
class Real {
 public:
  explicit Real(Prec prec = 53);
  Real(long v, Prec prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_double(double v, Prec prec);
  static Real from_integer(const Integer& v, Prec prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_rational(const Rational& v, Prec prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real parse(std::string_view text, Prec prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pi(Prec prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pow2(long e, Prec prec);

  Prec prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // floor(log2|x|)+1 for nonzero x
  long exponent() const { return mpfr_get_exp(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  Rational to_rational() const;
  Integer round_to_integer() const;
  Integer floor_to_integer() const;
  std::string to_string(int digits = 0) const;

  Real with_prec(Prec prec, mpfr_rnd_t rnd = MPFR_RNDN) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator-(const Real& a);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace unitlat
