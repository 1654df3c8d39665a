#pragma once

#include <string>

#include "unitlat/ball.hpp"
#include "unitlat/real.hpp"

namespace unitlat {

// Plain MPFR complex number (no error bound), used for iterative solvers
// whose output is certified separately.
struct Complex {
  Real re;
  Real im;

  explicit Complex(Prec prec = 53) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long v, Prec prec) : re(v, prec), im(prec) {}

  Prec prec() const { return re.prec(); }
  Complex conj() const { return Complex(re, -im); }
  Real norm2() const { return re * re + im * im; }
  Real abs() const { return hypot(re, im); }
  Real arg() const { return atan2(im, re); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Complex with_prec(Prec p) const { return Complex(re.with_prec(p), im.with_prec(p)); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator*(const Complex& a, long b);
Complex polar(const Real& r, const Real& theta);
Complex sqrt(const Complex& z);

// Rectangular complex ball.
class ComplexBall {
 public:
  explicit ComplexBall(Prec prec = 53) : re_(prec), im_(prec) {}
  explicit ComplexBall(const Ball& re) : re_(re), im_(re.prec()) {}
  ComplexBall(const Ball& re, const Ball& im) : re_(re), im_(im) {}
  explicit ComplexBall(const Complex& z) : re_(z.re), im_(z.im) {}

  const Ball& re() const { return re_; }
  const Ball& im() const { return im_; }
  Prec prec() const { return re_.prec(); }
  Complex mid() const { return Complex(re_.mid(), im_.mid()); }

  ComplexBall conj() const { return ComplexBall(re_, -im_); }
  // Enclosure of |z| via |mid| +/- (rad_re + rad_im).
  Ball abs() const;
  Ball norm2() const { return sqr(re_) + sqr(im_); }
  Real mag() const;
  Real mig() const;
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool is_real() const { return im_.is_exact() && im_.mid().is_zero(); }
  std::string to_string(int digits = 0) const;

  friend ComplexBall operator-(const ComplexBall& a);
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const Ball& b);

 private:
  Ball re_;
  Ball im_;
};

}  // namespace unitlat
