#include "unitlat/complex.hpp"

#include "unitlat/error.hpp"

namespace unitlat {

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }

Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.norm2();
  if (d.is_zero()) fail(ErrorCode::DomainError, "complex division by zero");
  return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
Complex operator*(const Complex& a, long b) { return Complex(a.re * b, a.im * b); }

Complex polar(const Real& r, const Real& theta) { return Complex(r * cos(theta), r * sin(theta)); }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex(z.prec());
  Real r = z.abs();
  Real a = sqrt((r + abs(z.re)) / 2);
  if (z.re.sign() >= 0) return Complex(a, z.im / (a * 2));
  Real b = z.im.sign() < 0 ? -a : a;
  return Complex(abs(z.im) / (a * 2), b);
}

Ball ComplexBall::abs() const {
  Real m(prec());
  int t = mpfr_hypot(m.get(), re_.mid().get(), im_.mid().get(), MPFR_RNDN);
  Real r = detail::rad_add(re_.rad(), im_.rad());
  if (t != 0) r = detail::rad_add(r, detail::ulp_bound(m));
  return Ball(m, r);
}

Real ComplexBall::mag() const { return abs().mag(); }
Real ComplexBall::mig() const { return abs().mig(); }

std::string ComplexBall::to_string(int digits) const {
  return "(" + re_.to_string(digits) + ") + i(" + im_.to_string(digits) + ")";
}

ComplexBall operator-(const ComplexBall& a) { return ComplexBall(-a.re_, -a.im_); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  if (b.is_real()) return ComplexBall(a.re_ * b.re_, a.im_ * b.re_);
  if (a.is_real()) return ComplexBall(a.re_ * b.re_, a.re_ * b.im_);
  return ComplexBall(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  if (b.is_real()) return ComplexBall(a.re_ / b.re_, a.im_ / b.re_);
  Ball d = b.norm2();
  return ComplexBall((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

ComplexBall operator*(const ComplexBall& a, const Ball& b) { return ComplexBall(a.re_ * b, a.im_ * b); }

}  // namespace unitlat
