#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitlat/ball.hpp"
#include "unitlat/complex.hpp"
#include "unitlat/real.hpp"

namespace unitlat {

// Dense univariate polynomial over Q, coefficients in ascending order.
// Trailing zeros are stripped so the leading coefficient is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int k);
  static RationalPoly x() { return monomial(1, 1); }
  // Accepts e.g. "x^3 - 2*x + 1/2".
  static RationalPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_integral() const;

  RationalPoly monic() const;
  RationalPoly derivative() const;
  RationalPoly compose(const RationalPoly& q) const;

  Rational eval(const Rational& x) const;
  Ball eval(const Ball& x) const;
  ComplexBall eval(const ComplexBall& x) const;
  Complex eval(const Complex& x) const;
  // p(x) and p'(x) by one Horner pass.
  std::pair<Complex, Complex> eval_with_derivative(const Complex& x) const;
  std::pair<ComplexBall, ComplexBall> eval_with_derivative(const ComplexBall& x) const;

  std::string to_string(std::string_view var = "x") const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const Rational& b);
  friend RationalPoly operator%(const RationalPoly& a, const RationalPoly& b);

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws on division by zero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
// Monic gcd (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
bool is_squarefree(const RationalPoly& p);
// Scales p to a primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const RationalPoly& p);
std::vector<Rational> rational_roots(const RationalPoly& p);
// outer(inner(x)) mod m
RationalPoly compose_mod(const RationalPoly& outer, const RationalPoly& inner, const RationalPoly& m);

}  // namespace unitlat
