#pragma once

#include <memory>
#include <vector>

#include "unitlat/complex.hpp"
#include "unitlat/linalg.hpp"
#include "unitlat/poly.hpp"
#include "unitlat/roots.hpp"

namespace unitlat {

class FieldElement;

// Q[x]/(p) with certified embeddings. Real embeddings come first in
// ascending order, then one representative (positive imaginary part) per
// complex-conjugate pair ordered by argument.
class NumberField {
 public:
  static NumberField build(const RationalPoly& p, Prec prec);

  const RationalPoly& poly() const { return *poly_; }
  std::shared_ptr<const RationalPoly> poly_ptr() const { return poly_; }
  int degree() const { return poly_->degree(); }
  int r() const { return r_; }
  int s() const { return s_; }
  int unit_rank() const { return r_ + s_ - 1; }
  bool totally_real() const { return s_ == 0; }
  Prec prec() const { return prec_; }
  // r + s embedding roots.
  const std::vector<ComplexBall>& embeddings() const { return emb_; }
  // All n roots (reals, then complex by argument).
  const std::vector<ComplexBall>& roots() const { return roots_; }
  // False when irreducibility could only be partially checked (degree > 7).
  bool irreducibility_certified() const { return irreducible_certified_; }

  NumberField at_precision(Prec prec) const;

  FieldElement element(const RationalVector& coords) const;
  FieldElement element(const RationalPoly& v) const;
  FieldElement generator() const;
  FieldElement one() const;

 private:
  std::shared_ptr<const RationalPoly> poly_;
  int r_ = 0;
  int s_ = 0;
  Prec prec_ = 0;
  std::vector<ComplexBall> roots_;
  std::vector<ComplexBall> emb_;
  bool irreducible_certified_ = false;
};

// Element of Q[x]/(p) stored as its reduced representative.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const RationalPoly> modulus, const RationalPoly& value);

  const RationalPoly& value() const { return value_; }
  const RationalPoly& modulus() const { return *mod_; }
  std::shared_ptr<const RationalPoly> modulus_ptr() const { return mod_; }
  int degree() const { return mod_->degree(); }
  // Power-basis coordinates, length n.
  RationalVector coords() const;
  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }

  // Column j holds the coordinates of this * x^j.
  RationalMatrix multiplication_matrix() const;
  RationalPoly char_poly() const;
  Rational norm() const;
  Rational trace() const;
  bool is_integral() const;
  bool is_unit() const;

  FieldElement inverse() const;
  FieldElement pow(long e) const;
  // sigma(this) where sigma sends x to image (an element of some field
  // containing a root of this element's modulus).
  FieldElement substitute(const FieldElement& image) const;

  ComplexBall eval(const ComplexBall& z) const { return value_.eval(z); }
  Ball eval(const Ball& x) const { return value_.eval(x); }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& b);

 private:
  std::shared_ptr<const RationalPoly> mod_;
  RationalPoly value_;
};

// Faddeev-LeVerrier characteristic polynomial of a square rational matrix.
RationalPoly char_poly(const RationalMatrix& a);

}  // namespace unitlat
