#include "unitlat/number_field.hpp"

#include <algorithm>
#include <functional>

#include "unitlat/error.hpp"

namespace unitlat {

namespace {

// Searches for a factor of degree k <= 3 by combining root enclosures:
// a * prod_{i in S}(x - r_i) must have integer coefficients when p = a *
// prod(x - r_i) splits over Z with that factor.
bool has_small_factor(const RationalPoly& p, const std::vector<Root>& roots, int max_k) {
  std::vector<Integer> c = primitive_integer_coeffs(p);
  Integer lead = c.back();
  RationalPoly pz(std::vector<Rational>(c.begin(), c.end()));
  int n = p.degree();
  Prec prec = roots[0].value.prec();
  std::vector<int> idx;
  std::function<bool(int, int)> rec = [&](int start, int k) -> bool {
    if (static_cast<int>(idx.size()) == k) {
      std::vector<ComplexBall> coeff{ComplexBall(Ball::from_integer(lead, prec))};
      for (int i : idx) {
        const ComplexBall& r = roots[static_cast<size_t>(i)].value;
        std::vector<ComplexBall> next(coeff.size() + 1, ComplexBall(prec));
        for (size_t d = 0; d < coeff.size(); ++d) {
          next[d + 1] = next[d + 1] + coeff[d];
          next[d] = next[d] - coeff[d] * r;
        }
        coeff = std::move(next);
      }
      std::vector<Rational> q;
      for (const auto& z : coeff) {
        if (!z.im().contains_zero()) return false;
        Integer nearest = z.re().mid().round_to_integer();
        if (!z.re().contains(Rational(nearest))) return false;
        q.emplace_back(nearest);
      }
      RationalPoly cand(q);
      return divmod(pz, cand).second.is_zero();
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      if (rec(i + 1, k)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= max_k; ++k) {
    idx.clear();
    if (rec(0, k)) return true;
  }
  return false;
}

}  // namespace

NumberField NumberField::build(const RationalPoly& p, Prec prec) {
  if (p.degree() < 1) fail(ErrorCode::InvalidArgument, "defining polynomial must have degree >= 1");
  if (!p.is_monic() || !p.is_integral())
    fail(ErrorCode::InvalidArgument, "defining polynomial must be monic with integer coefficients");
  NumberField k;
  k.poly_ = std::make_shared<const RationalPoly>(p);
  k.prec_ = prec;
  std::vector<Root> roots = poly_roots(p, prec);
  int n = p.degree();
  if (n > 1) {
    if (!rational_roots(p).empty())
      fail(ErrorCode::ReducibleDetected, "polynomial has a rational root: " + p.to_string());
    if (has_small_factor(p, roots, std::min(3, n / 2)))
      fail(ErrorCode::ReducibleDetected, "polynomial has a factor of degree <= 3: " + p.to_string());
  }
  k.irreducible_certified_ = n <= 7;
  for (const auto& r : roots) {
    k.roots_.push_back(r.value);
    if (r.real) {
      ++k.r_;
      k.emb_.push_back(r.value);
    }
  }
  std::vector<ComplexBall> upper;
  for (const auto& r : roots)
    if (!r.real && r.value.im().mid().sign() > 0) upper.push_back(r.value);
  k.s_ = static_cast<int>(upper.size());
  if (k.r_ + 2 * k.s_ != n) fail(ErrorCode::PrecisionExhausted, "conjugate pairing of roots failed");
  for (auto& z : upper) k.emb_.push_back(z);
  return k;
}

NumberField NumberField::at_precision(Prec prec) const {
  if (prec == prec_) return *this;
  return build(*poly_, prec);
}

FieldElement NumberField::element(const RationalVector& coords) const {
  if (static_cast<int>(coords.size()) > degree())
    fail(ErrorCode::DimensionMismatch, "too many coordinates for field of degree " + std::to_string(degree()));
  return FieldElement(poly_, RationalPoly(coords));
}

FieldElement NumberField::element(const RationalPoly& v) const { return FieldElement(poly_, v); }
FieldElement NumberField::generator() const { return FieldElement(poly_, RationalPoly::x()); }
FieldElement NumberField::one() const { return FieldElement(poly_, RationalPoly::constant(1)); }

FieldElement::FieldElement(std::shared_ptr<const RationalPoly> modulus, const RationalPoly& value)
    : mod_(std::move(modulus)), value_(value % *mod_) {}

RationalVector FieldElement::coords() const {
  RationalVector c(static_cast<size_t>(degree()), Rational(0));
  for (int i = 0; i <= value_.degree(); ++i) c[static_cast<size_t>(i)] = value_.coeff(i);
  return c;
}

RationalMatrix FieldElement::multiplication_matrix() const {
  size_t n = static_cast<size_t>(degree());
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  RationalPoly cur = value_;
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) m[i][j] = cur.coeff(static_cast<int>(i));
    cur = (cur * RationalPoly::x()) % *mod_;
  }
  return m;
}

RationalPoly char_poly(const RationalMatrix& a) {
  size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  for (size_t k = 1; k <= n; ++k) {
    RationalMatrix am = mul(a, m);
    for (size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    RationalMatrix prod = mul(a, m);
    Rational tr(0);
    for (size_t i = 0; i < n; ++i) tr += prod[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RationalPoly(std::move(c));
}

RationalPoly FieldElement::char_poly() const { return unitlat::char_poly(multiplication_matrix()); }

Rational FieldElement::norm() const { return det(multiplication_matrix()); }

Rational FieldElement::trace() const {
  RationalMatrix m = multiplication_matrix();
  Rational t(0);
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

bool FieldElement::is_integral() const { return char_poly().is_integral(); }

bool FieldElement::is_unit() const {
  if (!is_integral()) return false;
  Rational n = norm();
  return n == 1 || n == -1;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DomainError, "inverse of zero");
  RationalVector e(static_cast<size_t>(degree()), Rational(0));
  e[0] = 1;
  auto x = solve(multiplication_matrix(), e);
  if (!x) fail(ErrorCode::DomainError, "element is not invertible (modulus reducible?)");
  return FieldElement(mod_, RationalPoly(*x));
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement result(mod_, RationalPoly::constant(1));
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

FieldElement FieldElement::substitute(const FieldElement& image) const {
  return FieldElement(image.mod_, compose_mod(value_, image.value_, *image.mod_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return *a.mod_ == *b.mod_ && a.value_ == b.value_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.mod_, a.value_ + b.value_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.mod_, a.value_ - b.value_);
}

FieldElement operator-(const FieldElement& a) { return FieldElement(a.mod_, -a.value_); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.mod_, a.value_ * b.value_);
}

FieldElement operator*(const FieldElement& a, const Rational& b) { return FieldElement(a.mod_, a.value_ * b); }

}  // namespace unitlat
