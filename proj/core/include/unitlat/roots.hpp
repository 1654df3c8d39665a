#pragma once

#include <optional>
#include <vector>

#include "unitlat/complex.hpp"
#include "unitlat/poly.hpp"

namespace unitlat {

struct Root {
  ComplexBall value;
  bool real = false;
};

// Certified isolation of all complex roots of a squarefree p. The balls
// are pairwise disjoint and each contains exactly one root. Real roots are
// flagged (their balls have exact zero imaginary part) and come first in
// ascending order; the remaining roots follow ordered by argument.
std::vector<Root> poly_roots(const RationalPoly& p, Prec prec);

// Unique rational with denominator <= denom_bound inside x, if any.
// Requires rad(x) < 1 / (2 denom_bound^2).
std::optional<Rational> rational_reconstruct(const Ball& x, const Integer& denom_bound);

// Rational with the smallest denominator in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace unitlat
