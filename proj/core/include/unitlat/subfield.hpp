#pragma once

#include "unitlat/galois.hpp"

namespace unitlat {

// Fixed field L^H = Q(gamma) with gamma = sum_{h in H} h(x^k) for the least
// k giving degree [G:H].
struct FixedField {
  NumberField field;       // defined by the exact minimal polynomial of gamma
  FieldElement generator;  // gamma as an element of L
  int power = 1;           // k

  // Image in L of an element of the fixed field.
  FieldElement to_ambient(const FieldElement& x) const { return x.substitute(generator); }
};

// Throws FixedFieldConstructionFailed when no k <= n works.
FixedField fixed_field(const GaloisAction& a, const Subgroup& h, Prec prec);

struct SubfieldNorm {
  FixedField fixed;
  FieldElement norm;          // prod_{h in H} h(u), in the power basis of gamma
  FieldElement ambient_norm;  // the same element in L
};

// Throws NotNormal when H is not normal in G.
SubfieldNorm norm_to_subfield(const GaloisAction& a, const Subgroup& h, const FieldElement& u, Prec prec);

// Rows alpha v for alpha running over a basis of N_H R_Q[G]; the rank
// [G:H] - 1 is certified by a positive Gram determinant, otherwise
// NotWeakMinkowski is raised.
BallMatrix subfield_log_basis(const GaloisAction& a, const Subgroup& h, const BallVector& v);

}  // namespace unitlat
