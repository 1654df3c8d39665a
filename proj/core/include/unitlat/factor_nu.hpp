#pragma once

#include <vector>

#include "unitlat/group_algebra.hpp"

namespace unitlat {

struct FactorNuResult {
  ComplexVector nu;  // mean-zero coefficients in C[G]
  Real residual;     // certified upper bound of max |nu bar(nu) - eta| in R_C[G]
  Real phase;        // rotation angle used to avoid the square-root branch cut
  size_t iterations = 0;
};

// nu in R_C[G] with nu * bar(nu) = eta, for eta bar-fixed and invertible.
// nu is the bar-fixed square root exp(-i phi/2) sqrt(exp(i phi) eta), the
// root taken by Denman-Beavers iteration in C[G] (the trivial isotype held
// at 1). Throws SingularBlock for non-invertible eta, ResidualTooLarge when
// the certified residual is not below 2^(-prec/2).
FactorNuResult factor_nu(const PermGroup& g, const ComplexVector& eta, Prec prec);

// Gram data of a vector w in C^degree under the permutation action of G:
// the matrix (<g_i w, g_j w>) on the basis B (bilinear, no conjugation).
ComplexMatrix gram_of_vector(const PermGroup& g, const ComplexVector& w);
// (P w)_i = w_{P^-1(i)}
ComplexVector act(const Perm& p, const ComplexVector& w);
// sum_g a_g (g w)
ComplexVector act(const PermGroup& g, const ComplexVector& a, const ComplexVector& w);
// Inverse in R_C[G] (mean-zero representatives).
ComplexVector inverse_r(const PermGroup& g, const ComplexVector& a);

struct GramPreimage {
  ComplexVector x;         // x = nu'' nu'^-1 w
  ComplexVector nu;        // nu'' nu'^-1
  Real residual;           // certified bound on max |Gr_x - b|
};

// Solves Gr_x = b for x in the R_C[G]-orbit of w. The form b is a matrix on
// the basis B; w must satisfy sum_g g w = 0.
GramPreimage solve_gram_preimage(const PermGroup& g, const ComplexMatrix& b, const ComplexVector& w, Prec prec);

}  // namespace unitlat
