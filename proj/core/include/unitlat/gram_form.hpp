#pragma once

#include "unitlat/galois.hpp"
#include "unitlat/log_lattice.hpp"

namespace unitlat {

// Gr_v(alpha, beta) = <alpha v, beta v> on a rational basis of R_Q[G].
struct GramForm {
  BallVector v;
  RationalMatrix basis;  // rows: R-coordinates of the basis elements
  BallMatrix vectors;    // rows: alpha v
  BallMatrix matrix;
  Real invariance_defect;  // max |Gr(g a, g b) - Gr(a, b)| over generators, on the standard basis
};

// An empty basis selects the standard basis B = {g_0, ..., g_(m-2)}.
// Throws NotWeakMinkowski when the form on B is not certified positive
// definite, InvarianceViolated when the defect is not below 2^(-prec/2).
GramForm gram_form(const GaloisAction& a, const BallVector& v, const RationalMatrix& basis = {});

struct ChangeOfBasis {
  RationalMatrix a;  // A Gr_v A^T = b_K
  Real residual;     // certified max |A Gr_v A^T - b_K|
};

// Expresses the lattice basis in the spanning set {alpha v}: the real
// solution is rationally reconstructed under denom_bound and re-verified.
// Throws BallTooWide, ReconstructionFailed.
ChangeOfBasis change_of_basis_certificate(const LogLattice& lk, const GramForm& form,
                                          const Integer& denom_bound = kDefaultDenomBound);

}  // namespace unitlat
