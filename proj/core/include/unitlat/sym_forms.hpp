#pragma once

#include <vector>

#include "unitlat/characters.hpp"
#include "unitlat/group_algebra.hpp"

namespace unitlat {

constexpr size_t kSymGOrderBudget = 500;

// Basis of Sym^G(R_Q[G]): trace forms Tr_eta for eta running over a basis
// of the bar-fixed subspace A_Q (mean-zero representatives).
struct SymGBasis {
  std::vector<RationalVector> etas;
  std::vector<RationalMatrix> forms;  // matrices on the basis B
  size_t dimension() const { return forms.size(); }
};

SymGBasis sym_g_space(const PermGroup& g);

// Exact symmetry and invariance under every generator.
bool is_invariant_form(const PermGroup& g, const RationalMatrix& f);
// Upper bound of max |L_s^T F L_s - F| over generators s (and asymmetry).
Real invariance_defect(const PermGroup& g, const BallMatrix& f);

// Coordinates of an invariant form in the SymGBasis (exact for rational
// forms, via independent rows of the basis for ball forms).
RationalVector sym_g_coordinates(const SymGBasis& basis, const RationalMatrix& f);
BallVector sym_g_coordinates(const SymGBasis& basis, const BallMatrix& f);

struct IsotypicBlock {
  size_t idempotent = 0;  // index in the idempotent list
  RationalMatrix basis;   // rows: R-coordinates spanning e R
  BallMatrix form;        // restriction of the form
};

struct IsotypicSplit {
  std::vector<IsotypicBlock> blocks;
  Real cross_mass;  // max |b(x, y)| over basis vectors of distinct blocks
};

// Restrictions of a G-invariant form to the isotypic components e R for the
// nontrivial rational idempotents. Throws InvarianceViolated when the
// cross-block mass or the invariance defect exceeds tol.
IsotypicSplit isotypic_split(const PermGroup& g, const BallMatrix& form,
                             const std::vector<RationalIdempotent>& idempotents, const Real& tol);

struct IsotypicDims {
  // multiplicity[pi][i] = <Ind_{H_i} 1, chi_pi> over nontrivial characters pi
  std::vector<std::vector<int>> multiplicity;
  std::vector<int> character_degree;
  // rational[O][i] = dim_Q e_O N_{H_i} R over nontrivial rational idempotents O
  std::vector<std::vector<int>> rational;
};

IsotypicDims isotypic_dims(const PermGroup& g, const std::vector<Subgroup>& subgroups);

// psi_i = det of the form restricted to the basis norm_ideal_basis(H_i).
// Throws AllZero when every psi_i vanishes.
std::vector<Rational> psi_map(const PermGroup& g, const RationalMatrix& form, const std::vector<Subgroup>& subgroups);
std::vector<Ball> psi_map(const PermGroup& g, const BallMatrix& form, const std::vector<Subgroup>& subgroups);

// b + (c - 1) b(e x, e y): the form with the e-isotype scaled by c.
RationalMatrix scale_isotype(const PermGroup& g, const RationalMatrix& form, const RationalIdempotent& e,
                             const Rational& c);

}  // namespace unitlat
