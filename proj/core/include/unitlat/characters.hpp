#pragma once

#include <complex>
#include <vector>

#include "unitlat/linalg.hpp"
#include "unitlat/perm_group.hpp"

namespace unitlat {

// Complex character table in double precision, from a common eigenvector
// decomposition of the class multiplication matrices. Row 0 is the trivial
// character; rows are ordered by degree, then by real parts of the values.
struct CharacterTable {
  std::vector<std::vector<std::complex<double>>> values;  // [character][class]
  std::vector<int> degrees;
  // Galois orbits (rows whose sum is rational-valued), ordered by first row.
  std::vector<std::vector<size_t>> rational_orbits;

  size_t size() const { return degrees.size(); }
};

constexpr size_t kCharacterOrderBudget = 2000;

CharacterTable character_table(const PermGroup& g);

// Primitive central idempotent of Q[G] attached to a Galois orbit of
// characters, as coefficients per group element.
struct RationalIdempotent {
  RationalVector coeffs;
  std::vector<size_t> characters;  // rows of the character table
  int dimension = 0;               // dim e Q[G] = sum of chi(1)^2
};

// All primitive central idempotents, trivial first, verified exactly
// (e^2 = e, central, pairwise orthogonal, summing to 1). Throws
// ReconstructionFailed when the rounded coefficients fail verification.
std::vector<RationalIdempotent> rational_idempotents(const PermGroup& g);

// Multiplicity <Ind_H^G 1, chi> for every character row (exact integers).
std::vector<int> permutation_multiplicities(const PermGroup& g, const CharacterTable& t, const Subgroup& h);

}  // namespace unitlat
