#pragma once

#include <string>
#include <vector>

#include "unitlat/group_algebra.hpp"
#include "unitlat/log_lattice.hpp"
#include "unitlat/number_field.hpp"
#include "unitlat/perm_group.hpp"

namespace unitlat {

inline const Integer kDefaultDenomBound{1000000};

// Automorphism group of a totally real Galois field. group.element(k) is the
// permutation P_k of the embedding coordinates with Log(sigma_k u) = P_k Log(u),
// where (P v)_i = v_{P^-1(i)}; images[k] = sigma_k(x). k -> P_k is a
// homomorphism, so the group algebra of `group` acts on log vectors.
struct GaloisAction {
  NumberField field;
  PermGroup group;
  std::vector<FieldElement> images;
  Integer denom_bound;  // bound under which the images were reconstructed

  size_t order() const { return images.size(); }
  FieldElement apply(size_t k, const FieldElement& u) const { return u.substitute(images[k]); }
  BallVector act(size_t k, const BallVector& v) const;
  // sum_k a_k P_k v for a full coefficient vector a
  BallVector act(const RationalVector& a, const BallVector& v) const;
  Subgroup subgroup(const std::vector<std::string>& cycle_generators, std::string name = "") const;
};

// Recovers every automorphism x -> q(x) by integer relations on
// (1, t_0, ..., t_0^(n-1), t_j) and verifies p(q(x)) = 0 mod p exactly.
// The bound escalates once to denom_bound^2 before NotGalois is raised.
GaloisAction recover_galois_action(const NumberField& k, Prec prec, const Integer& denom_bound = kDefaultDenomBound);

struct WeakMinkowskiCheck {
  bool is_weak_minkowski = false;
  int rank = 0;  // dim span {Log(g u)}
};

// The rank is certified from both sides: a positive Gram determinant for the
// independent orbit vectors and an exact multiplicative relation
// prod (g u)^(e_g) = +-1 for each of the others.
WeakMinkowskiCheck weak_minkowski_check(const GaloisAction& a, const FieldElement& u, Prec prec);

struct WeakMinkowskiUnit {
  FieldElement unit;
  IntVector exponents;  // unit = prod units[i]^exponents[i]
};

// Searches products of the given units with |e_i| <= effort by increasing
// total degree. Throws RankDeficient when the units have rank below n - 1
// and SearchExhausted when no product in the box qualifies.
WeakMinkowskiUnit weak_minkowski_search(const GaloisAction& a, const std::vector<FieldElement>& units, int effort,
                                        Prec prec);

}  // namespace unitlat
