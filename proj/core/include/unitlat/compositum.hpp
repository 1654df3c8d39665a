#pragma once

#include "unitlat/perm_group.hpp"

namespace unitlat {

// Dimensions for the decomposition V = R[S] + W_1perp + W_2perp of
// V = (N_H1 + N_H2) R[G], where T = <H1, H2>, S = G/T and
// W_iperp = (1 - e_{T_i}) R[G/H_i].
struct CompositumDims {
  size_t v = 0;
  size_t r_s = 0;
  size_t w1_perp = 0;
  size_t w2_perp = 0;
  // dimensions measured inside R_Q[G]: e_T V and (1 - e_T) N_Hi R
  size_t measured_r_s = 0;
  size_t measured_w1 = 0;
  size_t measured_w2 = 0;
  bool verified = false;  // v == r_s + w1_perp + w2_perp and measured == predicted
};

// Requires H1, H2 normal with trivial intersection (SetupViolated otherwise).
CompositumDims compositum_decomposition(const PermGroup& g, const Subgroup& h1, const Subgroup& h2);

}  // namespace unitlat
