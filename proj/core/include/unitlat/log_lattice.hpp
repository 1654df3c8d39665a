#pragma once

#include <vector>

#include "unitlat/gram.hpp"
#include "unitlat/number_field.hpp"

namespace unitlat {

// Log(u) = (log|u(t_1)|, ..., log|u(t_r)|, 2 log|u(tau_1)|, ...) in R^(r+s).
// Throws NotAUnit when u is not an algebraic-integer unit.
BallVector log_embed(const NumberField& k, const FieldElement& u, Prec prec);

struct LogLattice {
  std::vector<FieldElement> units;     // the selected independent units
  std::vector<size_t> selected;        // their indices in the input list
  BallMatrix basis;                    // rows: log vectors
  GramMatrix gram;
  int r = 0;
  int s = 0;
  Prec prec = 0;

  size_t rank() const { return basis.size(); }
};

// Selects a maximal independent subset (greedy, input order) certified by
// Gram determinants, doubling precision up to four times on ambiguity.
// Throws RankDeficient when the rank is below r + s - 1.
LogLattice log_lattice(const NumberField& k, const std::vector<FieldElement>& units, Prec prec);

// sqrt(det Gram / (r + s)); equals 1 for rank 0.
Ball regulator(const LogLattice& l);

struct SublatticeInclusion {
  LogLattice image;     // iota(Lambda_K) inside the log space of N
  int index = 0;        // [N : K]
  Rational det_ratio;   // [N:K]^rank, exact
  Ball measured_ratio;  // det Gram(image) / det Gram(Lambda_K)
  Real max_deviation;   // max |Gram(image) - [N:K] Gram(Lambda_K)|
  bool scaling_certified = false;
};

// Embeds Lambda_K into the log space of N via x -> gen_image.
SublatticeInclusion include_sublattice(const NumberField& k, const NumberField& n, const FieldElement& gen_image,
                                       const LogLattice& lk, Prec prec);

}  // namespace unitlat
