#pragma once

#include "unitlat/gram.hpp"
#include "unitlat/linalg.hpp"

namespace unitlat {

struct LllResult {
  // reduced basis rows = transform * input rows (transform is unimodular)
  IntMatrix transform;
  GramMatrix gram;
};

struct LllBasisResult {
  IntMatrix transform;
  BallMatrix basis;
};

LllResult lll_reduce(const GramMatrix& g, double delta = 0.99);
LllBasisResult lll_reduce(const BallMatrix& basis, double delta = 0.99);

// LLL on an exact integer Gram matrix; returns the transform.
IntMatrix lll_reduce_integral_gram(const IntMatrix& gram, double delta = 0.99);

// Size reduction |mu_ij| <= 1/2 and the Lovasz condition at delta, checked
// in ball arithmetic with a relative slack of 2^-20.
bool is_lll_reduced(const BallMatrix& gram, double delta);

// Certified lower bound for min_i |b_i*|^2 (Gram-Schmidt norms).
Real gso_min_sqnorm_lower(const BallMatrix& gram);

}  // namespace unitlat
