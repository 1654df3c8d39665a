#pragma once

#include <vector>

#include "unitlat/gram.hpp"

namespace unitlat {

struct NormedVector {
  IntVector coords;  // coefficients w.r.t. the input basis
  Ball norm;         // certified enclosure of x^T g x
};

struct ShortVectors {
  Ball minimum;
  std::vector<IntVector> vectors;  // realize the minimum, one per sign pair
  bool truncated = false;
};

constexpr size_t kDefaultEnumerationBudget = 50'000'000;

// All nonzero x (one per +/- pair, first nonzero coordinate positive) with
// x^T g x <= bound, up to ball ambiguity at the boundary. Vectors are
// returned sorted by norm midpoint.
std::vector<NormedVector> vectors_up_to(const GramMatrix& g, const Real& bound, size_t max_count,
                                        size_t budget = kDefaultEnumerationBudget);

ShortVectors shortest_vectors(const GramMatrix& g, size_t count_bound,
                              size_t budget = kDefaultEnumerationBudget);

}  // namespace unitlat
