#pragma once

#include <string>

#include "unitlat/gram.hpp"

namespace unitlat {

enum class IsometryVerdict { Isometric, NotIsometric, Inconclusive };
enum class SimilarityVerdict { Similar, NotSimilar, Inconclusive };

const char* to_string(IsometryVerdict v);
const char* to_string(SimilarityVerdict v);

struct IsometryResult {
  IsometryVerdict verdict = IsometryVerdict::Inconclusive;
  // Isometric: integer T with T^T g1 T = g2 (within tol).
  IntMatrix witness;
  // NotIsometric: name of the separating invariant and its two values.
  std::string invariant;
  std::string value1;
  std::string value2;
  size_t nodes = 0;
};

struct SimilarityResult {
  SimilarityVerdict verdict = SimilarityVerdict::Inconclusive;
  Ball lambda;  // g1 ~ lambda * g2
  IntMatrix witness;
  std::string invariant;
  std::string value1;
  std::string value2;
  size_t nodes = 0;
};

constexpr size_t kDefaultIsometryBudget = 1'000'000;

IsometryResult isometry_test(const GramMatrix& g1, const GramMatrix& g2, const Real& tol,
                             size_t budget = kDefaultIsometryBudget);

// lambda = (det g1 / det g2)^(1/n); then isometry of g1 and lambda g2.
SimilarityResult similarity_test(const GramMatrix& g1, const GramMatrix& g2, const Real& tol,
                                 size_t budget = kDefaultIsometryBudget);

// Upper bound of max |(T^T g1 T - g2)_ij|.
Real isometry_residual(const GramMatrix& g1, const GramMatrix& g2, const IntMatrix& t);

}  // namespace unitlat
