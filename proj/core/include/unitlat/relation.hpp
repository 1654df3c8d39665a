#pragma once

#include <vector>

#include "unitlat/linalg.hpp"

namespace unitlat {

enum class RelationStatus { Found, NoneBelow };

const char* to_string(RelationStatus s);

struct RelationResult {
  RelationStatus status = RelationStatus::NoneBelow;
  // Found: r with |r|_inf <= coeff_bound and |r . x| < 2^(-prec/4);
  // first nonzero entry positive.
  IntVector relation;
  Ball residual;
  // NoneBelow: every exact relation has |r|_2 > bound.
  Real bound;
  Prec prec = 0;
};

// Integer relation detection by LLL on [I | round(N x)], N = 2^(prec/2).
// Throws InsufficientPrecision when neither a relation nor a lower bound
// >= coeff_bound can be certified at this precision.
RelationResult integer_relation(const std::vector<Ball>& values, const Integer& coeff_bound, Prec prec);

struct PslqResult {
  bool found = false;
  IntVector relation;
  // Lower bound on the Euclidean norm of any relation (heuristic at
  // floating precision).
  Real norm_bound;
  size_t iterations = 0;
};

// PSLQ at MPFR precision prec, used as an independent cross-check.
PslqResult pslq(const std::vector<Ball>& values, Prec prec, const Integer& coeff_bound,
                size_t max_iterations = 100000);

}  // namespace unitlat
