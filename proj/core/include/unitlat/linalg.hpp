#pragma once

#include <optional>
#include <vector>

#include "unitlat/ball.hpp"
#include "unitlat/complex.hpp"
#include "unitlat/real.hpp"

namespace unitlat {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using BallVector = std::vector<Ball>;
using BallMatrix = std::vector<BallVector>;
using ComplexVector = std::vector<Complex>;
using ComplexMatrix = std::vector<ComplexVector>;

// ---- exact rational linear algebra ----
RationalMatrix rational_identity(size_t n);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b);
RationalVector mul(const RationalMatrix& a, const RationalVector& v);
// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RationalMatrix& a);
size_t rank(RationalMatrix a);
// Basis of {x : a x = 0}.
std::vector<RationalVector> nullspace(RationalMatrix a, size_t ncols);
Rational det(RationalMatrix a);
RationalMatrix inverse(const RationalMatrix& a);
// Some solution of a x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);
// Indices of a maximal linearly independent subset of the given vectors,
// chosen greedily in order.
std::vector<size_t> independent_subset(const std::vector<RationalVector>& vectors);

// ---- integer matrices ----
IntMatrix int_identity(size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
Integer det(const IntMatrix& a);
RationalMatrix to_rational(const IntMatrix& a);
// Exact inverse of a unimodular matrix; throws when |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& a);

// ---- ball matrices ----
BallMatrix ball_matrix(const RationalMatrix& a, Prec prec);
BallMatrix ball_matrix(const IntMatrix& a, Prec prec);
BallMatrix transpose(const BallMatrix& a);
BallMatrix mul(const BallMatrix& a, const BallMatrix& b);
BallVector mul(const BallMatrix& a, const BallVector& v);
BallMatrix scale(const BallMatrix& a, const Ball& s);
// Enclosure of det(a); degenerates to a ball around zero when a pivot
// cannot be separated from zero.
Ball det(const BallMatrix& a);
// Solves a x = b; throws PrecisionExhausted when a pivot meets zero.
BallVector solve(const BallMatrix& a, const BallVector& b);
BallMatrix inverse(const BallMatrix& a);
// Certified positive definiteness via LDL^T with positive pivots.
bool is_positive_definite(const BallMatrix& a);
bool is_symmetric(const BallMatrix& a);
// Upper bound of max |a_ij - b_ij|.
Real max_abs_diff(const BallMatrix& a, const BallMatrix& b);
Real max_abs(const BallMatrix& a);
Prec min_prec(const BallMatrix& a);

// ---- complex (non-certified) ----
// Gaussian elimination with partial pivoting.
ComplexVector solve(ComplexMatrix a, ComplexVector b);

}  // namespace unitlat
