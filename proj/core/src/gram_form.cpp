#include "unitlat/gram_form.hpp"

#include "unitlat/error.hpp"
#include "unitlat/roots.hpp"
#include "unitlat/sym_forms.hpp"

namespace unitlat {

namespace {

BallMatrix gram_of_rows(const BallMatrix& rows, Prec prec) {
  BallMatrix g(rows.size(), BallVector(rows.size(), Ball(prec)));
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = a; b < rows.size(); ++b) {
      Ball s(prec);
      for (size_t c = 0; c < rows[a].size(); ++c) s += rows[a][c] * rows[b][c];
      g[a][b] = s;
      g[b][a] = s;
    }
  return g;
}

}  // namespace

GramForm gram_form(const GaloisAction& a, const BallVector& v, const RationalMatrix& basis) {
  size_t m = a.order();
  if (v.size() != static_cast<size_t>(a.field.degree()))
    fail(ErrorCode::DimensionMismatch, "log vector length differs from the field degree");
  Prec prec = v.empty() ? 53 : v[0].prec();
  GramForm f;
  f.v = v;
  BallMatrix standard;
  for (size_t k = 0; k + 1 < m; ++k) standard.push_back(a.act(k, v));
  BallMatrix std_form = gram_of_rows(standard, prec);
  if (m > 1 && !is_positive_definite(std_form))
    fail(ErrorCode::NotWeakMinkowski, "orbit of the log vector does not span the log space");
  f.invariance_defect = invariance_defect(a.group, std_form);
  Real tol = Real::pow2(-static_cast<long>(prec / 2), Ball::kRadPrec);
  if (!(f.invariance_defect < tol)) fail(ErrorCode::InvarianceViolated, "Gram form is not G-invariant");
  if (basis.empty()) {
    f.basis = rational_identity(m - 1);
    f.vectors = std::move(standard);
    f.matrix = std::move(std_form);
    return f;
  }
  f.basis = basis;
  for (const auto& row : basis) {
    if (row.size() + 1 != m) fail(ErrorCode::DimensionMismatch, "basis rows must have |G| - 1 coordinates");
    f.vectors.push_back(a.act(from_r_coords(row, Rational(0)), v));
  }
  f.matrix = gram_of_rows(f.vectors, prec);
  return f;
}

ChangeOfBasis change_of_basis_certificate(const LogLattice& lk, const GramForm& form, const Integer& denom_bound) {
  size_t r = lk.rank();
  if (form.vectors.size() != r) fail(ErrorCode::DimensionMismatch, "form and lattice have different ranks");
  ChangeOfBasis out;
  if (r == 0) {
    out.residual = Real(Ball::kRadPrec);
    return out;
  }
  if (form.vectors[0].size() != lk.basis[0].size())
    fail(ErrorCode::DimensionMismatch, "form and lattice live in different log spaces");
  Prec prec = std::min(min_prec(form.matrix), lk.gram.prec());
  for (size_t i = 0; i < r; ++i) {
    // b_i = sum_j A_ij (alpha_j v)  =>  Gr A_i = (<alpha_j v, b_i>)_j
    BallVector rhs;
    for (size_t j = 0; j < r; ++j) {
      Ball s(prec);
      for (size_t c = 0; c < lk.basis[i].size(); ++c) s += form.vectors[j][c] * lk.basis[i][c];
      rhs.push_back(s);
    }
    BallVector x = solve(form.matrix, rhs);
    RationalVector row;
    for (const auto& xi : x) {
      auto q = rational_reconstruct(xi, denom_bound);
      if (!q)
        fail(ErrorCode::ReconstructionFailed, "entry " + xi.to_string(12) + " has no rational with denominator <= " +
                                                  denom_bound.get_str());
      row.push_back(*q);
    }
    out.a.push_back(std::move(row));
  }
  if (det(out.a) == 0) fail(ErrorCode::ReconstructionFailed, "reconstructed change of basis is singular");
  BallMatrix ab = ball_matrix(out.a, prec);
  BallMatrix lhs = mul(mul(ab, form.matrix), transpose(ab));
  out.residual = max_abs_diff(lhs, lk.gram.entries());
  Real tol = Real::pow2(-static_cast<long>(prec / 2), Ball::kRadPrec);
  if (!(out.residual < tol))
    fail(ErrorCode::ReconstructionFailed, "reconstructed change of basis fails re-verification (residual " +
                                              out.residual.to_string(6) + ")");
  return out;
}

}  // namespace unitlat
