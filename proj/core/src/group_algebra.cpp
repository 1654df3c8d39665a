#include "unitlat/group_algebra.hpp"

namespace unitlat {

RationalVector group_element(const PermGroup& g, size_t element) {
  RationalVector a(g.order(), Rational(0));
  a[element] = 1;
  return a;
}

RationalMatrix left_mult_matrix_r(const PermGroup& g, const RationalVector& a) {
  size_t m = g.order();
  RationalMatrix l(m - 1, RationalVector(m - 1, Rational(0)));
  RationalVector shifted(m);
  for (size_t j = 0; j + 1 < m; ++j) {
    // (a g_j)(x) = a(x g_j^-1)
    for (size_t x = 0; x < m; ++x) shifted[x] = a[g.mul(x, g.inv(j))];
    RationalVector col = to_r_coords(shifted);
    for (size_t i = 0; i + 1 < m; ++i) l[i][j] = col[i];
  }
  return l;
}

RationalMatrix element_action_r(const PermGroup& g, size_t element) {
  return left_mult_matrix_r(g, group_element(g, element));
}

RationalVector norm_element(const PermGroup& g, const Subgroup& h) {
  RationalVector a(g.order(), Rational(0));
  for (size_t e : h.elements) a[e] = 1;
  return a;
}

RationalMatrix norm_ideal_basis(const PermGroup& g, const Subgroup& h) {
  RationalVector n = norm_element(g, h);
  std::vector<RationalVector> span;
  for (size_t j = 0; j < g.order(); ++j) span.push_back(to_r_coords(ga_mul(g, n, group_element(g, j), Rational(0))));
  RationalMatrix out;
  for (size_t i : independent_subset(span)) out.push_back(span[i]);
  return out;
}

RationalMatrix pullback(const RationalMatrix& f, const RationalMatrix& l) {
  return mul(mul(transpose(l), f), l);
}

BallMatrix pullback(const BallMatrix& f, const RationalMatrix& l) {
  Prec p = min_prec(f);
  BallMatrix lb = ball_matrix(l, p);
  return mul(mul(transpose(lb), f), lb);
}

}  // namespace unitlat
