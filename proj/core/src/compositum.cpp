#include "unitlat/compositum.hpp"

#include "unitlat/error.hpp"
#include "unitlat/group_algebra.hpp"

namespace unitlat {

CompositumDims compositum_decomposition(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (!is_normal(g, h1) || !is_normal(g, h2))
    fail(ErrorCode::SetupViolated, "H1 and H2 must be normal (K1, K2 Galois)");
  if (intersection(h1, h2).order() != 1)
    fail(ErrorCode::SetupViolated, "H1 ∩ H2 must be trivial (G is the group of the compositum)");
  Subgroup t = join(g, h1, h2);
  size_t m = g.order();
  CompositumDims d;
  d.r_s = m / t.order() - 1;
  d.w1_perp = m / h1.order() - m / t.order();
  d.w2_perp = m / h2.order() - m / t.order();

  RationalMatrix b1 = norm_ideal_basis(g, h1), b2 = norm_ideal_basis(g, h2);
  RationalMatrix vb = b1;
  vb.insert(vb.end(), b2.begin(), b2.end());
  d.v = rank(vb);

  RationalVector et = norm_element(g, t);
  for (auto& x : et) x /= static_cast<long>(t.order());
  RationalMatrix le = left_mult_matrix_r(g, et);
  auto image_rank = [&](const RationalMatrix& rows, bool complement) {
    RationalMatrix img;
    for (const auto& v : rows) {
      RationalVector w = mul(le, v);
      if (complement)
        for (size_t i = 0; i < w.size(); ++i) w[i] = v[i] - w[i];
      img.push_back(w);
    }
    return rank(img);
  };
  d.measured_r_s = image_rank(vb, false);
  d.measured_w1 = image_rank(b1, true);
  d.measured_w2 = image_rank(b2, true);
  d.verified = d.v == d.r_s + d.w1_perp + d.w2_perp && d.measured_r_s == d.r_s && d.measured_w1 == d.w1_perp &&
               d.measured_w2 == d.w2_perp;
  return d;
}

}  // namespace unitlat
