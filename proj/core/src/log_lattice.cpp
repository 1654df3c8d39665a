#include "unitlat/log_lattice.hpp"

#include "unitlat/error.hpp"

namespace unitlat {

BallVector log_embed(const NumberField& k, const FieldElement& u, Prec prec) {
  if (!(u.modulus() == k.poly())) fail(ErrorCode::InvalidArgument, "element belongs to a different field");
  if (!u.is_unit()) fail(ErrorCode::NotAUnit, "element " + u.value().to_string() + " is not a unit");
  const NumberField kp = prec > k.prec() ? k.at_precision(prec) : k;
  BallVector out;
  const auto& emb = kp.embeddings();
  for (int i = 0; i < kp.r(); ++i) {
    Ball v = u.eval(emb[static_cast<size_t>(i)].re());
    if (v.contains_zero()) fail(ErrorCode::PrecisionExhausted, "embedding value not separated from zero");
    out.push_back(log(abs(v)).with_prec(prec));
  }
  for (int j = 0; j < kp.s(); ++j) {
    ComplexBall z = u.eval(emb[static_cast<size_t>(kp.r() + j)]);
    Ball m = z.norm2();
    if (!m.is_positive()) fail(ErrorCode::PrecisionExhausted, "embedding value not separated from zero");
    out.push_back(log(m).with_prec(prec));
  }
  return out;
}

LogLattice log_lattice(const NumberField& k, const std::vector<FieldElement>& units, Prec prec) {
  int need = k.unit_rank();
  if (static_cast<int>(units.size()) < need)
    fail(ErrorCode::RankDeficient, std::to_string(units.size()) + " units given, unit rank is " + std::to_string(need));
  for (const auto& u : units)
    if (!u.is_unit()) fail(ErrorCode::NotAUnit, "element " + u.value().to_string() + " is not a unit");
  Prec cur = prec;
  for (int attempt = 0; attempt <= 4; ++attempt, cur *= 2) {
    NumberField kp = k.at_precision(cur);
    std::vector<BallVector> logs;
    for (const auto& u : units) logs.push_back(log_embed(kp, u, cur));
    LogLattice l;
    l.r = k.r();
    l.s = k.s();
    l.prec = cur;
    for (size_t i = 0; i < units.size() && static_cast<int>(l.selected.size()) < need; ++i) {
      BallMatrix trial = l.basis;
      trial.push_back(logs[i]);
      BallMatrix g(trial.size(), BallVector(trial.size(), Ball(cur)));
      for (size_t a = 0; a < trial.size(); ++a)
        for (size_t b = 0; b < trial.size(); ++b) {
          Ball s(cur);
          for (size_t c = 0; c < trial[a].size(); ++c) s += trial[a][c] * trial[b][c];
          g[a][b] = s;
        }
      if (det(g).is_positive()) {
        l.basis = std::move(trial);
        l.selected.push_back(i);
        l.units.push_back(units[i]);
      }
    }
    if (static_cast<int>(l.selected.size()) == need) {
      l.gram = need == 0 ? GramMatrix(BallMatrix{}) : GramMatrix::of_rows(l.basis);
      return l;
    }
  }
  fail(ErrorCode::RankDeficient, "log vectors span rank below " + std::to_string(need) +
                                     " after precision escalation to " + std::to_string(cur / 2));
}

Ball regulator(const LogLattice& l) {
  if (static_cast<int>(l.rank()) != l.r + l.s - 1)
    fail(ErrorCode::RankDeficient, "log lattice does not have full unit rank");
  if (l.rank() == 0) return Ball(1, l.prec);
  return sqrt(l.gram.det() / static_cast<long>(l.r + l.s));
}

SublatticeInclusion include_sublattice(const NumberField& k, const NumberField& n, const FieldElement& gen_image,
                                       const LogLattice& lk, Prec prec) {
  if (!k.totally_real() || !n.totally_real())
    fail(ErrorCode::NotTotallyReal, "inclusion is only supported for totally real fields");
  if (!(gen_image.modulus() == n.poly())) fail(ErrorCode::InvalidArgument, "generator image must lie in N");
  if (!k.poly().coeffs().empty() && !compose_mod(k.poly(), gen_image.value(), n.poly()).is_zero())
    fail(ErrorCode::NotASubfield, "image of the generator is not a root of the defining polynomial of K");
  if (n.degree() % k.degree() != 0) fail(ErrorCode::NotASubfield, "degree of K does not divide degree of N");
  int d = n.degree() / k.degree();
  NumberField np = n.at_precision(prec);
  SublatticeInclusion out;
  out.index = d;
  LogLattice& img = out.image;
  img.r = n.r();
  img.s = n.s();
  img.prec = prec;
  for (size_t i = 0; i < lk.units.size(); ++i) {
    FieldElement iu = lk.units[i].substitute(gen_image);
    img.units.push_back(iu);
    img.selected.push_back(i);
    img.basis.push_back(log_embed(np, iu, prec));
  }
  size_t rk = img.basis.size();
  Integer dr;
  mpz_ui_pow_ui(dr.get_mpz_t(), static_cast<unsigned long>(d), rk);
  out.det_ratio = Rational(dr);
  if (rk == 0) {
    img.gram = GramMatrix(BallMatrix{});
    out.measured_ratio = Ball(1, prec);
    out.max_deviation = Real(Ball::kRadPrec);
    out.scaling_certified = true;
    return out;
  }
  img.gram = GramMatrix::of_rows(img.basis);
  BallMatrix scaled = lk.gram.entries();
  for (auto& row : scaled)
    for (auto& x : row) x = x * static_cast<long>(d);
  out.max_deviation = max_abs_diff(img.gram.entries(), scaled);
  out.measured_ratio = img.gram.det() / lk.gram.det();
  Real tol = Real::pow2(-static_cast<long>(std::min(prec, lk.prec) / 2), Ball::kRadPrec);
  out.scaling_certified = out.max_deviation < tol && out.measured_ratio.contains(out.det_ratio);
  return out;
}

}  // namespace unitlat
