#include "unitlat/subfield.hpp"

#include "unitlat/error.hpp"

namespace unitlat {

FixedField fixed_field(const GaloisAction& a, const Subgroup& h, Prec prec) {
  int n = a.field.degree();
  if (h.order() == 0 || a.order() % h.order() != 0) fail(ErrorCode::InvalidArgument, "not a subgroup");
  int d = static_cast<int>(a.order() / h.order());
  FieldElement x = a.field.generator();
  for (int k = 1; k <= n; ++k) {
    FieldElement xk = x.pow(k);
    FieldElement gamma = a.field.element(RationalPoly());
    for (size_t e : h.elements) gamma = gamma + a.apply(e, xk);
    // powers 1, gamma, ..., gamma^d as coordinate columns
    std::vector<RationalVector> pows;
    FieldElement p = a.field.one();
    for (int i = 0; i <= d; ++i) {
      pows.push_back(p.coords());
      p = p * gamma;
    }
    std::vector<RationalVector> low(pows.begin(), pows.end() - 1);
    if (independent_subset(low).size() != static_cast<size_t>(d)) continue;
    RationalMatrix m(static_cast<size_t>(n), RationalVector(static_cast<size_t>(d)));
    for (size_t r = 0; r < static_cast<size_t>(n); ++r)
      for (size_t c = 0; c < static_cast<size_t>(d); ++c) m[r][c] = low[c][r];
    auto sol = solve(m, pows.back());
    if (!sol) continue;
    std::vector<Rational> coeffs;
    for (const auto& c : *sol) coeffs.push_back(-c);
    coeffs.emplace_back(1);
    RationalPoly minpoly(coeffs);
    if (!minpoly.is_integral()) continue;
    try {
      return FixedField{NumberField::build(minpoly, prec), gamma, k};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ReducibleDetected) throw;
    }
  }
  fail(ErrorCode::FixedFieldConstructionFailed,
       "no trace generator of degree " + std::to_string(d) + " among powers up to " + std::to_string(n));
}

SubfieldNorm norm_to_subfield(const GaloisAction& a, const Subgroup& h, const FieldElement& u, Prec prec) {
  if (!is_normal(a.group, h)) fail(ErrorCode::NotNormal, "subgroup " + h.name + " is not normal");
  if (!(u.modulus() == a.field.poly())) fail(ErrorCode::InvalidArgument, "element belongs to a different field");
  FixedField f = fixed_field(a, h, prec);
  FieldElement nm = a.field.one();
  for (size_t e : h.elements) nm = nm * a.apply(e, u);
  int n = a.field.degree();
  int d = f.field.degree();
  std::vector<RationalVector> basis;
  FieldElement p = a.field.one();
  for (int i = 0; i < d; ++i) {
    basis.push_back(p.coords());
    p = p * f.generator;
  }
  RationalMatrix m(static_cast<size_t>(n), RationalVector(static_cast<size_t>(d)));
  for (size_t r = 0; r < static_cast<size_t>(n); ++r)
    for (size_t c = 0; c < static_cast<size_t>(d); ++c) m[r][c] = basis[c][r];
  auto sol = solve(m, nm.coords());
  if (!sol) fail(ErrorCode::FixedFieldConstructionFailed, "norm does not lie in the fixed field");
  return {f, f.field.element(*sol), nm};
}

BallMatrix subfield_log_basis(const GaloisAction& a, const Subgroup& h, const BallVector& v) {
  RationalMatrix ideal = norm_ideal_basis(a.group, h);
  BallMatrix rows;
  for (const auto& r : ideal) rows.push_back(a.act(from_r_coords(r, Rational(0)), v));
  if (rows.empty()) return rows;
  if (!det(mul(rows, transpose(rows))).is_positive())
    fail(ErrorCode::NotWeakMinkowski, "subfield log vectors are not independent");
  return rows;
}

}  // namespace unitlat
