#include "unitlat/sym_forms.hpp"

#include "unitlat/error.hpp"

namespace unitlat {

SymGBasis sym_g_space(const PermGroup& g) {
  size_t m = g.order();
  if (m > kSymGOrderBudget)
    fail(ErrorCode::OrderBudgetExceeded, "sym_g_space limited to order " + std::to_string(kSymGOrderBudget));
  SymGBasis out;
  if (m < 2) return out;
  // bar acting on R-coordinates: column j = coords of bar(g_j)
  RationalMatrix bar(m - 1, RationalVector(m - 1, Rational(0)));
  for (size_t j = 0; j + 1 < m; ++j) {
    RationalVector c = to_r_coords(ga_bar(g, group_element(g, j)));
    for (size_t i = 0; i + 1 < m; ++i) bar[i][j] = c[i];
  }
  for (size_t i = 0; i + 1 < m; ++i) bar[i][i] -= 1;
  for (const auto& c : nullspace(bar, m - 1)) {
    RationalVector eta = from_r_coords(c, Rational(0));
    RationalMatrix f = form_from_eta(g, eta, Rational(0));
    if (!is_invariant_form(g, f)) fail(ErrorCode::InvarianceViolated, "trace form failed the invariance check");
    out.etas.push_back(std::move(eta));
    out.forms.push_back(std::move(f));
  }
  return out;
}

bool is_invariant_form(const PermGroup& g, const RationalMatrix& f) {
  if (f != transpose(f)) return false;
  for (size_t s : g.generator_indices())
    if (pullback(f, element_action_r(g, s)) != f) return false;
  return true;
}

Real invariance_defect(const PermGroup& g, const BallMatrix& f) {
  Real d = max_abs_diff(f, transpose(f));
  for (size_t s : g.generator_indices()) d = max(d, max_abs_diff(pullback(f, element_action_r(g, s)), f));
  return d;
}

namespace {

// Flattened upper triangles of the basis forms as columns of a linear system.
RationalMatrix flattened(const SymGBasis& basis) {
  RationalMatrix a;
  size_t n = basis.forms.empty() ? 0 : basis.forms[0].size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      RationalVector row;
      for (const auto& f : basis.forms) row.push_back(f[i][j]);
      a.push_back(row);
    }
  return a;
}

}  // namespace

RationalVector sym_g_coordinates(const SymGBasis& basis, const RationalMatrix& f) {
  RationalMatrix a = flattened(basis);
  RationalVector rhs;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i; j < f.size(); ++j) rhs.push_back(f[i][j]);
  auto x = solve(a, rhs);
  if (!x) fail(ErrorCode::InvarianceViolated, "form is not in Sym^G");
  return *x;
}

BallVector sym_g_coordinates(const SymGBasis& basis, const BallMatrix& f) {
  RationalMatrix a = flattened(basis);
  size_t d = basis.dimension();
  // pick d independent rows of the system and solve the square subsystem
  std::vector<size_t> rows = independent_subset(a);
  require(rows.size() == d, ErrorCode::RankDeficient, "Sym^G basis forms are dependent");
  std::vector<std::pair<size_t, size_t>> pos;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i; j < f.size(); ++j) pos.emplace_back(i, j);
  RationalMatrix sq;
  BallVector rhs;
  for (size_t r : rows) {
    sq.push_back(a[r]);
    rhs.push_back(f[pos[r].first][pos[r].second]);
  }
  RationalMatrix inv = inverse(sq);
  return mul(ball_matrix(inv, min_prec(f)), rhs);
}

IsotypicSplit isotypic_split(const PermGroup& g, const BallMatrix& form,
                             const std::vector<RationalIdempotent>& idempotents, const Real& tol) {
  size_t m = g.order();
  require(form.size() + 1 == m, ErrorCode::DimensionMismatch, "form size does not match |G| - 1");
  Real defect = invariance_defect(g, form);
  if (defect > tol) fail(ErrorCode::InvarianceViolated, "form is not G-invariant (defect " + defect.to_string(6) + ")");
  IsotypicSplit out;
  Prec p = min_prec(form);
  std::vector<BallMatrix> bases;
  for (size_t k = 0; k < idempotents.size(); ++k) {
    std::vector<RationalVector> span;
    for (size_t j = 0; j + 1 < m; ++j)
      span.push_back(to_r_coords(ga_mul(g, idempotents[k].coeffs, group_element(g, j), Rational(0))));
    IsotypicBlock b;
    b.idempotent = k;
    for (size_t i : independent_subset(span)) b.basis.push_back(span[i]);
    if (b.basis.empty()) continue;
    BallMatrix e = ball_matrix(b.basis, p);
    b.form = mul(mul(e, form), transpose(e));
    bases.push_back(e);
    out.blocks.push_back(std::move(b));
  }
  out.cross_mass = Real(0, 64);
  for (size_t a = 0; a < bases.size(); ++a)
    for (size_t b = a + 1; b < bases.size(); ++b)
      out.cross_mass = max(out.cross_mass, max_abs(mul(mul(bases[a], form), transpose(bases[b]))));
  if (out.cross_mass > tol)
    fail(ErrorCode::InvarianceViolated, "cross-block mass " + out.cross_mass.to_string(6) + " exceeds tolerance");
  return out;
}

IsotypicDims isotypic_dims(const PermGroup& g, const std::vector<Subgroup>& subgroups) {
  CharacterTable t = character_table(g);
  IsotypicDims out;
  for (size_t r = 1; r < t.size(); ++r) out.character_degree.push_back(t.degrees[r]);
  out.multiplicity.assign(t.size() - 1, std::vector<int>(subgroups.size(), 0));
  for (size_t i = 0; i < subgroups.size(); ++i) {
    std::vector<int> mult = permutation_multiplicities(g, t, subgroups[i]);
    for (size_t r = 1; r < t.size(); ++r) out.multiplicity[r - 1][i] = mult[r];
  }
  auto ids = rational_idempotents(g);
  for (size_t k = 1; k < ids.size(); ++k) {
    std::vector<int> row;
    for (const auto& h : subgroups) {
      RationalMatrix nb = norm_ideal_basis(g, h);
      RationalMatrix l = left_mult_matrix_r(g, ids[k].coeffs);
      RationalMatrix img;
      for (const auto& v : nb) img.push_back(mul(l, v));
      row.push_back(static_cast<int>(rank(img)));
    }
    out.rational.push_back(row);
  }
  return out;
}

std::vector<Rational> psi_map(const PermGroup& g, const RationalMatrix& form, const std::vector<Subgroup>& subgroups) {
  std::vector<Rational> out;
  bool any = false;
  for (const auto& h : subgroups) {
    RationalMatrix w = norm_ideal_basis(g, h);
    Rational d = w.empty() ? Rational(1) : det(mul(mul(w, form), transpose(w)));
    any = any || d != 0;
    out.push_back(d);
  }
  if (!any) fail(ErrorCode::AllZero, "every psi_i vanishes");
  return out;
}

std::vector<Ball> psi_map(const PermGroup& g, const BallMatrix& form, const std::vector<Subgroup>& subgroups) {
  std::vector<Ball> out;
  bool any = false;
  Prec p = min_prec(form);
  for (const auto& h : subgroups) {
    RationalMatrix w = norm_ideal_basis(g, h);
    Ball d(1, p);
    if (!w.empty()) {
      BallMatrix wb = ball_matrix(w, p);
      d = det(mul(mul(wb, form), transpose(wb)));
    }
    any = any || !d.contains_zero();
    out.push_back(d);
  }
  if (!any) fail(ErrorCode::AllZero, "every psi_i vanishes");
  return out;
}

RationalMatrix scale_isotype(const PermGroup& g, const RationalMatrix& form, const RationalIdempotent& e,
                             const Rational& c) {
  RationalMatrix l = left_mult_matrix_r(g, e.coeffs);
  RationalMatrix part = pullback(form, l);
  RationalMatrix out = form;
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j) out[i][j] += (c - 1) * part[i][j];
  return out;
}

}  // namespace unitlat
