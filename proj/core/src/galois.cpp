#include "unitlat/galois.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "unitlat/error.hpp"
#include "unitlat/relation.hpp"
#include "unitlat/roots.hpp"

namespace unitlat {

namespace {

constexpr Prec kMaxRelationPrec = 16384;

bool is_root_mod_p(const RationalPoly& q, const RationalPoly& p) {
  return compose_mod(p, q, p).is_zero();
}

// t_j = q(t_0) with coefficients bounded by `bound`, or nullopt when an
// integer relation certifies there is none.
std::optional<RationalPoly> find_image(const NumberField& k, size_t j, const Integer& bound, Prec prec) {
  int n = k.degree();
  Integer coeff_bound = bound * static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n + 1))));
  for (Prec w = prec; w <= kMaxRelationPrec; w *= 2) {
    NumberField kw = k.at_precision(w);
    const Ball& t0 = kw.roots()[0].re();
    std::vector<Ball> values;
    Ball pw(1, w);
    for (int e = 0; e < n; ++e) {
      values.push_back(pw);
      pw = pw * t0;
    }
    values.push_back(kw.roots()[j].re());
    RelationResult r;
    try {
      r = integer_relation(values, coeff_bound, w);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InsufficientPrecision) continue;
      throw;
    }
    if (r.status == RelationStatus::NoneBelow) return std::nullopt;
    const Integer& d = r.relation.back();
    if (d == 0) continue;
    std::vector<Rational> c;
    for (int e = 0; e < n; ++e) {
      Rational q(-r.relation[static_cast<size_t>(e)], d);
      q.canonicalize();
      c.push_back(q);
    }
    RationalPoly q(c);
    if (is_root_mod_p(q, k.poly())) return q;
  }
  fail(ErrorCode::PrecisionExhausted, "automorphism search undecided at " + std::to_string(kMaxRelationPrec) + " bits");
}

// pi(i) = index of the root q(t_i)
std::optional<Perm> root_permutation(const NumberField& k, const RationalPoly& q) {
  const auto& roots = k.roots();
  Perm pi(roots.size(), -1);
  for (size_t i = 0; i < roots.size(); ++i) {
    Ball v = q.eval(roots[i].re());
    for (size_t t = 0; t < roots.size(); ++t) {
      if (!v.overlaps(roots[t].re())) continue;
      if (pi[i] != -1) return std::nullopt;
      pi[i] = static_cast<int>(t);
    }
    if (pi[i] == -1) return std::nullopt;
  }
  if (!perm_is_valid(pi)) return std::nullopt;
  return pi;
}

std::optional<GaloisAction> try_recover(const NumberField& k, Prec prec, const Integer& bound) {
  int n = k.degree();
  std::vector<RationalPoly> qs{RationalPoly::x()};
  for (size_t j = 1; j < static_cast<size_t>(n); ++j) {
    auto q = find_image(k, j, bound, prec);
    if (!q) return std::nullopt;
    qs.push_back(*q);
  }
  std::vector<Perm> perms;
  for (const auto& q : qs) {
    std::optional<Perm> pi;
    for (Prec w = prec; w <= kMaxRelationPrec && !pi; w *= 2) pi = root_permutation(k.at_precision(w), q);
    if (!pi) fail(ErrorCode::PrecisionExhausted, "roots could not be matched under " + q.to_string());
    perms.push_back(perm_inverse(*pi));
  }
  GaloisAction a;
  a.field = k;
  a.denom_bound = bound;
  a.group = PermGroup::generate(n, perms);
  if (a.group.order() != static_cast<size_t>(n))
    fail(ErrorCode::InvarianceViolated, "embedding permutations do not form a group of order n");
  std::vector<std::optional<FieldElement>> images(static_cast<size_t>(n));
  for (size_t j = 0; j < perms.size(); ++j) images[a.group.index_of(perms[j])] = k.element(qs[j]);
  for (auto& im : images) {
    if (!im) fail(ErrorCode::InvarianceViolated, "two automorphisms induce the same permutation");
    a.images.push_back(*im);
  }
  // sigma_i sigma_j (x) = q_j(q_i(x))
  for (size_t i = 0; i < a.order(); ++i)
    for (size_t j = 0; j < a.order(); ++j)
      if (!(a.images[a.group.mul(i, j)] == a.images[j].substitute(a.images[i])))
        fail(ErrorCode::InvarianceViolated, "permutation composition disagrees with automorphism composition");
  return a;
}

}  // namespace

BallVector GaloisAction::act(size_t k, const BallVector& v) const {
  const Perm& p = group.element(k);
  BallVector out(v.size(), Ball(v.empty() ? 53 : v[0].prec()));
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<size_t>(p[i])] = v[i];
  return out;
}

BallVector GaloisAction::act(const RationalVector& a, const BallVector& v) const {
  if (a.size() != order()) fail(ErrorCode::DimensionMismatch, "group ring element has wrong length");
  Prec prec = v.empty() ? 53 : v[0].prec();
  BallVector out(v.size(), Ball(prec));
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    const Perm& p = group.element(k);
    for (size_t i = 0; i < v.size(); ++i) out[static_cast<size_t>(p[i])] += v[i] * a[k];
  }
  return out;
}

Subgroup GaloisAction::subgroup(const std::vector<std::string>& cycle_generators, std::string name) const {
  return make_subgroup(group, cycle_generators, std::move(name));
}

GaloisAction recover_galois_action(const NumberField& k, Prec prec, const Integer& denom_bound) {
  if (!k.totally_real()) fail(ErrorCode::NotTotallyReal, "Galois recovery needs a totally real field");
  if (denom_bound < 1) fail(ErrorCode::InvalidArgument, "denominator bound must be positive");
  prec = std::max(prec, k.prec());
  for (const Integer& bound : {denom_bound, Integer(denom_bound * denom_bound)}) {
    if (auto a = try_recover(k, prec, bound)) return *a;
  }
  fail(ErrorCode::NotGalois, k.poly().to_string() + " has fewer than " + std::to_string(k.degree()) +
                                 " automorphisms with coefficients bounded by " +
                                 Integer(denom_bound * denom_bound).get_str());
}

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

bool is_plus_minus_one(const FieldElement& x) {
  return x.is_rational() && !x.is_zero() && (x.value().coeff(0) == 1 || x.value().coeff(0) == -1);
}

// Exact check that w_k depends on the selected orbit vectors.
bool certify_dependence(const GaloisAction& a, const FieldElement& u, const BallMatrix& orbit,
                        const std::vector<size_t>& sel, size_t k, Prec prec) {
  std::vector<Rational> c;
  if (!sel.empty()) {
    BallMatrix sub;
    for (size_t s : sel) sub.push_back(orbit[s]);
    BallMatrix g = gram_of_rows(sub, prec);
    BallVector rhs;
    for (size_t s : sel) {
      Ball t(prec);
      for (size_t i = 0; i < orbit[k].size(); ++i) t += orbit[k][i] * orbit[s][i];
      rhs.push_back(t);
    }
    BallVector x;
    try {
      x = solve(g, rhs);
      for (const auto& xi : x) {
        auto q = rational_reconstruct(xi, kDefaultDenomBound);
        if (!q) return false;
        c.push_back(*q);
      }
    } catch (const Error&) {
      return false;
    }
  }
  Integer d(1);
  for (const auto& q : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  FieldElement prod = a.apply(k, u).pow(d.get_si());
  for (size_t t = 0; t < sel.size(); ++t) {
    Rational e = -c[t] * d;
    if (e == 0) continue;
    prod = prod * a.apply(sel[t], u).pow(e.get_num().get_si());
  }
  return is_plus_minus_one(prod);
}

}  // namespace

WeakMinkowskiCheck weak_minkowski_check(const GaloisAction& a, const FieldElement& u, Prec prec) {
  if (!(u.modulus() == a.field.poly())) fail(ErrorCode::InvalidArgument, "element belongs to a different field");
  if (!u.is_unit()) fail(ErrorCode::NotAUnit, "element " + u.value().to_string() + " is not a unit");
  int need = a.field.unit_rank();
  Prec cur = prec;
  for (int attempt = 0; attempt < 4; ++attempt, cur *= 2) {
    BallVector v = log_embed(a.field.at_precision(cur), u, cur);
    BallMatrix orbit;
    for (size_t k = 0; k < a.order(); ++k) orbit.push_back(a.act(k, v));
    std::vector<size_t> sel;
    for (size_t k = 0; k < orbit.size() && static_cast<int>(sel.size()) < need; ++k) {
      BallMatrix trial;
      for (size_t s : sel) trial.push_back(orbit[s]);
      trial.push_back(orbit[k]);
      if (det(gram_of_rows(trial, cur)).is_positive()) sel.push_back(k);
    }
    bool complete = true;
    for (size_t k = 0; k < orbit.size() && complete; ++k) {
      if (std::find(sel.begin(), sel.end(), k) != sel.end()) continue;
      complete = certify_dependence(a, u, orbit, sel, k, cur);
    }
    if (complete) {
      int rank = static_cast<int>(sel.size());
      return {rank == need, rank};
    }
  }
  fail(ErrorCode::InsufficientPrecision, "orbit rank of " + u.value().to_string() + " undecided at " +
                                             std::to_string(cur / 2) + " bits");
}

WeakMinkowskiUnit weak_minkowski_search(const GaloisAction& a, const std::vector<FieldElement>& units, int effort,
                                        Prec prec) {
  if (effort < 1) fail(ErrorCode::InvalidArgument, "effort must be positive");
  LogLattice lat = log_lattice(a.field, units, prec);
  int need = a.field.unit_rank();
  if (need == 0) return {a.field.one(), IntVector(units.size(), Integer(0))};
  Prec p = lat.prec;
  NumberField kp = a.field.at_precision(p);
  std::vector<BallVector> logs;
  for (const auto& u : units) logs.push_back(log_embed(kp, u, p));

  // values tried per coordinate: 1, -1, 2, -2, ..., 0
  std::vector<int> values;
  for (int e = 1; e <= effort; ++e) {
    values.push_back(e);
    values.push_back(-e);
  }
  values.push_back(0);
  std::vector<std::vector<int>> candidates;
  std::vector<int> cur(units.size(), 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == units.size()) {
      if (std::any_of(cur.begin(), cur.end(), [](int e) { return e != 0; })) candidates.push_back(cur);
      return;
    }
    for (int e : values) {
      cur[i] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  auto l1 = [](const std::vector<int>& e) {
    int s = 0;
    for (int x : e) s += std::abs(x);
    return s;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& x, const auto& y) { return l1(x) < l1(y); });

  for (const auto& e : candidates) {
    BallVector v(logs[0].size(), Ball(p));
    for (size_t i = 0; i < units.size(); ++i)
      for (size_t c = 0; c < v.size(); ++c) v[c] += logs[i][c] * static_cast<long>(e[i]);
    // rank n - 1 iff the Gram of g_0 v, ..., g_(m-2) v is nonsingular
    BallMatrix rows;
    for (size_t k = 0; k + 1 < a.order(); ++k) rows.push_back(a.act(k, v));
    if (!det(gram_of_rows(rows, p)).is_positive()) continue;
    FieldElement u = a.field.one();
    IntVector ex;
    for (size_t i = 0; i < units.size(); ++i) {
      if (e[i] != 0) u = u * units[i].pow(e[i]);
      ex.emplace_back(e[i]);
    }
    return {u, ex};
  }
  fail(ErrorCode::SearchExhausted, "no weak Minkowski unit among products with exponents up to " +
                                       std::to_string(effort));
}

}  // namespace unitlat
