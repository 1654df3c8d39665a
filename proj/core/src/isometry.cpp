#include "unitlat/isometry.hpp"

#include <algorithm>
#include <functional>

#include "unitlat/enumerate.hpp"
#include "unitlat/error.hpp"
#include "unitlat/lll.hpp"

namespace unitlat {

const char* to_string(IsometryVerdict v) {
  switch (v) {
    case IsometryVerdict::Isometric: return "Isometric";
    case IsometryVerdict::NotIsometric: return "NotIsometric";
    case IsometryVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(SimilarityVerdict v) {
  switch (v) {
    case SimilarityVerdict::Similar: return "Similar";
    case SimilarityVerdict::NotSimilar: return "NotSimilar";
    case SimilarityVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// |a - b| certainly exceeds tol.
bool separated(const Ball& a, const Ball& b, const Real& tol) { return tol < (a - b).mig(); }

constexpr int kDigits = 30;

IsometryResult not_isometric(const std::string& inv, const std::string& v1, const std::string& v2) {
  IsometryResult r;
  r.verdict = IsometryVerdict::NotIsometric;
  r.invariant = inv;
  r.value1 = v1;
  r.value2 = v2;
  return r;
}

struct Cluster {
  Ball value;
  size_t count;
};

std::vector<Cluster> clusters(const std::vector<NormedVector>& vs, const Real& tol) {
  std::vector<Cluster> out;
  for (const auto& v : vs) {
    if (!out.empty() && !separated(out.back().value, v.norm, tol)) {
      out.back().value = hull(out.back().value, v.norm);
      ++out.back().count;
    } else {
      out.push_back(Cluster{v.norm, 1});
    }
  }
  return out;
}

Ball dot_int(const IntVector& y, const BallVector& w, Prec prec) {
  Ball s(prec);
  for (size_t k = 0; k < y.size(); ++k)
    if (y[k] != 0) s += w[k] * Ball::from_integer(y[k], prec);
  return s;
}

}  // namespace

Real isometry_residual(const GramMatrix& g1, const GramMatrix& g2, const IntMatrix& t) {
  // T^T g1 T = rows-transform of g1 by T^T
  GramMatrix h = g1.transformed_rows(transpose(t));
  return max_abs_diff(h.entries(), g2.entries());
}

IsometryResult isometry_test(const GramMatrix& g1, const GramMatrix& g2, const Real& tol, size_t budget) {
  if (g1.rank() != g2.rank())
    fail(ErrorCode::RankMismatch,
         "ranks " + std::to_string(g1.rank()) + " and " + std::to_string(g2.rank()) + " differ");
  size_t n = g1.rank();
  Prec prec = std::min(g1.prec(), g2.prec());
  if (n == 0) {
    IsometryResult r;
    r.verdict = IsometryVerdict::Isometric;
    return r;
  }

  Ball d1 = g1.det(), d2 = g2.det();
  if (separated(d1, d2, tol)) return not_isometric("determinant", d1.mid().to_string(kDigits), d2.mid().to_string(kDigits));

  ShortVectors s1 = shortest_vectors(g1, 1'000'000), s2 = shortest_vectors(g2, 1'000'000);
  if (separated(s1.minimum, s2.minimum, tol))
    return not_isometric("minimum", s1.minimum.mid().to_string(kDigits), s2.minimum.mid().to_string(kDigits));
  if (s1.vectors.size() != s2.vectors.size())
    return not_isometric("minimal_vector_count", std::to_string(2 * s1.vectors.size()),
                         std::to_string(2 * s2.vectors.size()));

  LllResult red1 = lll_reduce(g1);
  Real maxdiag = red1.gram(0, 0).upper();
  for (size_t i = 1; i < n; ++i) maxdiag = max(maxdiag, red1.gram(i, i).upper());
  Real bound = maxdiag + tol;
  std::vector<NormedVector> l1 = vectors_up_to(g1, bound, 2'000'000);
  std::vector<NormedVector> l2 = vectors_up_to(g2, bound, 2'000'000);

  // Norm multiset below the cutoff (clusters safely inside the bound).
  std::vector<Cluster> c1 = clusters(l1, tol), c2 = clusters(l2, tol);
  Real cutoff = maxdiag - tol;
  for (size_t k = 0; k < std::min(c1.size(), c2.size()); ++k) {
    if (!(c1[k].value.upper() < cutoff) || !(c2[k].value.upper() < cutoff)) break;
    if (separated(c1[k].value, c2[k].value, tol))
      return not_isometric("short_vector_norms", c1[k].value.mid().to_string(kDigits),
                           c2[k].value.mid().to_string(kDigits));
    if (c1[k].count != c2[k].count)
      return not_isometric("short_vector_norm_multiplicity",
                           c1[k].value.mid().to_string(kDigits) + " x" + std::to_string(2 * c1[k].count),
                           c2[k].value.mid().to_string(kDigits) + " x" + std::to_string(2 * c2[k].count));
  }

  // Backtracking: images y_i in the g2 lattice of the reduced g1 basis.
  const BallMatrix& t = red1.gram.entries();
  struct Cand {
    IntVector y;
    BallVector gy;
  };
  std::vector<std::vector<Cand>> cands(n);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& v : l2) {
      if (separated(v.norm, t[i][i], tol)) continue;
      BallVector gy(n, Ball(prec));
      for (size_t a = 0; a < n; ++a) {
        Ball s(prec);
        for (size_t b = 0; b < n; ++b)
          if (v.coords[b] != 0) s += g2(a, b) * Ball::from_integer(v.coords[b], prec);
        gy[a] = s;
      }
      cands[i].push_back(Cand{v.coords, gy});
      if (i > 0) {
        IntVector neg = v.coords;
        for (auto& z : neg) z = -z;
        BallVector ng = gy;
        for (auto& b : ng) b = -b;
        cands[i].push_back(Cand{neg, ng});
      }
    }
    if (cands[i].empty())
      return not_isometric("norm_not_represented", t[i][i].mid().to_string(kDigits), "absent");
  }

  std::vector<const Cand*> chosen(n, nullptr);
  size_t nodes = 0;
  bool exhausted_budget = false;
  IntMatrix witness;
  std::function<bool(size_t)> search = [&](size_t i) -> bool {
    if (i == n) {
      IntMatrix y(n);
      for (size_t k = 0; k < n; ++k) y[k] = chosen[k]->y;
      Integer d = det(y);
      if (abs(d) != 1) return false;
      IntMatrix yinv = inverse_unimodular(y);
      IntMatrix tt = mul(transpose(red1.transform), transpose(yinv));
      if (!(isometry_residual(g1, g2, tt) < tol)) return false;
      witness = std::move(tt);
      return true;
    }
    for (const auto& c : cands[i]) {
      if (++nodes > budget) {
        exhausted_budget = true;
        return false;
      }
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        Ball ip = dot_int(chosen[j]->y, c.gy, prec);
        if (separated(ip, t[i][j], tol)) ok = false;
      }
      if (!ok) continue;
      chosen[i] = &c;
      if (search(i + 1)) return true;
      if (exhausted_budget) return false;
    }
    return false;
  };
  bool found = search(0);
  IsometryResult r;
  r.nodes = nodes;
  if (found) {
    r.verdict = IsometryVerdict::Isometric;
    r.witness = std::move(witness);
  } else if (exhausted_budget) {
    r.verdict = IsometryVerdict::Inconclusive;
  } else {
    r = not_isometric("exhaustive_search", "no isometry", std::to_string(nodes) + " nodes");
    r.nodes = nodes;
  }
  return r;
}

SimilarityResult similarity_test(const GramMatrix& g1, const GramMatrix& g2, const Real& tol, size_t budget) {
  if (g1.rank() != g2.rank())
    fail(ErrorCode::RankMismatch,
         "ranks " + std::to_string(g1.rank()) + " and " + std::to_string(g2.rank()) + " differ");
  size_t n = g1.rank();
  SimilarityResult out;
  if (n == 0) {
    out.verdict = SimilarityVerdict::Similar;
    out.lambda = Ball(1, g1.prec());
    return out;
  }
  Ball ratio = g1.det() / g2.det();
  out.lambda = root(ratio, n);
  IsometryResult iso = isometry_test(g1, g2.scaled(out.lambda), tol, budget);
  out.witness = iso.witness;
  out.invariant = iso.invariant;
  out.value1 = iso.value1;
  out.value2 = iso.value2;
  out.nodes = iso.nodes;
  switch (iso.verdict) {
    case IsometryVerdict::Isometric: out.verdict = SimilarityVerdict::Similar; break;
    case IsometryVerdict::NotIsometric: out.verdict = SimilarityVerdict::NotSimilar; break;
    case IsometryVerdict::Inconclusive: out.verdict = SimilarityVerdict::Inconclusive; break;
  }
  return out;
}

}  // namespace unitlat
