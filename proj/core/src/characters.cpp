#include "unitlat/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "unitlat/error.hpp"
#include "unitlat/group_algebra.hpp"

namespace unitlat {

namespace {

using cd = std::complex<double>;

// a[i][j][k]: number of pairs (x, y) in C_i x C_j with x y = z for a fixed z in C_k.
std::vector<Eigen::MatrixXd> class_matrices(const PermGroup& g) {
  size_t k = g.classes().size();
  std::vector<Eigen::MatrixXd> m(k, Eigen::MatrixXd::Zero(static_cast<long>(k), static_cast<long>(k)));
  for (size_t c = 0; c < k; ++c) {
    size_t z = g.classes()[c].front();
    for (size_t x = 0; x < g.order(); ++x) {
      size_t y = g.mul(g.inv(x), z);
      // B_i[j][k] = a_ijk with i = class(x), j = class(y)
      m[g.class_of(x)](static_cast<long>(g.class_of(y)), static_cast<long>(c)) += 1;
    }
  }
  return m;
}

bool close(const std::vector<cd>& a, const std::vector<cd>& b, double tol) {
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

CharacterTable character_table(const PermGroup& g) {
  if (g.order() > kCharacterOrderBudget)
    fail(ErrorCode::OrderBudgetExceeded, "character table limited to order " + std::to_string(kCharacterOrderBudget));
  size_t k = g.classes().size();
  auto bm = class_matrices(g);
  double order = static_cast<double>(g.order());
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(static_cast<long>(k), static_cast<long>(k));
    for (size_t i = 0; i < k; ++i) comb += static_cast<double>(coef(rng)) * bm[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comb.cast<cd>());
    if (es.info() != Eigen::Success) continue;
    // eigenvalues must be simple for the eigenvectors to be the omegas
    bool simple = true;
    for (long a = 0; a < static_cast<long>(k) && simple; ++a)
      for (long b = a + 1; b < static_cast<long>(k); ++b)
        if (std::abs(es.eigenvalues()[a] - es.eigenvalues()[b]) < 1e-6) simple = false;
    if (!simple) continue;
    CharacterTable t;
    bool ok = true;
    for (long e = 0; e < static_cast<long>(k) && ok; ++e) {
      Eigen::VectorXcd w = es.eigenvectors().col(e);
      if (std::abs(w(0)) < 1e-12) {
        ok = false;
        break;
      }
      w /= w(0);
      double s = 0;
      for (size_t c = 0; c < k; ++c) s += std::norm(w(static_cast<long>(c))) / static_cast<double>(g.classes()[c].size());
      double deg = std::sqrt(order / s);
      int d = static_cast<int>(std::lround(deg));
      if (std::abs(deg - d) > 1e-6 || d < 1) {
        ok = false;
        break;
      }
      std::vector<cd> row(k);
      for (size_t c = 0; c < k; ++c)
        row[c] = w(static_cast<long>(c)) * static_cast<double>(d) / static_cast<double>(g.classes()[c].size());
      t.values.push_back(row);
      t.degrees.push_back(d);
    }
    if (!ok) continue;
    // orthogonality check: sum_c |C| chi conj(psi) = |G| delta
    for (size_t a = 0; a < k && ok; ++a)
      for (size_t b = 0; b < k; ++b) {
        cd s = 0;
        for (size_t c = 0; c < k; ++c)
          s += static_cast<double>(g.classes()[c].size()) * t.values[a][c] * std::conj(t.values[b][c]);
        if (std::abs(s - (a == b ? order : 0.0)) > 1e-6 * order) ok = false;
      }
    if (!ok) continue;
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    auto key = [&](size_t r) {
      std::vector<double> v{static_cast<double>(t.degrees[r])};
      bool trivial = true;
      for (size_t c = 0; c < k; ++c) trivial = trivial && std::abs(t.values[r][c] - 1.0) < 1e-9;
      v[0] = trivial ? 0 : v[0];
      for (size_t c = 0; c < k; ++c) {
        v.push_back(-std::round(t.values[r][c].real() * 1e6) / 1e6);
        v.push_back(-std::round(t.values[r][c].imag() * 1e6) / 1e6);
      }
      return v;
    };
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return key(a) < key(b); });
    CharacterTable sorted;
    for (size_t r : idx) {
      sorted.values.push_back(t.values[r]);
      sorted.degrees.push_back(t.degrees[r]);
    }
    // Galois orbits via power maps: chi^(j)(C) = chi(C^j) for j prime to the exponent.
    size_t ex = g.exponent();
    std::vector<std::vector<size_t>> power(ex + 1);
    for (size_t j = 1; j <= ex; ++j) {
      if (std::gcd(j, ex) != 1) continue;
      for (size_t c = 0; c < k; ++c) {
        size_t x = g.classes()[c].front(), y = 0;
        for (size_t r = 0; r < j; ++r) y = g.mul(y, x);
        power[j].push_back(g.class_of(y));
      }
    }
    std::vector<char> done(k, 0);
    for (size_t r = 0; r < k; ++r) {
      if (done[r]) continue;
      std::vector<size_t> orbit;
      for (size_t j = 1; j <= ex; ++j) {
        if (power[j].empty()) continue;
        std::vector<cd> img(k);
        for (size_t c = 0; c < k; ++c) img[c] = sorted.values[r][power[j][c]];
        for (size_t q = 0; q < k; ++q)
          if (close(img, sorted.values[q], 1e-6) && std::find(orbit.begin(), orbit.end(), q) == orbit.end())
            orbit.push_back(q);
      }
      std::sort(orbit.begin(), orbit.end());
      for (size_t q : orbit) done[q] = 1;
      sorted.rational_orbits.push_back(orbit);
    }
    return sorted;
  }
  fail(ErrorCode::ReconstructionFailed, "character table eigen-decomposition did not separate the classes");
}

std::vector<RationalIdempotent> rational_idempotents(const PermGroup& g) {
  CharacterTable t = character_table(g);
  size_t n = g.order();
  std::vector<RationalIdempotent> out;
  for (const auto& orbit : t.rational_orbits) {
    RationalIdempotent e;
    e.characters = orbit;
    int d = t.degrees[orbit.front()];
    e.coeffs.assign(n, Rational(0));
    for (size_t x = 0; x < n; ++x) {
      cd s = 0;
      for (size_t r : orbit) s += t.values[r][g.class_of(g.inv(x))];
      double re = s.real();
      if (std::abs(s.imag()) > 1e-6 || std::abs(re - std::round(re)) > 1e-6)
        fail(ErrorCode::ReconstructionFailed, "orbit character sum is not an integer");
      e.coeffs[x] = Rational(static_cast<long>(std::lround(re)) * d, static_cast<long>(n));
      e.coeffs[x].canonicalize();
    }
    for (size_t r : orbit) e.dimension += t.degrees[r] * t.degrees[r];
    out.push_back(std::move(e));
  }
  // exact verification
  RationalVector sum(n, Rational(0));
  for (size_t a = 0; a < out.size(); ++a) {
    const auto& ea = out[a].coeffs;
    for (size_t b = a; b < out.size(); ++b) {
      RationalVector p = ga_mul(g, ea, out[b].coeffs, Rational(0));
      const RationalVector& expect = a == b ? ea : RationalVector(n, Rational(0));
      if (p != expect) fail(ErrorCode::ReconstructionFailed, "idempotent identities fail exactly");
    }
    for (size_t s : g.generator_indices()) {
      RationalVector x = group_element(g, s);
      if (ga_mul(g, x, ea, Rational(0)) != ga_mul(g, ea, x, Rational(0)))
        fail(ErrorCode::ReconstructionFailed, "idempotent is not central");
    }
    for (size_t x = 0; x < n; ++x) sum[x] += ea[x];
  }
  if (sum != group_element(g, 0)) fail(ErrorCode::ReconstructionFailed, "idempotents do not sum to 1");
  return out;
}

std::vector<int> permutation_multiplicities(const PermGroup& g, const CharacterTable& t, const Subgroup& h) {
  std::vector<int> out;
  for (size_t r = 0; r < t.size(); ++r) {
    cd s = 0;
    for (size_t e : h.elements) s += t.values[r][g.class_of(e)];
    s /= static_cast<double>(h.order());
    long m = std::lround(s.real());
    if (std::abs(s - static_cast<double>(m)) > 1e-6)
      fail(ErrorCode::ReconstructionFailed, "non-integral permutation multiplicity");
    out.push_back(static_cast<int>(m));
  }
  return out;
}

}  // namespace unitlat
