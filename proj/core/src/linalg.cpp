#include "unitlat/linalg.hpp"

#include <algorithm>

#include "unitlat/error.hpp"

namespace unitlat {

RationalMatrix rational_identity(size_t n) {
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return a;
  RationalMatrix t(a[0].size(), RationalVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  size_t inner = b.size();
  if (a[0].size() != inner) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  size_t cols = inner ? b[0].size() : 0;
  RationalMatrix c(a.size(), RationalVector(cols, Rational(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RationalVector mul(const RationalMatrix& a, const RationalVector& v) {
  RationalVector r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  }
  return r;
}

std::vector<size_t> rref(RationalMatrix& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(RationalMatrix a) { return rref(a).size(); }

std::vector<RationalVector> nullspace(RationalMatrix a, size_t ncols) {
  std::vector<size_t> piv = rref(a);
  std::vector<bool> is_piv(ncols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<RationalVector> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    RationalVector v(ncols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(RationalMatrix a) {
  size_t n = a.size();
  Rational d(1);
  for (size_t c = 0; c < n; ++c) {
    if (a[c].size() != n) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

RationalMatrix inverse(const RationalMatrix& a) {
  size_t n = a.size();
  RationalMatrix aug(n, RationalVector(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<size_t> piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorCode::DomainError, "singular matrix");
  RationalMatrix inv(n, RationalVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  size_t rows = a.size();
  if (b.size() != rows) fail(ErrorCode::DimensionMismatch, "solve shape mismatch");
  size_t cols = rows ? a[0].size() : 0;
  RationalMatrix aug(rows, RationalVector(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<size_t> piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

std::vector<size_t> independent_subset(const std::vector<RationalVector>& vectors) {
  std::vector<size_t> chosen;
  RationalMatrix basis;
  for (size_t i = 0; i < vectors.size(); ++i) {
    RationalMatrix trial = basis;
    trial.push_back(vectors[i]);
    if (rank(trial) == trial.size()) {
      basis = std::move(trial);
      chosen.push_back(i);
    }
  }
  return chosen;
}

IntMatrix int_identity(size_t n) {
  IntMatrix m(n, IntVector(n, Integer(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return a;
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  size_t inner = b.size();
  if (a[0].size() != inner) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  size_t cols = inner ? b[0].size() : 0;
  IntMatrix c(a.size(), IntVector(cols, Integer(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Integer det(const IntMatrix& a) {
  // Bareiss fraction-free elimination.
  size_t n = a.size();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& z : a[i]) r[i].emplace_back(z);
  return r;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  Integer d = det(a);
  if (abs(d) != 1) fail(ErrorCode::DomainError, "matrix is not unimodular");
  RationalMatrix inv = inverse(to_rational(a));
  IntMatrix r(inv.size());
  for (size_t i = 0; i < inv.size(); ++i)
    for (const auto& q : inv[i]) r[i].push_back(q.get_num());
  return r;
}

BallMatrix ball_matrix(const RationalMatrix& a, Prec prec) {
  BallMatrix m(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& q : a[i]) m[i].push_back(Ball::from_rational(q, prec));
  return m;
}

BallMatrix ball_matrix(const IntMatrix& a, Prec prec) {
  BallMatrix m(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& z : a[i]) m[i].push_back(Ball::from_integer(z, prec));
  return m;
}

BallMatrix transpose(const BallMatrix& a) {
  if (a.empty()) return a;
  BallMatrix t(a[0].size(), BallVector(a.size(), Ball(a[0][0].prec())));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

BallMatrix mul(const BallMatrix& a, const BallMatrix& b) {
  if (a.empty()) return {};
  size_t inner = b.size();
  if (a[0].size() != inner) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  size_t cols = inner ? b[0].size() : 0;
  Prec p = std::max(min_prec(a), min_prec(b));
  BallMatrix c(a.size(), BallVector(cols, Ball(p)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < cols; ++j) {
      Ball s(p);
      for (size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
      c[i][j] = std::move(s);
    }
  return c;
}

BallVector mul(const BallMatrix& a, const BallVector& v) {
  BallVector r;
  for (const auto& row : a) {
    if (row.size() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Ball s(row.empty() ? 53 : row[0].prec());
    for (size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
    r.push_back(std::move(s));
  }
  return r;
}

BallMatrix scale(const BallMatrix& a, const Ball& s) {
  BallMatrix r = a;
  for (auto& row : r)
    for (auto& x : row) x = x * s;
  return r;
}

Prec min_prec(const BallMatrix& a) {
  Prec p = 0;
  for (const auto& row : a)
    for (const auto& x : row) p = p == 0 ? x.prec() : std::min(p, x.prec());
  return p == 0 ? 53 : p;
}

Ball det(const BallMatrix& a0) {
  size_t n = a0.size();
  Prec prec = min_prec(a0);
  if (n == 0) return Ball(1, prec);
  BallMatrix a = a0;
  Ball d(1, prec);
  for (size_t c = 0; c < n; ++c) {
    if (a[c].size() != n) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    size_t p = c;
    for (size_t i = c + 1; i < n; ++i)
      if (abs(a[p][c].mid()) < abs(a[i][c].mid())) p = i;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    if (a[c][c].contains_zero()) {
      // Hadamard bound on the remaining Schur complement.
      Real bound(Ball::kRadPrec);
      mpfr_set_ui(bound.get(), 1, MPFR_RNDU);
      for (size_t i = c; i < n; ++i) {
        Real row(Ball::kRadPrec);
        for (size_t j = c; j < n; ++j) {
          Real m = a[i][j].mag();
          mpfr_sqr(m.get(), m.get(), MPFR_RNDU);
          mpfr_add(row.get(), row.get(), m.get(), MPFR_RNDU);
        }
        mpfr_sqrt(row.get(), row.get(), MPFR_RNDU);
        mpfr_mul(bound.get(), bound.get(), row.get(), MPFR_RNDU);
      }
      mpfr_mul(bound.get(), bound.get(), d.mag().get(), MPFR_RNDU);
      return Ball(Real(prec), bound);
    }
    d = d * a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      Ball f = a[i][c] / a[c][c];
      for (size_t j = c + 1; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

BallVector solve(const BallMatrix& a0, const BallVector& b0) {
  size_t n = a0.size();
  if (b0.size() != n) fail(ErrorCode::DimensionMismatch, "solve shape mismatch");
  BallMatrix a = a0;
  BallVector b = b0;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    for (size_t i = c + 1; i < n; ++i)
      if (abs(a[p][c].mid()) < abs(a[i][c].mid())) p = i;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    if (a[c][c].contains_zero()) fail(ErrorCode::PrecisionExhausted, "pivot not separated from zero");
    for (size_t i = c + 1; i < n; ++i) {
      Ball f = a[i][c] / a[c][c];
      for (size_t j = c + 1; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  BallVector x(n, Ball(min_prec(a0)));
  for (size_t i = n; i-- > 0;) {
    Ball s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

BallMatrix inverse(const BallMatrix& a) {
  size_t n = a.size();
  Prec p = min_prec(a);
  BallMatrix inv(n, BallVector(n, Ball(p)));
  for (size_t j = 0; j < n; ++j) {
    BallVector e(n, Ball(p));
    e[j] = Ball(1, p);
    BallVector col = solve(a, e);
    for (size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

bool is_positive_definite(const BallMatrix& a) {
  size_t n = a.size();
  Prec p = min_prec(a);
  std::vector<Ball> d;
  BallMatrix l(n, BallVector(n, Ball(p)));
  for (size_t k = 0; k < n; ++k) {
    Ball dk = a[k][k];
    for (size_t j = 0; j < k; ++j) dk -= sqr(l[k][j]) * d[j];
    if (!dk.is_positive()) return false;
    d.push_back(dk);
    for (size_t i = k + 1; i < n; ++i) {
      Ball s = a[i][k];
      for (size_t j = 0; j < k; ++j) s -= l[i][j] * l[k][j] * d[j];
      l[i][k] = s / dk;
    }
  }
  return true;
}

bool is_symmetric(const BallMatrix& a) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!a[i][j].overlaps(a[j][i])) return false;
  }
  return true;
}

Real max_abs_diff(const BallMatrix& a, const BallMatrix& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
  Real m(Ball::kRadPrec);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
    for (size_t j = 0; j < a[i].size(); ++j) {
      Real v = (a[i][j] - b[i][j]).mag();
      if (m < v) m = v;
    }
  }
  return m;
}

Real max_abs(const BallMatrix& a) {
  Real m(Ball::kRadPrec);
  for (const auto& row : a)
    for (const auto& x : row) {
      Real v = x.mag();
      if (m < v) m = v;
    }
  return m;
}

ComplexVector solve(ComplexMatrix a, ComplexVector b) {
  size_t n = a.size();
  if (b.size() != n) fail(ErrorCode::DimensionMismatch, "solve shape mismatch");
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    Real best = a[c][c].norm2();
    for (size_t i = c + 1; i < n; ++i) {
      Real v = a[i][c].norm2();
      if (best < v) {
        best = v;
        p = i;
      }
    }
    if (best.is_zero()) fail(ErrorCode::DomainError, "singular complex system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Complex f = a[i][c] / a[c][c];
      for (size_t j = c + 1; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  ComplexVector x(n, Complex(b.empty() ? 53 : b[0].prec()));
  for (size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace unitlat
