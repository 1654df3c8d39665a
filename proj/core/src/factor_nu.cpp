#include "unitlat/factor_nu.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "unitlat/error.hpp"

namespace unitlat {

namespace {

using cd = std::complex<double>;

Complex czero(Prec p) { return Complex(p); }

ComplexVector with_prec(const ComplexVector& a, Prec p) {
  ComplexVector r;
  for (const auto& z : a) r.push_back(z.with_prec(p));
  return r;
}

ComplexVector unit_element(size_t m, Prec p) {
  ComplexVector e(m, czero(p));
  e[0] = Complex(1, p);
  return e;
}

// e_0 = N_G / |G|
ComplexVector trivial_idempotent(size_t m, Prec p) {
  ComplexVector e(m, czero(p));
  Real v = Real(1, p) / Real(static_cast<long>(m), p);
  for (auto& z : e) z = Complex(v, Real(p));
  return e;
}

ComplexVector add(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ComplexVector scale(const ComplexVector& a, const Complex& s) {
  ComplexVector r;
  for (const auto& z : a) r.push_back(z * s);
  return r;
}

Real max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  Real m(0, a.empty() ? 53 : a[0].prec());
  for (size_t i = 0; i < a.size(); ++i) m = max(m, (a[i] - b[i]).abs());
  return m;
}

Real max_abs(const ComplexVector& a) {
  Real m(0, a.empty() ? 53 : a[0].prec());
  for (const auto& z : a) m = max(m, z.abs());
  return m;
}

// Left multiplication matrix of a on C[G]: (a y)(x) = sum_y a(x y^-1) y(y).
ComplexMatrix left_matrix(const PermGroup& g, const ComplexVector& a) {
  size_t m = g.order();
  ComplexMatrix l(m, ComplexVector(m, czero(a[0].prec())));
  for (size_t y = 0; y < m; ++y)
    for (size_t x = 0; x < m; ++x) l[g.mul(x, y)][y] = a[x];
  return l;
}

// Inverse in C[G] (two-sided for a finite-dimensional algebra).
ComplexVector inverse_full(const PermGroup& g, const ComplexVector& a) {
  Prec p = a[0].prec();
  return solve(left_matrix(g, a), unit_element(g.order(), p));
}

std::vector<cd> spectrum(const PermGroup& g, const ComplexVector& a) {
  size_t m = g.order();
  Eigen::MatrixXcd l(static_cast<long>(m), static_cast<long>(m));
  ComplexMatrix lm = left_matrix(g, a);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) l(static_cast<long>(i), static_cast<long>(j)) = cd(lm[i][j].re.to_double(), lm[i][j].im.to_double());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(l, false);
  if (es.info() != Eigen::Success) fail(ErrorCode::SingularBlock, "eigenvalue computation failed");
  std::vector<cd> out;
  for (long i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

double angular_distance_to_pi(double a) {
  double d = std::remainder(a - M_PI, 2 * M_PI);
  return std::fabs(d);
}

// Normalized residual of nu bar(nu) - eta, in complex ball arithmetic.
Real certified_residual(const PermGroup& g, const ComplexVector& nu, const ComplexVector& eta) {
  size_t m = g.order();
  Prec p = nu[0].prec();
  std::vector<ComplexBall> a, b;
  for (size_t i = 0; i < m; ++i) a.emplace_back(nu[i]);
  for (size_t i = 0; i < m; ++i) b.emplace_back(nu[g.inv(i)]);
  std::vector<ComplexBall> prod(m, ComplexBall(p));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) prod[g.mul(i, j)] = prod[g.mul(i, j)] + a[i] * b[j];
  ComplexBall mean(p);
  for (size_t i = 0; i < m; ++i) {
    prod[i] = prod[i] - ComplexBall(eta[i].with_prec(p));
    mean = mean + prod[i];
  }
  Ball inv_m = Ball(1, p) / Ball(static_cast<long>(m), p);
  mean = mean * inv_m;
  Real r(0, 64);
  for (size_t i = 0; i < m; ++i) r = max(r, (prod[i] - mean).mag());
  return r;
}

}  // namespace

ComplexVector act(const Perm& p, const ComplexVector& w) {
  ComplexVector r = w;
  for (size_t i = 0; i < w.size(); ++i) r[static_cast<size_t>(p[i])] = w[i];
  return r;
}

ComplexVector act(const PermGroup& g, const ComplexVector& a, const ComplexVector& w) {
  ComplexVector r(w.size(), czero(w[0].prec()));
  for (size_t k = 0; k < g.order(); ++k) {
    ComplexVector gw = act(g.element(k), w);
    for (size_t i = 0; i < w.size(); ++i) r[i] += a[k] * gw[i];
  }
  return r;
}

ComplexMatrix gram_of_vector(const PermGroup& g, const ComplexVector& w) {
  size_t m = g.order();
  require(w.size() == static_cast<size_t>(g.degree()), ErrorCode::DimensionMismatch, "vector length != degree");
  std::vector<ComplexVector> orbit;
  for (size_t k = 0; k + 1 < m; ++k) orbit.push_back(act(g.element(k), w));
  ComplexMatrix f(m - 1, ComplexVector(m - 1, czero(w[0].prec())));
  for (size_t i = 0; i + 1 < m; ++i)
    for (size_t j = i; j + 1 < m; ++j) {
      Complex s = czero(w[0].prec());
      for (size_t t = 0; t < w.size(); ++t) s += orbit[i][t] * orbit[j][t];
      f[i][j] = s;
      f[j][i] = s;
    }
  return f;
}

ComplexVector inverse_r(const PermGroup& g, const ComplexVector& a) {
  Prec p = a[0].prec();
  size_t m = g.order();
  ComplexVector e0 = trivial_idempotent(m, p);
  ComplexVector inv = inverse_full(g, add(ga_normalize(a, czero(p)), e0));
  return ga_normalize(inv, czero(p));
}

FactorNuResult factor_nu(const PermGroup& g, const ComplexVector& eta_in, Prec prec) {
  size_t m = g.order();
  require(eta_in.size() == m, ErrorCode::DimensionMismatch, "eta must have |G| coefficients");
  require(m >= 2, ErrorCode::InvalidArgument, "R[G] is zero for the trivial group");
  Prec wp = prec + 64;
  ComplexVector eta = ga_normalize(with_prec(eta_in, wp), czero(wp));
  Real tol = Real::pow2(-static_cast<long>(prec / 2), wp);
  if (max_abs_diff(eta, ga_bar(g, eta)) > tol * max(Real(1, wp), max_abs(eta)))
    fail(ErrorCode::InvalidArgument, "eta is not bar-fixed");

  ComplexVector e0 = trivial_idempotent(m, wp);
  std::vector<cd> spec = spectrum(g, add(eta, e0));
  double smax = 0, smin = INFINITY;
  for (const auto& l : spec) {
    smax = std::max(smax, std::abs(l));
    smin = std::min(smin, std::abs(l));
  }
  if (smin <= 1e-12 * smax) fail(ErrorCode::SingularBlock, "eta is not invertible in R_C[G]");
  // rotate the whole spectrum (and the fixed trivial eigenvalue 1) away from the cut
  std::vector<double> args;
  for (const auto& l : spec) args.push_back(std::arg(l));
  double best_phi = 0, best_gap = -1;
  for (int k = 0; k < 720; ++k) {
    double phi = -M_PI + k * (M_PI / 360);
    double gap = angular_distance_to_pi(0.0);
    for (double a : args) gap = std::min(gap, angular_distance_to_pi(a + phi));
    if (gap > best_gap) {
      best_gap = gap;
      best_phi = phi;
    }
  }
  FactorNuResult out;
  out.phase = Real::from_double(best_phi, 64);
  Real phi = Real::from_double(best_phi, wp);
  Complex rot = polar(Real(1, wp), phi);
  Complex unrot = polar(Real(1, wp), -phi / 2);

  ComplexVector y = add(scale(eta, rot), e0);
  ComplexVector z = unit_element(m, wp);
  Complex half(Real::from_double(0.5, wp), Real(wp));
  Real stop = Real::pow2(-static_cast<long>(wp) + 16, wp);
  for (size_t it = 0; it < 200; ++it) {
    ComplexVector yi = inverse_full(g, y), zi = inverse_full(g, z);
    ComplexVector y2 = scale(add(y, zi), half);
    ComplexVector z2 = scale(add(z, yi), half);
    Real change = max_abs_diff(y2, y);
    y = std::move(y2);
    z = std::move(z2);
    out.iterations = it + 1;
    if (change <= stop * max(Real(1, wp), max_abs(y))) break;
  }
  out.nu = ga_normalize(scale(y, unrot), czero(wp));
  out.residual = certified_residual(g, out.nu, eta);
  if (!(out.residual < Real::pow2(-static_cast<long>(prec / 2), 64)))
    fail(ErrorCode::ResidualTooLarge, "factor_nu residual " + out.residual.to_string(6));
  return out;
}

GramPreimage solve_gram_preimage(const PermGroup& g, const ComplexMatrix& b, const ComplexVector& w, Prec prec) {
  size_t m = g.order();
  require(b.size() + 1 == m, ErrorCode::DimensionMismatch, "form size does not match |G| - 1");
  Prec wp = prec + 64;
  ComplexVector ww = with_prec(w, wp);
  ComplexVector total(ww.size(), czero(wp));
  for (size_t k = 0; k < m; ++k) total = add(total, act(g.element(k), ww));
  Real tol = Real::pow2(-static_cast<long>(prec / 2), wp);
  if (max_abs(total) > tol * max(Real(1, wp), max_abs(ww)))
    fail(ErrorCode::InvalidArgument, "reference vector has a G-fixed component");

  ComplexMatrix bw;
  for (const auto& row : b) bw.push_back(with_prec(row, wp));
  ComplexVector eta_b = eta_from_form(g, bw, czero(wp));
  ComplexMatrix back = form_from_eta(g, eta_b, czero(wp));
  Real scale_b(1, wp);
  for (const auto& row : bw) scale_b = max(scale_b, max_abs(row));
  for (size_t i = 0; i < back.size(); ++i)
    if (max_abs_diff(back[i], bw[i]) > tol * scale_b)
      fail(ErrorCode::InvarianceViolated, "target form is not a symmetric G-invariant form");

  ComplexVector eta_w = eta_from_form(g, gram_of_vector(g, ww), czero(wp));
  FactorNuResult f1 = factor_nu(g, eta_w, prec + 32);
  FactorNuResult f2 = factor_nu(g, eta_b, prec + 32);
  GramPreimage out;
  out.nu = ga_normalize(ga_mul(g, f2.nu, inverse_r(g, f1.nu), czero(wp)), czero(wp));
  out.x = act(g, out.nu, ww);

  // certified residual of Gr_x against b
  std::vector<std::vector<ComplexBall>> orbit;
  for (size_t k = 0; k + 1 < m; ++k) {
    std::vector<ComplexBall> v;
    for (const auto& z : act(g.element(k), out.x)) v.emplace_back(z);
    orbit.push_back(std::move(v));
  }
  out.residual = Real(0, 64);
  for (size_t i = 0; i + 1 < m; ++i)
    for (size_t j = i; j + 1 < m; ++j) {
      ComplexBall s(wp);
      for (size_t t = 0; t < out.x.size(); ++t) s = s + orbit[i][t] * orbit[j][t];
      s = s - ComplexBall(bw[i][j]);
      out.residual = max(out.residual, s.mag());
    }
  if (!(out.residual < Real::pow2(-static_cast<long>(prec / 2), 64) * scale_b))
    fail(ErrorCode::ResidualTooLarge, "Gram preimage residual " + out.residual.to_string(6));
  return out;
}

}  // namespace unitlat
