#pragma once

#include <vector>

#include "unitlat/complex.hpp"
#include "unitlat/linalg.hpp"
#include "unitlat/perm_group.hpp"

namespace unitlat {

// Elements of F[G] are dense coefficient vectors indexed by the element
// order of PermGroup (identity at 0). R_F[G] = F[G]/(N_G) is represented
// by mean-zero vectors; its fixed basis B is the image of g_0..g_{m-2}
// (every element except the last), with coordinates c_i = a_i - a_{m-1}.

namespace detail {
inline Rational div_by(const Rational& x, long d) { return x / d; }
inline Complex div_by(const Complex& x, long d) { return x / Real(d, x.prec()); }
inline Ball div_by(const Ball& x, long d) { return x / d; }
inline Rational mul_by(const Rational& x, long d) { return x * d; }
inline Complex mul_by(const Complex& x, long d) { return x * d; }
inline Ball mul_by(const Ball& x, long d) { return x * d; }
}  // namespace detail

template <class T>
std::vector<T> ga_mul(const PermGroup& g, const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  size_t n = g.order();
  std::vector<T> r(n, zero);
  for (size_t i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<T, Rational>) {
      if (a[i] == 0) continue;
    }
    for (size_t j = 0; j < n; ++j) r[g.mul(i, j)] += a[i] * b[j];
  }
  return r;
}

template <class T>
std::vector<T> ga_bar(const PermGroup& g, const std::vector<T>& a) {
  std::vector<T> r = a;
  for (size_t i = 0; i < a.size(); ++i) r[g.inv(i)] = a[i];
  return r;
}

template <class T>
T ga_augmentation(const std::vector<T>& a, const T& zero) {
  T s = zero;
  for (const auto& x : a) s += x;
  return s;
}

// Mean-zero representative modulo N_G.
template <class T>
std::vector<T> ga_normalize(const std::vector<T>& a, const T& zero) {
  T mean = detail::div_by(ga_augmentation(a, zero), static_cast<long>(a.size()));
  std::vector<T> r = a;
  for (auto& x : r) x -= mean;
  return r;
}

template <class T>
std::vector<T> to_r_coords(const std::vector<T>& a) {
  std::vector<T> c;
  for (size_t i = 0; i + 1 < a.size(); ++i) c.push_back(a[i] - a.back());
  return c;
}

template <class T>
std::vector<T> from_r_coords(const std::vector<T>& c, const T& zero) {
  std::vector<T> a = c;
  a.push_back(zero);
  return ga_normalize(a, zero);
}

// Trace of left multiplication on R_F[G]: |G| a(1) - eps(a).
template <class T>
T trace_r(const std::vector<T>& a, const T& zero) {
  return detail::mul_by(a[0], static_cast<long>(a.size())) - ga_augmentation(a, zero);
}

// Matrix of the trace form Tr_eta(x, y) = trace(x eta bar(y)) on the basis B.
template <class T>
std::vector<std::vector<T>> form_from_eta(const PermGroup& g, const std::vector<T>& eta, const T& zero) {
  size_t m = g.order();
  T eps = ga_augmentation(eta, zero);
  std::vector<std::vector<T>> f(m - 1, std::vector<T>(m - 1, zero));
  for (size_t i = 0; i + 1 < m; ++i)
    for (size_t j = 0; j + 1 < m; ++j)
      f[i][j] = detail::mul_by(eta[g.mul(g.inv(i), j)], static_cast<long>(m)) - eps;
  return f;
}

// Inverse of form_from_eta for invariant forms: the mean-zero bar-fixed eta
// with eta(g_j) = f_0j / |G|.
template <class T>
std::vector<T> eta_from_form(const PermGroup& g, const std::vector<std::vector<T>>& f, const T& zero) {
  size_t m = g.order();
  std::vector<T> eta;
  T s = zero;
  for (size_t j = 0; j + 1 < m; ++j) {
    eta.push_back(detail::div_by(f[0][j], static_cast<long>(m)));
    s += eta.back();
  }
  eta.push_back(-s);
  return eta;
}

// Column j holds the R-coordinates of a * g_j.
RationalMatrix left_mult_matrix_r(const PermGroup& g, const RationalVector& a);
// Matrix of left multiplication by a group element on R-coordinates.
RationalMatrix element_action_r(const PermGroup& g, size_t element);
RationalVector group_element(const PermGroup& g, size_t element);
// N_H = sum of the subgroup's elements.
RationalVector norm_element(const PermGroup& g, const Subgroup& h);
// Rows: R-coordinates of a basis of the right ideal N_H R_Q[G].
RationalMatrix norm_ideal_basis(const PermGroup& g, const Subgroup& h);

// Transforms a form matrix on B under y -> a y: returns L^T F L.
RationalMatrix pullback(const RationalMatrix& f, const RationalMatrix& l);
BallMatrix pullback(const BallMatrix& f, const RationalMatrix& l);

}  // namespace unitlat
