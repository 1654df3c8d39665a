#include "unitlat/real.hpp"

#include <algorithm>
#include <string>

#include "unitlat/error.hpp"

namespace unitlat {

Real::Real(Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_double(double v, Prec prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_integer(const Integer& v, Prec prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
  return r;
}

Real Real::from_rational(const Rational& v, Prec prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), rnd);
  return r;
}

Real Real::parse(std::string_view text, Prec prec, mpfr_rnd_t rnd) {
  Real r(prec);
  std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, rnd);
  if (s.empty() || end == s.c_str() || *end != '\0')
    fail(ErrorCode::InvalidArgument, "cannot parse real number '" + s + "'");
  if (!r.is_finite()) fail(ErrorCode::InvalidArgument, "non-finite real '" + s + "'");
  return r;
}

Real Real::pi(Prec prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_const_pi(r.v_, rnd);
  return r;
}

Real Real::pow2(long e, Prec prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

Rational Real::to_rational() const {
  if (!is_finite()) fail(ErrorCode::DomainError, "non-finite value has no rational form");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

Integer Real::round_to_integer() const {
  if (!is_finite()) fail(ErrorCode::DomainError, "cannot round non-finite value");
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

Integer Real::floor_to_integer() const {
  if (!is_finite()) fail(ErrorCode::DomainError, "cannot floor non-finite value");
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

std::string Real::to_string(int digits) const {
  if (is_zero()) return "0";
  size_t n = digits > 0 ? static_cast<size_t>(digits) : mpfr_get_str_ndigits(10, prec());
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, n, v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m.erase(0, 1);
  std::string out = neg ? "-" : "";
  out += m.substr(0, 1);
  if (m.size() > 1) {
    std::string frac = m.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  if (e - 1 != 0) out += "e" + std::to_string(static_cast<long>(e - 1));
  return out;
}

Real Real::with_prec(Prec p, mpfr_rnd_t rnd) const {
  Real r(p);
  mpfr_set(r.v_, v_, rnd);
  return r;
}

Real& Real::operator+=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.prec());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.prec());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.prec());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

}  // namespace unitlat
