#include "unitlat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "unitlat/error.hpp"

namespace unitlat {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  normalize();
}

void RationalPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v[static_cast<size_t>(k)] = c;
  return RationalPoly(std::move(v));
}

namespace {

Rational parse_rational_token(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::InvalidArgument, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

RationalPoly RationalPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(ErrorCode::InvalidArgument, "empty polynomial");
  std::map<int, Rational> terms;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    if (term.empty()) fail(ErrorCode::InvalidArgument, "malformed polynomial '" + std::string(text) + "'");
    Rational coeff(1);
    int deg = 0;
    size_t xpos = term.find('x');
    if (xpos == std::string::npos) {
      coeff = parse_rational_token(term);
    } else {
      std::string pre = term.substr(0, xpos);
      if (!pre.empty()) {
        if (pre.back() != '*') fail(ErrorCode::InvalidArgument, "expected '*' in term '" + term + "'");
        pre.pop_back();
        coeff = parse_rational_token(pre);
      }
      std::string post = term.substr(xpos + 1);
      if (post.empty()) {
        deg = 1;
      } else if (post[0] == '^') {
        try {
          deg = std::stoi(post.substr(1));
        } catch (const std::exception&) {
          fail(ErrorCode::InvalidArgument, "bad exponent in term '" + term + "'");
        }
        if (deg < 0) fail(ErrorCode::InvalidArgument, "negative exponent in term '" + term + "'");
      } else {
        fail(ErrorCode::InvalidArgument, "malformed term '" + term + "'");
      }
    }
    terms[deg] += sign * coeff;
  }
  int top = terms.rbegin()->first;
  std::vector<Rational> c(static_cast<size_t>(top) + 1, Rational(0));
  for (auto& [d, q] : terms) c[static_cast<size_t>(d)] = q;
  return RationalPoly(std::move(c));
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& RationalPoly::leading() const {
  if (c_.empty()) fail(ErrorCode::DomainError, "zero polynomial has no leading coefficient");
  return c_.back();
}

bool RationalPoly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

RationalPoly RationalPoly::monic() const {
  if (c_.empty()) return *this;
  Rational l = c_.back();
  std::vector<Rational> v = c_;
  for (auto& q : v) q /= l;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return RationalPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const {
  RationalPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * q + constant(c_[i]);
  return r;
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Ball RationalPoly::eval(const Ball& x) const {
  Ball r(x.prec());
  for (size_t i = c_.size(); i-- > 0;) r = r * x + Ball::from_rational(c_[i], x.prec());
  return r;
}

ComplexBall RationalPoly::eval(const ComplexBall& x) const {
  ComplexBall r(x.prec());
  for (size_t i = c_.size(); i-- > 0;) r = r * x + ComplexBall(Ball::from_rational(c_[i], x.prec()));
  return r;
}

Complex RationalPoly::eval(const Complex& x) const {
  Complex r(x.prec());
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * x;
    r.re += Real::from_rational(c_[i], x.prec());
  }
  return r;
}

std::pair<Complex, Complex> RationalPoly::eval_with_derivative(const Complex& x) const {
  Complex p(x.prec()), d(x.prec());
  for (size_t i = c_.size(); i-- > 0;) {
    d = d * x + p;
    p = p * x;
    p.re += Real::from_rational(c_[i], x.prec());
  }
  return {p, d};
}

std::pair<ComplexBall, ComplexBall> RationalPoly::eval_with_derivative(const ComplexBall& x) const {
  ComplexBall p(x.prec()), d(x.prec());
  for (size_t i = c_.size(); i-- > 0;) {
    d = d * x + p;
    p = p * x + ComplexBall(Ball::from_rational(c_[i], x.prec()));
  }
  return {p, d};
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    Rational a = abs(q);
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (!unit || i == 0) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& q : v) q = -q;
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return RationalPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const RationalPoly& a, const Rational& b) {
  std::vector<Rational> v = a.c_;
  for (auto& q : v) q *= b;
  return RationalPoly(std::move(v));
}

RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DomainError, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {RationalPoly(), a};
  std::vector<Rational> q(static_cast<size_t>(da - db) + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int k = da; k >= db; --k) {
    Rational c = r[static_cast<size_t>(k)] / lb;
    q[static_cast<size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    RationalPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

bool is_squarefree(const RationalPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<Integer> primitive_integer_coeffs(const RationalPoly& p) {
  Integer l(1);
  for (const auto& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> v;
  Integer g(0);
  for (const auto& q : p.coeffs()) {
    Rational s = q * Rational(l);
    v.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  if (g != 0) {
    if (!v.empty() && v.back() < 0) g = -g;
    for (auto& z : v) z /= g;
  }
  return v;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, int> f;
  factor_into(abs(n), f);
  std::vector<Integer> ds{1};
  for (auto& [p, e] : f) {
    size_t sz = ds.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  std::vector<Integer> c = primitive_integer_coeffs(p);
  size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) roots.emplace_back(0);
  if (lo + 1 >= c.size()) return roots;
  std::vector<Integer> ps = divisors(c[lo]);
  std::vector<Integer> qs = divisors(c.back());
  for (const auto& q : qs) {
    for (const auto& a : ps) {
      for (int s : {1, -1}) {
        Rational cand(a * s, q);
        cand.canonicalize();
        if (cand.get_den() != q) continue;
        if (p.eval(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

RationalPoly compose_mod(const RationalPoly& outer, const RationalPoly& inner, const RationalPoly& m) {
  RationalPoly in = inner % m;
  RationalPoly r;
  const auto& c = outer.coeffs();
  for (size_t i = c.size(); i-- > 0;) r = (r * in + RationalPoly::constant(c[i])) % m;
  return r;
}

}  // namespace unitlat
