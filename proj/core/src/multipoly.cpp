#include "unitlat/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "unitlat/error.hpp"

namespace unitlat {

namespace {

int degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Monomial padded(Monomial m, size_t n) {
  m.resize(n, 0);
  return m;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MultiPoly run(size_t nvars) {
    std::vector<std::pair<Monomial, Rational>> terms;
    size_t maxvar = 0;
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected + or -");
      }
      first = false;
      Rational c(sign);
      Monomial m;
      bool any = false;
      while (true) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
          c *= number();
        } else if (peek() == 'x') {
          ++pos_;
          size_t idx = static_cast<size_t>(integer());
          int e = 1;
          skip();
          if (peek() == '^') {
            ++pos_;
            skip();
            e = static_cast<int>(integer());
          }
          if (m.size() <= idx) m.resize(idx + 1, 0);
          m[idx] += e;
          maxvar = std::max(maxvar, idx + 1);
        } else {
          error("expected a number or a variable");
        }
        any = true;
        skip();
        if (peek() != '*') break;
        ++pos_;
      }
      if (!any) error("empty term");
      terms.emplace_back(std::move(m), c);
      skip();
    }
    MultiPoly p(std::max(nvars, maxvar));
    for (auto& [m, c] : terms) p.add_term(padded(m, p.nvars()), c);
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::InvalidArgument, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  long integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 9) error("integer too long");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Rational number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Integer num(std::string(s_.substr(start, pos_ - start)));
    Integer den(1);
    if (peek() == '/') {
      ++pos_;
      size_t d0 = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d0 == pos_) error("expected a denominator");
      den = Integer(std::string(s_.substr(d0, pos_ - d0)));
      if (den == 0) error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view s_;
  size_t pos_ = 0;
};

MultiPoly product(const std::vector<MultiPoly>& f, size_t lo, size_t hi) {
  if (hi - lo == 1) return f[lo];
  size_t mid = lo + (hi - lo) / 2;
  return product(f, lo, mid) * product(f, mid, hi);
}

}  // namespace

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t i) {
  if (i >= nvars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rational(1));
  return p;
}

MultiPoly MultiPoly::linear_form(const RationalVector& c) {
  MultiPoly p(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    Monomial m(c.size(), 0);
    m[i] = 1;
    p.add_term(m, c[i]);
  }
  return p;
}

MultiPoly MultiPoly::parse(std::string_view text, size_t nvars) { return Parser(text).run(nvars); }

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) fail(ErrorCode::DimensionMismatch, "monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::negate_variable(size_t i) const {
  if (i >= nvars_) fail(ErrorCode::InvalidArgument, "variable index out of range");
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, m[i] % 2 ? Rational(-c) : c);
  return r;
}

MultiPoly MultiPoly::square_substitute() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    for (auto& e : d) e *= 2;
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

bool MultiPoly::is_even_in(size_t i) const {
  return std::all_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] % 2 == 0; });
}

bool MultiPoly::is_even() const {
  for (size_t i = 0; i < nvars_; ++i)
    if (!is_even_in(i)) return false;
  return true;
}

Rational MultiPoly::eval(const RationalVector& x) const {
  if (x.size() != nvars_) fail(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  Rational s(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= x[i];
    s += t;
  }
  return s;
}

Ball MultiPoly::eval(const BallVector& x) const {
  if (x.size() != nvars_) fail(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  Prec prec = x.empty() ? 128 : x[0].prec();
  Ball s(prec);
  for (const auto& [m, c] : terms_) {
    Ball t = Ball::from_rational(c, prec);
    for (size_t i = 0; i < nvars_; ++i)
      if (m[i] > 0) t *= pow(x[i], m[i]);
    s += t;
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
  MultiPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.nvars_);
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
  MultiPoly r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const Rational& c) {
  MultiPoly r(a.nvars_);
  if (c == 0) return r;
  for (const auto& [m, x] : a.terms_) r.terms_.emplace(m, x * c);
  return r;
}

MultiPoly partial_sign_product(const RationalVector& c, const std::vector<size_t>& vars) {
  if (vars.size() > kMaxSignVariables)
    fail(ErrorCode::BudgetExceeded, std::to_string(vars.size()) + " sign variables exceed the limit of " +
                                        std::to_string(kMaxSignVariables));
  for (size_t v : vars)
    if (v >= c.size()) fail(ErrorCode::InvalidArgument, "sign variable out of range");
  if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; }))
    fail(ErrorCode::InvalidArgument, "linear form is zero");
  std::vector<MultiPoly> factors;
  for (size_t mask = 0; mask < (size_t{1} << vars.size()); ++mask) {
    RationalVector s = c;
    for (size_t b = 0; b < vars.size(); ++b)
      if (mask >> b & 1) s[vars[b]] = -s[vars[b]];
    factors.push_back(MultiPoly::linear_form(s));
  }
  return product(factors, 0, factors.size());
}

MultiPoly sign_orbit_product(const RationalVector& c) {
  if (c.size() < 2) fail(ErrorCode::InvalidArgument, "need at least two coefficients");
  if (c.size() - 1 > kMaxSignVariables)
    fail(ErrorCode::BudgetExceeded, "sign orbit of " + std::to_string(c.size()) + " variables has more than 2^" +
                                        std::to_string(kMaxSignVariables) + " factors");
  std::vector<size_t> vars(c.size() - 1);
  std::iota(vars.begin(), vars.end(), size_t{1});
  MultiPoly h = partial_sign_product(c, vars);
  if (!h.is_even()) fail(ErrorCode::NotEven, "sign orbit product is not even: " + h.to_string());
  return h;
}

MultiPoly desquare(const MultiPoly& h) {
  MultiPoly r(h.nvars());
  for (const auto& [m, c] : h.terms()) {
    Monomial d = m;
    for (auto& e : d) {
      if (e % 2) fail(ErrorCode::NotEven, "term with an odd exponent in " + h.to_string());
      e /= 2;
    }
    r.add_term(d, c);
  }
  return r;
}

const char* to_string(VanishingVerdict v) {
  switch (v) {
    case VanishingVerdict::Vanishes: return "vanishes";
    case VanishingVerdict::Separated: return "separated";
    case VanishingVerdict::Undecided: return "undecided";
  }
  return "?";
}

VanishingCheck vanishing_check(const MultiPoly& p, const BallVector& point, long bits) {
  VanishingCheck out;
  out.value = p.eval(point);
  out.bits = bits;
  if (out.value.mag() < Real::pow2(-bits, Ball::kRadPrec))
    out.verdict = VanishingVerdict::Vanishes;
  else if (!out.value.contains_zero())
    out.verdict = VanishingVerdict::Separated;
  return out;
}

}  // namespace unitlat
