#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unitlat/linalg.hpp"

namespace unitlat {

using Monomial = std::vector<int>;

// Graded lexicographic order: total degree first, then lex on exponents.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial in x0, ..., x(n-1) with exact rational coefficients; zero
// coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  explicit MultiPoly(size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(size_t nvars, const Rational& c);
  static MultiPoly variable(size_t nvars, size_t i);
  // sum c_i x_i
  static MultiPoly linear_form(const RationalVector& c);
  // Plain monomial syntax, e.g. "4*x0^2 - 9*x1^2 + 1/2*x0*x2". The variable
  // count is max(nvars, largest index + 1).
  static MultiPoly parse(std::string_view text, size_t nvars = 0);

  size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  // x_i -> -x_i
  MultiPoly negate_variable(size_t i) const;
  // x_i -> x_i^2 for every i
  MultiPoly square_substitute() const;
  bool is_even_in(size_t i) const;
  bool is_even() const;

  Rational eval(const RationalVector& x) const;
  Ball eval(const BallVector& x) const;

  // Leading term first, e.g. "x0^2 - x1^2".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Rational& c);

 private:
  size_t nvars_ = 0;
  Terms terms_;
};

constexpr size_t kMaxSignVariables = 8;

// prod over sign vectors s in {+-1}^n of c_0 x_0 + s_1 c_1 x_1 + ... + s_n c_n x_n,
// i.e. the sign group modulo global negation. The result is checked to be
// even in every variable. Throws BudgetExceeded for n > 8.
MultiPoly sign_orbit_product(const RationalVector& c);

// Product over sign changes of the listed variables only (2^|vars| factors).
MultiPoly partial_sign_product(const RationalVector& c, const std::vector<size_t>& vars);

// Halves every exponent. Throws NotEven.
MultiPoly desquare(const MultiPoly& h);

enum class VanishingVerdict { Vanishes, Separated, Undecided };

const char* to_string(VanishingVerdict v);

struct VanishingCheck {
  Ball value;
  VanishingVerdict verdict = VanishingVerdict::Undecided;
  long bits = 0;  // Vanishes: |value| < 2^(-bits) including the radius
};

// Certified evaluation. Vanishes when the whole ball lies below 2^(-bits),
// Separated when it excludes zero.
VanishingCheck vanishing_check(const MultiPoly& p, const BallVector& point, long bits);

}  // namespace unitlat
