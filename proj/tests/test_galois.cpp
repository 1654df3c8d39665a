#include <gtest/gtest.h>

#include <set>

#include "unitlat/error.hpp"
#include "unitlat/galois.hpp"
#include "unitlat/gram_form.hpp"
#include "unitlat/subfield.hpp"

using namespace unitlat;

namespace {

constexpr Prec kPrec = 256;

NumberField field(const char* poly) { return NumberField::build(RationalPoly::parse(poly), kPrec); }

FieldElement elt(const NumberField& k, const char* poly) { return k.element(RationalPoly::parse(poly)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

// p(q(x)) reduced mod p by plain polynomial division.
bool kills(const RationalPoly& p, const RationalPoly& q) { return (p.compose(q) % p).is_zero(); }

double dot(const BallVector& a, const BallVector& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].mid().to_double() * b[i].mid().to_double();
  return s;
}

// Q(sqrt2, sqrt3) with x = sqrt2 + sqrt3: sqrt2 = (x^3 - 9x)/2, sqrt3 = (11x - x^3)/2.
struct Biquadratic {
  NumberField k = field("x^4 - 10*x^2 + 1");
  FieldElement a = elt(k, "1 + 1/2*x^3 - 9/2*x");     // 1 + sqrt2
  FieldElement b = elt(k, "2 + 11/2*x - 1/2*x^3");    // 2 + sqrt3
  FieldElement c = k.one() * Rational(5) + elt(k, "1/2*x^3 - 9/2*x") * elt(k, "11*x - x^3");  // 5 + 2 sqrt6
};

}  // namespace

TEST(GaloisAction, QuadraticIsC2) {
  NumberField k = field("x^2 - 2");
  GaloisAction a = recover_galois_action(k, 128);
  ASSERT_EQ(a.order(), 2u);
  EXPECT_EQ(a.images[0].value(), RationalPoly::x());
  EXPECT_EQ(a.images[1].value(), RationalPoly::parse("-x"));
  EXPECT_EQ(a.group.element(1), (Perm{1, 0}));
}

TEST(GaloisAction, GoldenRatioField) {
  GaloisAction a = recover_galois_action(field("x^2 - x - 1"), 128);
  ASSERT_EQ(a.order(), 2u);
  EXPECT_EQ(a.images[1].value(), RationalPoly::parse("1 - x"));
}

TEST(GaloisAction, CubicOfConductorSeven) {
  NumberField k = field("x^3 + x^2 - 2*x - 1");
  GaloisAction a = recover_galois_action(k, 128);
  ASSERT_EQ(a.order(), 3u);
  std::set<std::string> images;
  for (const auto& im : a.images) {
    EXPECT_TRUE(kills(k.poly(), im.value()));
    images.insert(im.value().to_string());
  }
  EXPECT_TRUE(images.count(RationalPoly::parse("x^2 - 2").to_string()));
  EXPECT_EQ(a.group.exponent(), 3u);
}

TEST(GaloisAction, BiquadraticHasFourExactAutomorphisms) {
  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, 128);
  ASSERT_EQ(a.order(), 4u);
  std::set<std::string> got, want;
  for (const auto& im : a.images) {
    EXPECT_TRUE(kills(f.k.poly(), im.value()));
    got.insert(im.value().to_string());
  }
  for (const char* s : {"x", "-x", "x^3 - 10*x", "10*x - x^3"}) want.insert(RationalPoly::parse(s).to_string());
  EXPECT_EQ(got, want);
  EXPECT_EQ(a.group.exponent(), 2u);
  // the closure data shipped with the golden bundle names the same group
  Subgroup h = a.subgroup({"(1,3)(2,4)"}, "fix_sqrt2");
  EXPECT_EQ(h.order(), 2u);
  FieldElement sqrt2 = elt(f.k, "1/2*x^3 - 9/2*x");
  for (size_t e : h.elements) EXPECT_EQ(a.apply(e, sqrt2), sqrt2);
}

TEST(GaloisAction, CompositionTableMatchesAutomorphisms) {
  for (const char* p : {"x^2 - 3", "x^3 + x^2 - 2*x - 1", "x^4 - 10*x^2 + 1", "x^4 - 4*x^2 + 2"}) {
    NumberField k = field(p);
    GaloisAction a = recover_galois_action(k, 128);
    ASSERT_EQ(a.order(), static_cast<size_t>(k.degree())) << p;
    FieldElement probe = elt(k, "x^2 + 3*x - 1/2");
    for (size_t i = 0; i < a.order(); ++i)
      for (size_t j = 0; j < a.order(); ++j)
        EXPECT_EQ(a.apply(a.group.mul(i, j), probe), a.apply(i, a.apply(j, probe))) << p;
  }
}

TEST(GaloisAction, PermutationsMatchLogVectorsOfConjugates) {
  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, 128);
  FieldElement u = f.a * f.b.pow(2) * f.c;
  BallVector v = log_embed(f.k, u, kPrec);
  for (size_t k = 0; k < a.order(); ++k) {
    BallVector direct = log_embed(f.k, a.apply(k, u), kPrec);
    BallVector permuted = a.act(k, v);
    for (size_t i = 0; i < v.size(); ++i) EXPECT_TRUE(direct[i].overlaps(permuted[i]));
  }
}

TEST(GaloisAction, ConjugateUnitsHaveEqualGram) {
  NumberField k = field("x^3 + x^2 - 2*x - 1");
  GaloisAction a = recover_galois_action(k, 128);
  std::vector<FieldElement> units{elt(k, "x"), elt(k, "x + 1")};
  LogLattice base = log_lattice(k, units, kPrec);
  for (size_t g = 0; g < a.order(); ++g) {
    std::vector<FieldElement> moved;
    for (const auto& u : units) moved.push_back(a.apply(g, u));
    LogLattice l = log_lattice(k, moved, kPrec);
    EXPECT_LT(max_abs_diff(l.gram.entries(), base.gram.entries()).to_double(), 1e-60);
  }
}

TEST(GaloisAction, NonGaloisFields) {
  // totally real cubic with non-square discriminant 229
  EXPECT_EQ(code_of([] { recover_galois_action(field("x^3 - 4*x + 1"), 128); }), ErrorCode::NotGalois);
  EXPECT_EQ(code_of([] { recover_galois_action(field("x^3 - 2"), 128); }), ErrorCode::NotTotallyReal);
}

TEST(GaloisAction, SepticWithPslClosureIsNotGalois) {
  NumberField k = field("x^7 - 2*x^6 - 47*x^5 + 25*x^4 + 755*x^3 + 496*x^2 - 3782*x - 5217");
  EXPECT_EQ(code_of([&] { recover_galois_action(k, 128); }), ErrorCode::NotGalois);
}

TEST(WeakMinkowski, Check) {
  NumberField q2 = field("x^2 - 2");
  GaloisAction a2 = recover_galois_action(q2, 128);
  auto r = weak_minkowski_check(a2, elt(q2, "1 + x"), 128);
  EXPECT_TRUE(r.is_weak_minkowski);
  EXPECT_EQ(r.rank, 1);
  r = weak_minkowski_check(a2, elt(q2, "-1"), 128);
  EXPECT_FALSE(r.is_weak_minkowski);
  EXPECT_EQ(r.rank, 0);

  NumberField c3 = field("x^3 + x^2 - 2*x - 1");
  GaloisAction a3 = recover_galois_action(c3, 128);
  r = weak_minkowski_check(a3, elt(c3, "x"), 128);
  EXPECT_TRUE(r.is_weak_minkowski);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(code_of([&] { weak_minkowski_check(a3, elt(c3, "2"), 128); }), ErrorCode::NotAUnit);
}

TEST(WeakMinkowski, BiquadraticRankCountsCharacters) {
  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, 128);
  // Oracle: rank = number of nontrivial characters chi with sum_g chi(g) Log(g u) != 0.
  // For C2 x C2 the characters are the sign patterns of the three involutions.
  auto oracle = [&](const FieldElement& u) {
    BallVector v = log_embed(f.k, u, 128);
    int rank = 0;
    for (size_t t = 1; t < 4; ++t) {
      std::vector<double> acc(4, 0.0);
      for (size_t g = 0; g < 4; ++g) {
        // chi_t(g) = -1 exactly when g lies outside the subgroup {1, element t}
        double chi = (g == 0 || g == t) ? 1.0 : -1.0;
        BallVector w = a.act(g, v);
        for (size_t i = 0; i < 4; ++i) acc[i] += chi * w[i].mid().to_double();
      }
      double n2 = 0;
      for (double x : acc) n2 += x * x;
      if (n2 > 1e-20) ++rank;
    }
    return rank;
  };
  std::vector<FieldElement> cases{f.a, f.b, f.c, f.a * f.b, f.a * f.c.pow(-2), f.a * f.b * f.c,
                                  f.a.pow(3) * f.b.pow(-1) * f.c.pow(2)};
  for (const auto& u : cases) {
    auto r = weak_minkowski_check(a, u, 128);
    EXPECT_EQ(r.rank, oracle(u)) << u.value().to_string();
    EXPECT_EQ(r.is_weak_minkowski, r.rank == 3);
  }
}

TEST(WeakMinkowski, Search) {
  NumberField q2 = field("x^2 - 2");
  GaloisAction a2 = recover_galois_action(q2, 128);
  auto w = weak_minkowski_search(a2, {elt(q2, "1 + x")}, 2, 128);
  EXPECT_EQ(w.unit, elt(q2, "1 + x"));

  NumberField c3 = field("x^3 + x^2 - 2*x - 1");
  GaloisAction a3 = recover_galois_action(c3, 128);
  w = weak_minkowski_search(a3, {elt(c3, "x"), elt(c3, "x + 1")}, 2, 128);
  EXPECT_EQ(w.unit, elt(c3, "x"));
  EXPECT_TRUE(weak_minkowski_check(a3, w.unit, 128).is_weak_minkowski);

  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, 128);
  // every passing product needs all three exponents nonzero
  w = weak_minkowski_search(a, {f.a, f.b, f.c}, 2, 128);
  for (const auto& e : w.exponents) EXPECT_EQ(abs(e), 1);
  EXPECT_TRUE(weak_minkowski_check(a, w.unit, 128).is_weak_minkowski);
  EXPECT_EQ(code_of([&] { weak_minkowski_search(a, {f.a, f.b}, 2, 128); }), ErrorCode::RankDeficient);
}

TEST(GramForm, QuadraticIsTwiceSquaredRegulator) {
  NumberField k = field("x^2 - 2");
  GaloisAction a = recover_galois_action(k, kPrec);
  BallVector v = log_embed(k, elt(k, "1 + x"), kPrec);
  GramForm f = gram_form(a, v);
  ASSERT_EQ(f.matrix.size(), 1u);
  Ball l = log(Ball(1, kPrec) + sqrt(Ball(2, kPrec)));
  Ball expect = l * l * 2;
  EXPECT_TRUE(f.matrix[0][0].overlaps(expect));
  EXPECT_LT(f.matrix[0][0].rad_log2(), -200);
  LogLattice lk = log_lattice(k, {elt(k, "1 + x")}, kPrec);
  EXPECT_TRUE(f.matrix[0][0].overlaps(lk.gram(0, 0)));
}

TEST(GramForm, CubicMatchesDirectInnerProducts) {
  NumberField k = field("x^3 + x^2 - 2*x - 1");
  GaloisAction a = recover_galois_action(k, kPrec);
  FieldElement u = elt(k, "x");
  GramForm f = gram_form(a, log_embed(k, u, kPrec));
  ASSERT_EQ(f.matrix.size(), 2u);
  EXPECT_TRUE(is_symmetric(f.matrix));
  EXPECT_TRUE(is_positive_definite(f.matrix));
  // oracle: inner products of log vectors of the conjugate units themselves
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      BallVector x = log_embed(k, a.apply(i, u), kPrec), y = log_embed(k, a.apply(j, u), kPrec);
      Ball s(kPrec);
      for (size_t c = 0; c < 3; ++c) s += x[c] * y[c];
      EXPECT_TRUE(f.matrix[i][j].overlaps(s));
    }
  EXPECT_LT(f.invariance_defect.to_double(), std::ldexp(1.0, -200));
}

TEST(GramForm, RejectsNonMinkowskiVector) {
  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, 128);
  EXPECT_EQ(code_of([&] { gram_form(a, log_embed(f.k, f.a * f.b, 128)); }), ErrorCode::NotWeakMinkowski);
}

TEST(GramForm, CustomBasisIsPullback) {
  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, kPrec);
  BallVector v = log_embed(f.k, f.a * f.b * f.c, kPrec);
  GramForm std_form = gram_form(a, v);
  RationalMatrix basis{{Rational(1), Rational(1), Rational(0)},
                       {Rational(0), Rational(2), Rational(-1)},
                       {Rational(1, 2), Rational(0), Rational(3)}};
  GramForm custom = gram_form(a, v, basis);
  // L^T F L with columns of L the basis rows
  BallMatrix expect = pullback(std_form.matrix, transpose(basis));
  EXPECT_LT(max_abs_diff(custom.matrix, expect).to_double(), 1e-60);
}

TEST(ChangeOfBasis, SameBasisGivesIdentity) {
  NumberField k = field("x^3 + x^2 - 2*x - 1");
  GaloisAction a = recover_galois_action(k, kPrec);
  FieldElement u = elt(k, "x");
  LogLattice lk = log_lattice(k, {a.apply(0, u), a.apply(1, u)}, kPrec);
  GramForm f = gram_form(a, log_embed(k, u, kPrec));
  ChangeOfBasis c = change_of_basis_certificate(lk, f);
  EXPECT_EQ(c.a, rational_identity(2));

  NumberField q2 = field("x^2 - 2");
  GaloisAction a2 = recover_galois_action(q2, kPrec);
  LogLattice l2 = log_lattice(q2, {elt(q2, "1 + x")}, kPrec);
  c = change_of_basis_certificate(l2, gram_form(a2, log_embed(q2, elt(q2, "1 + x"), kPrec)));
  EXPECT_EQ(c.a, rational_identity(1));
}

TEST(ChangeOfBasis, RationalMatrixIsAnExactUnitRelation) {
  struct Case {
    NumberField k;
    std::vector<FieldElement> units;
  };
  Biquadratic bq;
  NumberField c3 = field("x^3 + x^2 - 2*x - 1");
  std::vector<Case> cases{
      {c3, {elt(c3, "x"), elt(c3, "-1 - x")}},
      {bq.k, {elt(bq.k, "-5/4 - 9/4*x + 1/4*x^2 + 1/4*x^3"), elt(bq.k, "-1 + 9/2*x - 1/2*x^3"), elt(bq.k, "x")}},
  };
  for (const auto& cs : cases) {
    GaloisAction a = recover_galois_action(cs.k, kPrec);
    WeakMinkowskiUnit w = weak_minkowski_search(a, cs.units, 2, kPrec);
    LogLattice lk = log_lattice(cs.k, cs.units, kPrec);
    GramForm f = gram_form(a, log_embed(cs.k, w.unit, kPrec));
    ChangeOfBasis c = change_of_basis_certificate(lk, f);
    EXPECT_LT(c.residual.to_double(), std::ldexp(1.0, -100));
    // Oracle: b_i = sum_j A_ij Log(g_j u) means u_i^D = +-prod (g_j u)^(D A_ij) exactly.
    for (size_t i = 0; i < c.a.size(); ++i) {
      EXPECT_LE(c.a[i].size(), lk.rank());
      Integer d(1);
      for (const auto& q : c.a[i]) {
        EXPECT_LE(q.get_den(), kDefaultDenomBound);
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
      }
      FieldElement lhs = lk.units[i].pow(d.get_si());
      FieldElement rhs = cs.k.one();
      for (size_t j = 0; j < c.a[i].size(); ++j) {
        Rational e = c.a[i][j] * d;
        rhs = rhs * a.apply(j, w.unit).pow(e.get_num().get_si());
      }
      FieldElement ratio = lhs * rhs.inverse();
      EXPECT_TRUE(ratio == cs.k.one() || ratio == cs.k.one() * Rational(-1)) << ratio.value().to_string();
    }
  }
}

TEST(Subfield, NormToSubfield) {
  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, kPrec);
  FieldElement u = f.a * f.b * f.c;
  Subgroup h = a.subgroup({"(1,3)(2,4)"}, "fix_sqrt2");
  SubfieldNorm n = norm_to_subfield(a, h, u, kPrec);
  // gamma = x + h(x) = 2 sqrt2, and the norm is (1 + sqrt2)^2 = 3 + gamma
  EXPECT_EQ(n.fixed.field.poly(), RationalPoly::parse("x^2 - 8"));
  EXPECT_EQ(n.norm.value(), RationalPoly::parse("x + 3"));
  EXPECT_EQ(n.ambient_norm, f.a * f.a);
  EXPECT_EQ(n.fixed.to_ambient(n.norm), n.ambient_norm);
  GaloisAction sub = recover_galois_action(n.fixed.field, kPrec);
  EXPECT_TRUE(weak_minkowski_check(sub, n.norm, kPrec).is_weak_minkowski);

  SubfieldNorm whole = norm_to_subfield(a, whole_group(a.group), u, kPrec);
  EXPECT_EQ(whole.fixed.field.degree(), 1);
  EXPECT_TRUE(whole.ambient_norm.is_rational());
  EXPECT_EQ(abs(whole.ambient_norm.value().coeff(0)), 1);
  SubfieldNorm triv = norm_to_subfield(a, trivial_subgroup(a.group), u, kPrec);
  EXPECT_EQ(triv.ambient_norm, u);
  EXPECT_EQ(triv.fixed.field.degree(), 4);
}

TEST(Subfield, NonabelianClosure) {
  // squared root differences of x^3 - 4x + 1 are the roots of y^3 - 24y^2 + 144y - 229,
  // so x^6 - 24x^4 + 144x^2 - 229 defines its S3 closure
  NumberField k = field("x^6 - 24*x^4 + 144*x^2 - 229");
  GaloisAction a = recover_galois_action(k, kPrec);
  ASSERT_EQ(a.order(), 6u);
  EXPECT_EQ(a.group.classes().size(), 3u);
  size_t inv = 1;
  while (a.group.element_order(inv) != 2) ++inv;
  Subgroup h = make_subgroup(a.group, std::vector<Perm>{a.group.element(inv)});
  EXPECT_EQ(code_of([&] { norm_to_subfield(a, h, k.generator(), kPrec); }), ErrorCode::NotNormal);
  // the fixed field of a transposition is a cubic field, the one of A3 is quadratic
  FixedField f = fixed_field(a, h, kPrec);
  EXPECT_EQ(f.field.degree(), 3);
  size_t r3 = 1;
  while (a.group.element_order(r3) != 3) ++r3;
  Subgroup c3 = make_subgroup(a.group, std::vector<Perm>{a.group.element(r3)});
  EXPECT_EQ(fixed_field(a, c3, kPrec).field.degree(), 2);
}

TEST(Subfield, LogBasisSpansSubfieldLattice) {
  Biquadratic f;
  GaloisAction a = recover_galois_action(f.k, kPrec);
  BallVector v = log_embed(f.k, f.a * f.b * f.c, kPrec);
  EXPECT_EQ(subfield_log_basis(a, trivial_subgroup(a.group), v).size(), 3u);
  EXPECT_TRUE(subfield_log_basis(a, whole_group(a.group), v).empty());

  Subgroup h = a.subgroup({"(1,3)(2,4)"}, "fix_sqrt2");
  BallMatrix rows = subfield_log_basis(a, h, v);
  ASSERT_EQ(rows.size(), 1u);
  NumberField q2 = field("x^2 - 2");
  LogLattice l2 = log_lattice(q2, {elt(q2, "1 + x")}, kPrec);
  SublatticeInclusion inc = include_sublattice(q2, f.k, elt(f.k, "1/2*x^3 - 9/2*x"), l2, kPrec);
  // mutual rational multiples: s = c w and w = s / c with c rational
  const BallVector& w = inc.image.basis[0];
  Ball ratio(kPrec), ww(kPrec);
  for (size_t i = 0; i < 4; ++i) {
    ratio += rows[0][i] * w[i];
    ww += w[i] * w[i];
  }
  Ball c = ratio / ww;
  auto q = rational_reconstruct(c, Integer(1000));
  ASSERT_TRUE(q.has_value());
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE((rows[0][i] - w[i] * *q).contains_zero());
    EXPECT_TRUE((w[i] - rows[0][i] * (1 / *q)).contains_zero());
  }
  EXPECT_GT(std::fabs(dot(rows[0], w)), 0.1);
}
