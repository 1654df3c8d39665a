#include "unitlat/independence.hpp"

#include <cmath>
#include <sstream>

#include "unitlat/enumerate.hpp"
#include "unitlat/error.hpp"
#include "unitlat/gram.hpp"
#include "unitlat/gram_form.hpp"
#include "unitlat/log_lattice.hpp"
#include "unitlat/sym_forms.hpp"

namespace unitlat {

using nlohmann::json;

ResidueRecord residue_at_one(const FieldBundle& b, Prec prec) {
  if (b.poly.degree() < 2) fail(ErrorCode::InvalidArgument, "residue needs a field of degree >= 2");
  if (!b.class_number) fail(ErrorCode::MissingClassNumber, "bundle " + b.label + " has no class number");
  NumberField k = b.field(prec);
  LogLattice l = log_lattice(k, b.unit_elements(k), prec);
  ResidueRecord r;
  r.label = b.label;
  r.r = k.r();
  r.s = k.s();
  r.class_number = *b.class_number;
  r.torsion = b.torsion;
  r.disc = b.disc;
  r.regulator = regulator(l);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(r.r + r.s));
  r.rational_factor = Rational(two_pow * r.class_number, Integer(r.torsion));
  r.rational_factor.canonicalize();
  r.residue = residue_from_record(r);
  return r;
}

Ball residue_from_record(const ResidueRecord& r) {
  Prec p = r.regulator.prec();
  Ball v = r.regulator * r.rational_factor;
  for (int i = 0; i < r.s; ++i) v *= Ball::pi(p);
  Integer ad = abs(r.disc);
  return v / sqrt(Ball::from_integer(ad, p));
}

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Found: return "FOUND";
    case ProbeVerdict::Spurious: return "SPURIOUS";
    case ProbeVerdict::NoneBelow: return "NONE";
    case ProbeVerdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

namespace {

Ball dot(const IntVector& r, const BallVector& x) {
  Ball s(x.empty() ? 64 : x[0].prec());
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) s += x[i] * Ball::from_integer(r[i], x[i].prec());
  return s;
}

std::string relation_text(const IntVector& r) {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i].get_str();
  return s + ")";
}

std::string monomial_label(const std::vector<int>& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "y" + std::to_string(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

BallVector monomial_values(const std::vector<std::vector<int>>& monos, const BallVector& y, Prec prec) {
  BallVector out;
  for (const auto& m : monos) {
    Ball v(1, prec);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) v *= pow(y[i], m[i]);
    out.push_back(v);
  }
  return out;
}

}  // namespace

json ProbeReport::to_json() const {
  json j;
  j["labels"] = labels;
  j["values"] = json::array();
  for (const auto& v : values) j["values"].push_back(ball_to_json(v));
  j["coeff_bound"] = coeff_bound.get_str();
  j["prec"] = prec;
  j["verdict"] = to_string(verdict);
  if (verdict == ProbeVerdict::Found || verdict == ProbeVerdict::Spurious) {
    json r = json::array();
    for (const auto& x : relation) r.push_back(x.get_str());
    j["relation"] = r;
    j["residual"] = ball_to_json(residual);
    j["recheck_residual"] = ball_to_json(recheck_residual);
  }
  if (verdict == ProbeVerdict::NoneBelow) j["bound"] = bound.to_string(12);
  j["stable_at_double_precision"] = stable;
  j["text"] = text;
  return j;
}

ProbeReport relation_probe(const std::vector<std::string>& labels, const ValueSource& values,
                           const Integer& coeff_bound, Prec prec) {
  ProbeReport p;
  p.labels = labels;
  p.coeff_bound = coeff_bound;
  p.prec = prec;
  p.values = values(prec);
  if (p.values.size() < 2) fail(ErrorCode::InvalidArgument, "a relation probe needs at least two values");
  if (p.values.size() != labels.size()) fail(ErrorCode::DimensionMismatch, "one label per value required");
  RelationResult r;
  try {
    r = integer_relation(p.values, coeff_bound, prec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientPrecision) throw;
    p.verdict = ProbeVerdict::Undecided;
    p.text = std::string("undecided: ") + e.what();
    return p;
  }
  BallVector twice = values(2 * prec);
  if (r.status == RelationStatus::Found) {
    p.relation = r.relation;
    p.residual = r.residual;
    p.recheck_residual = dot(r.relation, twice);
    Real floor = Real::pow2(-static_cast<long>(3 * prec / 2), Ball::kRadPrec);
    bool holds = p.recheck_residual.contains_zero() || p.recheck_residual.mag() < floor;
    p.verdict = holds ? ProbeVerdict::Found : ProbeVerdict::Spurious;
    p.stable = holds;
    p.text = holds ? "relation " + relation_text(r.relation) + " re-verified at " + std::to_string(2 * prec) + " bits"
                   : "relation " + relation_text(r.relation) + " fails at " + std::to_string(2 * prec) +
                         " bits (spurious)";
    return p;
  }
  p.verdict = ProbeVerdict::NoneBelow;
  p.bound = r.bound;
  try {
    p.stable = integer_relation(twice, coeff_bound, 2 * prec).status == RelationStatus::NoneBelow;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientPrecision) throw;
    p.stable = false;
  }
  p.text = "no integer relation with Euclidean norm <= " + r.bound.to_string(8) + " (coefficient bound " +
           coeff_bound.get_str() + ")" + (p.stable ? ", stable at " + std::to_string(2 * prec) + " bits" : "");
  return p;
}

std::vector<std::vector<int>> monomials_up_to(size_t k, int degree) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "degree must be nonnegative");
  // C(k + d, d) monomials
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(k) + static_cast<unsigned long>(degree),
               static_cast<unsigned long>(degree));
  if (count > static_cast<unsigned long>(kMonomialBudget))
    fail(ErrorCode::CombinatorialBudgetExceeded, count.get_str() + " monomials exceed the budget of " +
                                                     std::to_string(kMonomialBudget));
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  for (int d = 0; d <= degree; ++d) {
    // exponent vectors of total degree d in lex order, x_0 heaviest first
    auto rec = [&](auto&& self, size_t i, int left) -> void {
      if (i + 1 == k) {
        cur[i] = left;
        out.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[i] = e;
        self(self, i + 1, left - e);
      }
    };
    if (k == 0) {
      if (d == 0) out.emplace_back();
      continue;
    }
    rec(rec, 0, d);
  }
  return out;
}

ProbeReport genericity_probe(const ValueSource& coordinates, int degree, const Integer& coeff_bound, Prec prec) {
  BallVector y = coordinates(prec);
  auto monos = monomials_up_to(y.size(), degree);
  std::vector<std::string> labels;
  for (const auto& m : monos) labels.push_back(monomial_label(m));
  ValueSource vals = [&](Prec p) { return monomial_values(monos, coordinates(p), p); };
  ProbeReport r = relation_probe(labels, vals, coeff_bound, prec);
  if (r.verdict == ProbeVerdict::Found)
    r.text += "; counterexample candidate at height (" + std::to_string(degree) + ", " + coeff_bound.get_str() + ")";
  else if (r.verdict == ProbeVerdict::NoneBelow)
    r.text += "; consistent with genericity at height (" + std::to_string(degree) + ", " + coeff_bound.get_str() + ")";
  return r;
}

ValueSource gram_form_coordinates(const GaloisAction& a, const FieldElement& u) {
  auto basis = std::make_shared<SymGBasis>(sym_g_space(a.group));
  return [a, u, basis](Prec p) {
    BallVector v = log_embed(a.field.at_precision(p), u, p);
    GramForm f = gram_form(a, v);
    return sym_g_coordinates(*basis, f.matrix);
  };
}

namespace {

std::string verdict_word(bool b) { return b ? "true" : "false"; }

// Minimum of a Gram matrix scaled to covolume 1.
Ball normalized_minimum(const GramMatrix& g) {
  ShortVectors sv = shortest_vectors(g, 1000);
  Ball d = g.det();
  return sv.minimum / root(d, static_cast<long>(g.rank()));
}

struct GassmannOutcome {
  std::string verdict = "unknown";
  std::string reason;
  std::optional<bool> conjugate;
};

GassmannOutcome gassmann_of(const FieldBundle& a, const FieldBundle& b, Prec prec) {
  GassmannOutcome out;
  if (a.poly.degree() != b.poly.degree()) {
    out.verdict = "false";
    out.reason = "degrees differ";
    return out;
  }
  if (a.galois_closure && b.galois_closure) {
    const auto& ca = *a.galois_closure;
    const auto& cb = *b.galois_closure;
    if (ca.degree == cb.degree && ca.generators == cb.generators && !ca.field_subgroup.empty() &&
        !cb.field_subgroup.empty()) {
      PermGroup g = ca.group();
      Subgroup h1 = ca.subgroup(g, ca.field_subgroup);
      Subgroup h2 = cb.subgroup(g, cb.field_subgroup);
      bool eq = gassmann_equivalent(g, h1, h2);
      out.verdict = verdict_word(eq);
      out.conjugate = are_conjugate(g, h1, h2);
      out.reason = "class intersection counts of " + ca.field_subgroup + " and " + cb.field_subgroup +
                   " in the closure group of order " + std::to_string(g.order());
      return out;
    }
  }
  // Galois fields are arithmetically equivalent only to themselves.
  auto galois = [&](const FieldBundle& f) {
    NumberField k = f.field(prec);
    if (!k.totally_real()) return false;
    try {
      recover_galois_action(k, prec);
      return true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotGalois) return false;
      throw;
    }
  };
  if (galois(a) && galois(b)) {
    if (a.poly == b.poly) {
      out.verdict = "true";
      out.conjugate = true;
      out.reason = "same Galois field";
    } else if (a.disc != b.disc) {
      out.verdict = "false";
      out.reason = "distinct Galois fields (discriminants differ)";
    } else {
      out.reason = "Galois fields with equal discriminant; isomorphism not tested";
    }
    return out;
  }
  if (a.disc != b.disc) {
    out.verdict = "false";
    out.reason = "discriminants differ";
    return out;
  }
  out.reason = "no shared closure data";
  return out;
}

}  // namespace

PairReport pair_report(const FieldBundle& a, const FieldBundle& b, Prec prec) {
  PairReport p;
  p.label1 = a.label;
  p.label2 = b.label;
  p.prec = prec;
  NumberField k1 = a.field(prec), k2 = b.field(prec);
  if (!k1.totally_real() || !k2.totally_real())
    fail(ErrorCode::NotTotallyReal, "pair reports are defined for totally real fields");
  auto u1 = a.unit_elements(k1);
  auto u2 = b.unit_elements(k2);
  LogLattice l1 = log_lattice(k1, u1, prec), l2 = log_lattice(k2, u2, prec);
  p.reg1 = regulator(l1);
  p.reg2 = regulator(l2);
  Ball diff = p.reg1 - p.reg2;
  p.regulators_overlap = diff.contains_zero();
  if (p.regulators_overlap) {
    Real m = diff.mag();
    p.equal_bits = m.is_zero() ? static_cast<long>(prec) : -m.exponent();
  }
  ValueSource regs = [&](Prec q) {
    NumberField a1 = k1.at_precision(q), a2 = k2.at_precision(q);
    return BallVector{regulator(log_lattice(a1, u1, q)), regulator(log_lattice(a2, u2, q))};
  };
  p.regulator_probe = relation_probe({"reg(" + a.label + ")", "reg(" + b.label + ")"}, regs, kDefaultProbeBound, prec);

  GassmannOutcome gm = gassmann_of(a, b, prec);
  p.gassmann = gm.verdict;
  p.gassmann_reason = gm.reason;
  p.conjugate = gm.conjugate;

  if (l1.rank() == l2.rank() && l1.rank() > 0) {
    p.min1 = normalized_minimum(l1.gram);
    p.min2 = normalized_minimum(l2.gram);
    p.minima_separated = !(p.min1 - p.min2).contains_zero();
    Real tol = Real::pow2(-static_cast<long>(prec / 4), Ball::kRadPrec);
    p.isometry = isometry_test(l1.gram, l2.gram, tol);
    p.similarity = similarity_test(l1.gram, l2.gram, tol);
  } else {
    p.isometry.verdict = IsometryVerdict::NotIsometric;
    p.isometry.invariant = "rank";
    p.isometry.value1 = std::to_string(l1.rank());
    p.isometry.value2 = std::to_string(l2.rank());
    p.similarity.verdict = SimilarityVerdict::NotSimilar;
    p.similarity.invariant = "rank";
  }
  if (a.class_number && b.class_number) {
    p.res1 = residue_at_one(a, prec).residue;
    p.res2 = residue_at_one(b, prec).residue;
  }

  bool isometric = p.isometry.verdict == IsometryVerdict::Isometric;
  bool equal_h = a.class_number && b.class_number && *a.class_number == *b.class_number;
  bool reg_relation = p.regulator_probe.verdict == ProbeVerdict::Found;
  auto row = [&](std::string st, bool cond, bool premise, std::optional<bool> conclusion) {
    std::string status = !premise ? "not-applicable" : !conclusion ? "implied" : *conclusion ? "consistent" : "violated";
    p.implications.push_back({std::move(st), cond, status});
  };
  std::optional<bool> gassmann_known;
  if (p.gassmann != "unknown") gassmann_known = p.gassmann == "true";
  row("isometric log lattices => equal regulators", false, isometric, p.regulators_overlap);
  row("arithmetically equivalent and equal class numbers => equal regulators", false,
      p.gassmann == "true" && equal_h, p.regulators_overlap);
  if (p.res1 && p.res2)
    row("arithmetically equivalent => equal residues", false, p.gassmann == "true",
        (*p.res1 - *p.res2).contains_zero());
  row("regulators dependent over the algebraic numbers => arithmetically equivalent", true, reg_relation,
      gassmann_known);
  row("equal regulators => arithmetically equivalent and equal class numbers", true, p.regulators_overlap,
      gassmann_known ? std::optional<bool>(*gassmann_known && equal_h) : std::nullopt);
  row("isometric log lattices => arithmetically equivalent", true, isometric, gassmann_known);
  return p;
}

json PairReport::to_json() const {
  json j;
  j["fields"] = {label1, label2};
  j["prec"] = prec;
  j["regulators"] = {
      {"values", {ball_to_json(reg1), ball_to_json(reg2)}},
      {"overlap", regulators_overlap},
      {"equal_bits", equal_bits},
      {"probe", regulator_probe.to_json()},
  };
  j["gassmann"] = {{"verdict", gassmann}, {"reason", gassmann_reason}};
  if (conjugate) j["gassmann"]["conjugate"] = *conjugate;
  j["minima"] = {{"normalized", {ball_to_json(min1), ball_to_json(min2)}}, {"separated", minima_separated}};
  j["isometry"] = {{"verdict", to_string(isometry.verdict)},
                   {"invariant", isometry.invariant},
                   {"values", {isometry.value1, isometry.value2}}};
  j["similarity"] = {{"verdict", to_string(similarity.verdict)},
                     {"invariant", similarity.invariant},
                     {"values", {similarity.value1, similarity.value2}}};
  if (res1 && res2) j["residues"] = {ball_to_json(*res1), ball_to_json(*res2)};
  j["implications"] = json::array();
  for (const auto& r : implications)
    j["implications"].push_back(
        {{"statement", r.statement}, {"status", r.status}, {"tag", r.conditional ? "CONDITIONAL" : "UNCONDITIONAL"}});
  return j;
}

std::string PairReport::to_text() const {
  std::ostringstream o;
  o << "pair: " << label1 << " | " << label2 << " (prec " << prec << ")\n";
  o << "regulators: " << reg1.to_string(20) << " | " << reg2.to_string(20) << "\n";
  o << "  " << (regulators_overlap ? "equal to " + std::to_string(equal_bits) + " bits" : std::string("separated"))
    << "; probe " << to_string(regulator_probe.verdict) << ": " << regulator_probe.text << "\n";
  o << "gassmann: " << gassmann << " (" << gassmann_reason << ")";
  if (conjugate) o << ", conjugate: " << (*conjugate ? "true" : "false");
  o << "\n";
  o << "normalized minima: " << min1.to_string(15) << " | " << min2.to_string(15)
    << (minima_separated ? " (separated)" : "") << "\n";
  o << "isometry: " << to_string(isometry.verdict);
  if (!isometry.invariant.empty()) o << " [" << isometry.invariant << "]";
  o << "\nsimilarity: " << to_string(similarity.verdict);
  if (!similarity.invariant.empty()) o << " [" << similarity.invariant << "]";
  o << "\n";
  if (res1 && res2) o << "residues: " << res1->to_string(15) << " | " << res2->to_string(15) << "\n";
  o << "implications:\n";
  for (const auto& r : implications)
    o << "  [" << (r.conditional ? "CONDITIONAL" : "UNCONDITIONAL") << "] " << r.statement << ": " << r.status << "\n";
  return o.str();
}

}  // namespace unitlat
