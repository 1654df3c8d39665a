#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "unitlat/bundle.hpp"
#include "unitlat/enumerate.hpp"
#include "unitlat/error.hpp"
#include "unitlat/galois.hpp"
#include "unitlat/gram.hpp"
#include "unitlat/gram_form.hpp"
#include "unitlat/independence.hpp"
#include "unitlat/isometry.hpp"
#include "unitlat/log_lattice.hpp"
#include "unitlat/multipoly.hpp"
#include "unitlat/sym_forms.hpp"

namespace unitlat::cli {

using nlohmann::json;

namespace {

struct Globals {
  Prec prec = 128;
  std::string tol;
  std::string bound;
  std::string out;
  std::string format = "json";
};

struct Outcome {
  json result = json::object();
  std::string text;
  bool certified = true;
  std::string failure;  // why certification failed
};

using Action = std::function<Outcome()>;

// ---- input helpers

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::SchemaError, path + ": " + e.what());
  }
}

Integer parse_bound(const std::string& text) {
  std::string s = text;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      exp10 = std::stol(s.substr(e + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad bound '" + text + "'");
    }
    s = s.substr(0, e);
  }
  if (s.empty() || exp10 < 0 || exp10 > 1000 || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::InvalidArgument, "bound must be a positive integer such as 1000000 or 1e6");
  Integer v(s);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
  v *= p;
  if (v <= 0) fail(ErrorCode::InvalidArgument, "bound must be positive");
  return v;
}

Integer bound_or(const Globals& g, const Integer& fallback) { return g.bound.empty() ? fallback : parse_bound(g.bound); }

// "2^-80" or a decimal; the default is 2^(-prec/4).
Real parse_tol(const Globals& g) {
  if (g.tol.empty()) return Real::pow2(-static_cast<long>(g.prec / 4), Ball::kRadPrec);
  if (g.tol.rfind("2^", 0) == 0) {
    try {
      return Real::pow2(std::stol(g.tol.substr(2)), Ball::kRadPrec);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad tolerance '" + g.tol + "'");
    }
  }
  Real t = Real::parse(g.tol, Ball::kRadPrec, MPFR_RNDU);
  if (!(t > Real(0, Ball::kRadPrec))) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  return t;
}

FieldBundle load_bundle(const std::string& path) { return FieldBundle::from_json(read_json(path)); }

struct LoadedLattice {
  GramMatrix gram;
  json meta = json::object();
};

LoadedLattice lattice_from_bundle(const FieldBundle& b, Prec prec) {
  NumberField k = b.field(prec);
  LogLattice l = log_lattice(k, b.unit_elements(k), prec);
  LoadedLattice out{l.gram};
  out.meta["label"] = b.label;
  out.meta["poly"] = b.poly.to_string();
  out.meta["signature"] = {l.r, l.s};
  out.meta["selected_units"] = l.selected;
  out.meta["regulator"] = ball_to_json(regulator(l));
  return out;
}

// A bundle or a Gram matrix file.
LoadedLattice load_lattice(const std::string& path, Prec prec) {
  json j = read_json(path);
  if (j.is_object() && j.value("schema", "") == kBundleSchema) return lattice_from_bundle(FieldBundle::from_json(j), prec);
  LoadedLattice out{GramMatrix::from_json(j)};
  out.meta["source"] = "gram";
  return out;
}

json int_vector_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json int_matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(int_vector_json(r));
  return a;
}

json rational_vector_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json rational_matrix_json(const RationalMatrix& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(rational_vector_json(r));
  return a;
}

json ball_vector_json(const BallVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(ball_to_json(x));
  return a;
}

json ball_matrix_json(const BallMatrix& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(ball_vector_json(r));
  return a;
}

std::string digits(const Ball& b) { return b.to_string(25); }

RationalVector parse_coeff_list(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty() || item.find_first_not_of("+-0123456789/") != std::string::npos)
      fail(ErrorCode::InvalidArgument, "bad coefficient '" + item + "'");
    try {
      Rational q(item);
      if (q.get_den() == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + item + "'");
      q.canonicalize();
      out.push_back(q);
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::InvalidArgument, "bad coefficient '" + item + "'");
    }
  }
  return out;
}

// Real constants for relation probes: numbers, pi, e, log/exp/sqrt, + - * / ^.
class ConstantParser {
 public:
  ConstantParser(std::string text, Prec prec) : s_(std::move(text)), prec_(prec) {}

  Ball parse() {
    Ball v = sum();
    skip();
    if (i_ != s_.size()) error("unexpected '" + s_.substr(i_) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::InvalidArgument, "in constant '" + s_ + "': " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Ball sum() {
    Ball v = product();
    for (;;) {
      if (eat('+'))
        v += product();
      else if (eat('-'))
        v -= product();
      else
        return v;
    }
  }
  Ball product() {
    Ball v = power();
    for (;;) {
      if (eat('*'))
        v *= power();
      else if (eat('/'))
        v /= power();
      else
        return v;
    }
  }
  Ball power() {
    if (eat('-')) return -power();
    Ball v = atom();
    if (eat('^')) {
      skip();
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) error("exponent must be a nonnegative integer");
      v = pow(v, std::stoul(s_.substr(start, i_ - start)));
    }
    return v;
  }
  Ball atom() {
    skip();
    if (eat('(')) {
      Ball v = sum();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) return number();
    size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string name = s_.substr(start, i_ - start);
    if (name == "pi") return Ball::pi(prec_);
    if (name == "e") return exp(Ball(1, prec_));
    if (name == "log" || name == "exp" || name == "sqrt") {
      if (!eat('(')) error("expected '(' after " + name);
      Ball x = sum();
      if (!eat(')')) error("missing ')'");
      if (name == "exp") return exp(x);
      if (!x.is_positive()) error(name + " needs a positive argument");
      return name == "log" ? log(x) : sqrt(x);
    }
    error(name.empty() ? "expected a value" : "unknown name '" + name + "'");
  }
  Ball number() {
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string whole = s_.substr(start, i_ - start), frac;
    if (i_ < s_.size() && s_[i_] == '.') {
      size_t f = ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      frac = s_.substr(f, i_ - f);
    }
    if (whole.empty() && frac.empty()) error("bad number");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(Integer((whole.empty() ? "0" : whole) + frac), den);
    q.canonicalize();
    return Ball::from_rational(q, prec_);
  }

  std::string s_;
  size_t i_ = 0;
  Prec prec_;
};

std::string verdict_line(const std::string& name, const std::string& verdict, const std::string& detail) {
  return name + ": " + verdict + (detail.empty() ? "" : " (" + detail + ")") + "\n";
}

// ---- commands

Outcome cmd_regulator(const Globals& g, const std::string& path) {
  FieldBundle b = load_bundle(path);
  NumberField k = b.field(g.prec);
  LogLattice l = log_lattice(k, b.unit_elements(k), g.prec);
  Ball reg = regulator(l);
  Outcome o;
  o.result = {{"label", b.label},
              {"regulator", ball_to_json(reg)},
              {"rank", l.rank()},
              {"signature", {l.r, l.s}},
              {"selected_units", l.selected}};
  o.text = "field: " + b.label + "\nregulator: " + digits(reg) + "\nrank: " + std::to_string(l.rank()) + "\n";
  return o;
}

Outcome cmd_lattice_gram(const Globals& g, const std::string& path) {
  LoadedLattice l = load_lattice(path, g.prec);
  Outcome o;
  o.result = {{"gram", l.gram.to_json()}, {"field", l.meta}};
  std::ostringstream t;
  t << "rank " << l.gram.rank() << "\n";
  for (size_t i = 0; i < l.gram.rank(); ++i) {
    for (size_t j = 0; j < l.gram.rank(); ++j) t << (j ? "  " : "") << l.gram(i, j).to_string(12);
    t << "\n";
  }
  o.text = t.str();
  return o;
}

Outcome cmd_lattice_min(const Globals& g, const std::string& path, size_t max_count) {
  LoadedLattice l = load_lattice(path, g.prec);
  ShortVectors sv = shortest_vectors(l.gram, max_count);
  Ball normalized = sv.minimum / root(l.gram.det(), l.gram.rank());
  Outcome o;
  json vecs = json::array();
  for (const auto& v : sv.vectors) vecs.push_back(int_vector_json(v));
  o.result = {{"minimum", ball_to_json(sv.minimum)},
              {"normalized_minimum", ball_to_json(normalized)},
              {"vectors", vecs},
              {"truncated", sv.truncated},
              {"field", l.meta}};
  o.text = "minimum: " + digits(sv.minimum) + "\nnormalized minimum (covolume 1): " + digits(normalized) +
           "\nminimal vectors (up to sign): " + std::to_string(sv.vectors.size()) + (sv.truncated ? " (truncated)" : "") +
           "\n";
  return o;
}

Outcome cmd_lattice_compare(const Globals& g, const std::string& a, const std::string& b, bool similarity) {
  LoadedLattice l1 = load_lattice(a, g.prec), l2 = load_lattice(b, g.prec);
  Real tol = parse_tol(g);
  Outcome o;
  o.result["tol"] = tol.to_string(6);
  if (similarity) {
    SimilarityResult r = similarity_test(l1.gram, l2.gram, tol);
    o.result["verdict"] = to_string(r.verdict);
    if (r.verdict == SimilarityVerdict::Similar) {
      o.result["lambda"] = ball_to_json(r.lambda);
      o.result["witness"] = int_matrix_json(r.witness);
    }
    if (!r.invariant.empty()) o.result["invariant"] = {{"name", r.invariant}, {"values", {r.value1, r.value2}}};
    o.result["nodes"] = r.nodes;
    o.certified = r.verdict != SimilarityVerdict::Inconclusive;
    o.text = verdict_line("similarity", to_string(r.verdict),
                          r.verdict == SimilarityVerdict::Similar ? "lambda " + r.lambda.to_string(15) : r.invariant);
  } else {
    IsometryResult r = isometry_test(l1.gram, l2.gram, tol);
    o.result["verdict"] = to_string(r.verdict);
    if (r.verdict == IsometryVerdict::Isometric) o.result["witness"] = int_matrix_json(r.witness);
    if (!r.invariant.empty()) o.result["invariant"] = {{"name", r.invariant}, {"values", {r.value1, r.value2}}};
    o.result["nodes"] = r.nodes;
    o.certified = r.verdict != IsometryVerdict::Inconclusive;
    o.text = verdict_line("isometry", to_string(r.verdict), r.invariant);
  }
  if (!o.certified) o.failure = "search budget exhausted without a verdict";
  return o;
}

struct GroupInput {
  std::string bundle;
  int degree = 0;
  std::vector<std::string> generators;
};

PermGroup group_of(const GroupInput& in, std::optional<GaloisClosureData>* closure = nullptr) {
  if (!in.bundle.empty()) {
    FieldBundle b = load_bundle(in.bundle);
    if (!b.galois_closure) fail(ErrorCode::InvalidArgument, in.bundle + " has no galois_closure data");
    if (closure) *closure = b.galois_closure;
    return b.galois_closure->group();
  }
  if (in.degree <= 0 || in.generators.empty())
    fail(ErrorCode::InvalidArgument, "give --bundle with closure data or --degree and --generators");
  return PermGroup::from_cycles(in.degree, in.generators);
}

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(item);
  return out;
}

Subgroup subgroup_of(const PermGroup& g, const std::optional<GaloisClosureData>& closure, const std::string& spec) {
  if (closure && closure->subgroups.count(spec)) return closure->subgroup(g, spec);
  if (spec.find('(') == std::string::npos)
    fail(ErrorCode::InvalidArgument, "unknown subgroup '" + spec + "' (give a name or cycle generators)");
  return make_subgroup(g, split_generators(spec), spec);
}

Outcome cmd_gassmann(const Globals&, const GroupInput& in, const std::string& a, const std::string& b,
                     const std::string& h1s, const std::string& h2s) {
  PermGroup g;
  Subgroup h1, h2;
  if (!a.empty() || !b.empty()) {
    if (a.empty() || b.empty()) fail(ErrorCode::InvalidArgument, "--a and --b go together");
    FieldBundle ba = load_bundle(a), bb = load_bundle(b);
    if (!ba.galois_closure || !bb.galois_closure)
      fail(ErrorCode::InvalidArgument, "both bundles need galois_closure data");
    const auto& ca = *ba.galois_closure;
    const auto& cb = *bb.galois_closure;
    if (ca.degree != cb.degree || ca.generators != cb.generators)
      fail(ErrorCode::InvalidArgument, "the bundles describe different closure groups");
    if (ca.field_subgroup.empty() || cb.field_subgroup.empty())
      fail(ErrorCode::InvalidArgument, "both bundles need field_subgroup");
    g = ca.group();
    h1 = ca.subgroup(g, ca.field_subgroup);
    h2 = cb.subgroup(g, cb.field_subgroup);
  } else {
    std::optional<GaloisClosureData> closure;
    g = group_of(in, &closure);
    if (h1s.empty() || h2s.empty()) fail(ErrorCode::InvalidArgument, "give --h1 and --h2");
    h1 = subgroup_of(g, closure, h1s);
    h2 = subgroup_of(g, closure, h2s);
  }
  bool eq = gassmann_equivalent(g, h1, h2);
  bool conj = are_conjugate(g, h1, h2);
  std::vector<size_t> c1 = class_intersections(g, h1), c2 = class_intersections(g, h2);
  Outcome o;
  o.result = {{"group_order", g.order()},
              {"orders", {h1.order(), h2.order()}},
              {"class_intersections", {c1, c2}},
              {"gassmann_equivalent", eq},
              {"conjugate", conj}};
  o.text = "group order " + std::to_string(g.order()) + ", subgroup orders " + std::to_string(h1.order()) + ", " +
           std::to_string(h2.order()) + "\ngassmann equivalent: " + (eq ? "true" : "false") +
           "\nconjugate: " + (conj ? "true" : "false") + "\n";
  return o;
}

Outcome cmd_symg(const Globals&, const GroupInput& in) {
  PermGroup g = group_of(in);
  SymGBasis basis = sym_g_space(g);
  Outcome o;
  json forms = json::array();
  for (const auto& f : basis.forms) forms.push_back(rational_matrix_json(f));
  o.result = {{"group_order", g.order()}, {"dimension", basis.dimension()}, {"forms", forms}};
  o.text = "group order " + std::to_string(g.order()) + "\ndim Sym^G = " + std::to_string(basis.dimension()) + "\n";
  return o;
}

struct FormSetup {
  FieldBundle bundle;
  NumberField field;
  GaloisAction action;
  std::vector<FieldElement> units;
  FieldElement unit;
  IntVector exponents;
};

FormSetup form_setup(const std::string& path, Prec prec, int unit_index, int effort) {
  FieldBundle b = load_bundle(path);
  NumberField k = b.field(prec);
  GaloisAction a = recover_galois_action(k, prec);
  auto units = b.unit_elements(k);
  if (unit_index >= 0) {
    if (static_cast<size_t>(unit_index) >= units.size())
      fail(ErrorCode::InvalidArgument, "--unit " + std::to_string(unit_index) + " out of range");
    IntVector e(units.size(), Integer(0));
    e[static_cast<size_t>(unit_index)] = 1;
    FieldElement u = units[static_cast<size_t>(unit_index)];
    return {b, k, a, units, u, e};
  }
  WeakMinkowskiUnit w = weak_minkowski_search(a, units, effort, prec);
  return {b, k, a, units, w.unit, w.exponents};
}

json action_json(const GaloisAction& a) {
  json out = json::array();
  for (size_t i = 0; i < a.group.order(); ++i)
    out.push_back({{"permutation", format_cycles(a.group.element(i))}, {"image", a.images[i].value().to_string()}});
  return out;
}

Outcome cmd_gramform(const Globals& g, const std::string& path, int unit_index, int effort) {
  FormSetup s = form_setup(path, g.prec, unit_index, effort);
  BallVector v = log_embed(s.field, s.unit, g.prec);
  GramForm f = gram_form(s.action, v);
  SymGBasis basis = sym_g_space(s.action.group);
  BallVector coords = sym_g_coordinates(basis, f.matrix);
  Outcome o;
  o.result = {{"label", s.bundle.label},
              {"galois_action", action_json(s.action)},
              {"unit", {{"coords", rational_vector_json(s.unit.coords())}, {"exponents", int_vector_json(s.exponents)}}},
              {"log_vector", ball_vector_json(v)},
              {"gram_form", ball_matrix_json(f.matrix)},
              {"invariance_defect", f.invariance_defect.to_string(6)},
              {"sym_g_coordinates", ball_vector_json(coords)}};
  std::ostringstream t;
  t << "field: " << s.bundle.label << ", Galois group of order " << s.action.group.order() << "\n";
  t << "unit: " << s.unit.value().to_string() << "\n";
  t << "Gram form on the basis g_0..g_" << f.matrix.size() - 1 << ":\n";
  for (const auto& row : f.matrix) {
    for (size_t j = 0; j < row.size(); ++j) t << (j ? "  " : "") << row[j].to_string(12);
    t << "\n";
  }
  t << "invariance defect: " << f.invariance_defect.to_string(6) << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_change_of_basis(const Globals& g, const std::string& path, int unit_index, int effort) {
  FormSetup s = form_setup(path, g.prec, unit_index, effort);
  LogLattice lk = log_lattice(s.field, s.units, g.prec);
  GramForm f = gram_form(s.action, log_embed(s.field, s.unit, g.prec));
  ChangeOfBasis c = change_of_basis_certificate(lk, f, bound_or(g, kDefaultDenomBound));
  Outcome o;
  o.result = {{"label", s.bundle.label},
              {"unit", {{"coords", rational_vector_json(s.unit.coords())}, {"exponents", int_vector_json(s.exponents)}}},
              {"a", rational_matrix_json(c.a)},
              {"residual", c.residual.to_string(6)}};
  std::ostringstream t;
  t << "A (rows express the lattice basis in the spanning set alpha v):\n";
  for (const auto& row : c.a) {
    for (size_t j = 0; j < row.size(); ++j) t << (j ? "  " : "") << row[j].get_str();
    t << "\n";
  }
  t << "residual |A Gr A^T - b_K|: " << c.residual.to_string(6) << "\n";
  o.text = t.str();
  return o;
}

Outcome probe_outcome(const ProbeReport& r) {
  Outcome o;
  o.result = r.to_json();
  o.text = std::string("verdict: ") + to_string(r.verdict) + "\n" + r.text + "\n";
  if (r.verdict == ProbeVerdict::Spurious || r.verdict == ProbeVerdict::Undecided) {
    o.certified = false;
    o.failure = r.text;
  }
  return o;
}

Outcome cmd_relations(const Globals& g, const std::vector<std::string>& values, const std::vector<std::string>& bundles) {
  if (!values.empty() && !bundles.empty()) fail(ErrorCode::InvalidArgument, "give --values or --bundles, not both");
  std::vector<std::string> labels;
  ValueSource src;
  if (!values.empty()) {
    labels = values;
    for (const auto& v : values) ConstantParser(v, 64).parse();  // syntax errors surface before the probe
    src = [values](Prec p) {
      BallVector out;
      for (const auto& v : values) out.push_back(ConstantParser(v, p).parse());
      return out;
    };
  } else if (!bundles.empty()) {
    std::vector<FieldBundle> bs;
    for (const auto& path : bundles) {
      bs.push_back(load_bundle(path));
      labels.push_back("reg(" + bs.back().label + ")");
    }
    src = [bs](Prec p) {
      BallVector out;
      for (const auto& b : bs) {
        NumberField k = b.field(p);
        out.push_back(regulator(log_lattice(k, b.unit_elements(k), p)));
      }
      return out;
    };
  } else {
    fail(ErrorCode::InvalidArgument, "give --values or --bundles");
  }
  return probe_outcome(relation_probe(labels, src, bound_or(g, kDefaultProbeBound), g.prec));
}

Outcome cmd_genericity(const Globals& g, const std::string& path, int degree, int unit_index, int effort) {
  FormSetup s = form_setup(path, g.prec, unit_index, effort);
  ValueSource y = gram_form_coordinates(s.action, s.unit);
  Outcome o = probe_outcome(genericity_probe(y, degree, bound_or(g, kDefaultProbeBound), g.prec));
  o.result["degree"] = degree;
  o.result["label"] = s.bundle.label;
  return o;
}

Outcome cmd_residue(const Globals& g, const std::string& path) {
  ResidueRecord r = residue_at_one(load_bundle(path), g.prec);
  Outcome o;
  o.result = {{"label", r.label},
              {"signature", {r.r, r.s}},
              {"class_number", r.class_number},
              {"torsion", r.torsion},
              {"disc", r.disc.get_str()},
              {"regulator", ball_to_json(r.regulator)},
              {"residue", ball_to_json(r.residue)},
              {"rational_factor", r.rational_factor.get_str()}};
  o.text = "field: " + r.label + "\nresidue at s=1: " + digits(r.residue) + "\n= " + r.rational_factor.get_str() +
           (r.s ? " * pi^" + std::to_string(r.s) : std::string()) + " * reg / sqrt(" + Integer(abs(r.disc)).get_str() + ")\n";
  return o;
}

Outcome cmd_pair_report(const Globals& g, const std::string& a, const std::string& b) {
  PairReport p = pair_report(load_bundle(a), load_bundle(b), g.prec);
  Outcome o;
  o.result = p.to_json();
  o.text = p.to_text();
  if (p.isometry.verdict == IsometryVerdict::Inconclusive) {
    o.certified = false;
    o.failure = "isometry search inconclusive";
  }
  for (const auto& row : p.implications)
    if (row.status == "violated" && !row.conditional) {
      o.certified = false;
      o.failure = "unconditional implication violated: " + row.statement;
    }
  return o;
}

Outcome cmd_elim(const Globals&, const std::string& coeffs, const std::vector<size_t>& partial) {
  RationalVector c = parse_coeff_list(coeffs);
  Outcome o;
  if (!partial.empty()) {
    MultiPoly h = partial_sign_product(c, partial);
    o.result = {{"coeffs", rational_vector_json(c)}, {"partial_vars", partial}, {"product", h.to_string()}};
    o.text = h.to_string() + "\n";
    return o;
  }
  MultiPoly h = sign_orbit_product(c);
  MultiPoly f = desquare(h);
  o.result = {{"coeffs", rational_vector_json(c)},
              {"product", h.to_string()},
              {"desquared", f.to_string()},
              {"degree", f.total_degree()},
              {"terms", f.term_count()}};
  o.text = f.to_string() + "\n";
  return o;
}

Outcome cmd_validate(const Globals& g, const std::string& path) {
  FieldBundle b = load_bundle(path);
  BundleValidation v = validate_bundle(b, g.prec);
  Outcome o;
  json checks = json::array();
  std::string text = "bundle: " + b.label + "\n";
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    text += std::string(c.passed ? "  ok   " : "  FAIL ") + c.name + ": " + c.detail + "\n";
  }
  o.result = {{"label", b.label}, {"checks", checks}, {"valid", v.ok()}};
  o.text = text + (v.ok() ? "valid\n" : "invalid\n");
  o.certified = v.ok();
  if (!v.ok()) o.failure = "bundle failed validation";
  return o;
}

// ---- driver

bool is_usage_error(ErrorCode c) {
  return c == ErrorCode::InvalidArgument || c == ErrorCode::SchemaError || c == ErrorCode::DimensionMismatch;
}

json provided_inputs(const CLI::App* sub) {
  json in = json::object();
  for (const CLI::App* s = sub; s; s = s->get_subcommands().empty() ? nullptr : s->get_subcommands().front()) {
    for (const CLI::Option* opt : s->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const auto& res = opt->results();
      std::string key = opt->get_name();
      while (!key.empty() && key.front() == '-') key.erase(key.begin());
      if (res.size() == 1)
        in[key] = res.front();
      else
        in[key] = res;
    }
  }
  return in;
}

std::string command_name(const CLI::App& app) {
  std::string name;
  for (const CLI::App* s = &app; !s->get_subcommands().empty();) {
    s = s->get_subcommands().front();
    name += (name.empty() ? "" : " ") + s->get_name();
  }
  return name;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit lattices, Galois module structure and regulator relations", "unitlat"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format = "json";
  app.add_option("--prec", g.prec, "working precision in bits")->check(CLI::Range(32, 1 << 20));
  app.add_option("--tol", g.tol, "tolerance, decimal or 2^-k (default 2^-(prec/4))");
  app.add_option("--bound", g.bound, "coefficient or denominator bound, e.g. 1e6");
  app.add_option("--out", g.out, "write the report to this path instead of stdout");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}));

  Action action;
  std::string bundle, a, b, gram, h1, h2, coeffs, generators_text;
  std::vector<std::string> values, bundles, generators;
  std::vector<size_t> partial;
  int unit_index = -1, effort = 2, probe_degree = kDefaultProbeDegree;
  size_t max_count = 1000;

  auto* reg = app.add_subcommand("regulator", "regulator of a bundle's unit lattice");
  reg->add_option("--bundle", bundle, "bundle path")->required();
  reg->callback([&] { action = [&] { return cmd_regulator(g, bundle); }; });

  auto* lat = app.add_subcommand("lattice", "log-unit lattice operations");
  lat->require_subcommand(1);
  auto* lgram = lat->add_subcommand("gram", "Gram matrix of a bundle's log lattice");
  lgram->add_option("--bundle", bundle, "bundle or Gram file")->required();
  lgram->callback([&] { action = [&] { return cmd_lattice_gram(g, bundle); }; });
  auto* lmin = lat->add_subcommand("min", "lattice minimum and minimal vectors");
  lmin->add_option("--bundle", bundle, "bundle or Gram file")->required();
  lmin->add_option("--max-count", max_count, "maximum number of minimal vectors");
  lmin->callback([&] { action = [&] { return cmd_lattice_min(g, bundle, max_count); }; });
  auto* liso = lat->add_subcommand("isometry", "isometry test");
  liso->add_option("--a", a, "bundle or Gram file")->required();
  liso->add_option("--b", b, "bundle or Gram file")->required();
  liso->callback([&] { action = [&] { return cmd_lattice_compare(g, a, b, false); }; });
  auto* lsim = lat->add_subcommand("similarity", "similarity test");
  lsim->add_option("--a", a, "bundle or Gram file")->required();
  lsim->add_option("--b", b, "bundle or Gram file")->required();
  lsim->callback([&] { action = [&] { return cmd_lattice_compare(g, a, b, true); }; });

  GroupInput group_in;
  auto add_group_options = [&](CLI::App* s) {
    s->add_option("--bundle", group_in.bundle, "bundle with galois_closure data");
    s->add_option("--degree", group_in.degree, "permutation degree");
    s->add_option("--generators", group_in.generators, "generators in cycle notation");
  };
  auto* gas = app.add_subcommand("gassmann", "Gassmann equivalence of two subgroups");
  add_group_options(gas);
  gas->add_option("--h1", h1, "subgroup name or generators separated by ';'");
  gas->add_option("--h2", h2, "subgroup name or generators separated by ';'");
  gas->add_option("--a", a, "bundle whose field_subgroup is H1");
  gas->add_option("--b", b, "bundle whose field_subgroup is H2");
  gas->callback([&] { action = [&] { return cmd_gassmann(g, group_in, a, b, h1, h2); }; });

  auto* sym = app.add_subcommand("symg", "rational basis of G-invariant symmetric forms");
  add_group_options(sym);
  sym->callback([&] { action = [&] { return cmd_symg(g, group_in); }; });

  auto add_unit_options = [&](CLI::App* s) {
    s->add_option("--bundle", bundle, "bundle of a totally real Galois field")->required();
    s->add_option("--unit", unit_index, "use this unit instead of searching for a weak Minkowski unit");
    s->add_option("--effort", effort, "exponent box for the weak Minkowski search");
  };
  auto* gf = app.add_subcommand("gramform", "G-invariant Gram form of a unit's log vector");
  add_unit_options(gf);
  gf->callback([&] { action = [&] { return cmd_gramform(g, bundle, unit_index, effort); }; });

  auto* cob = app.add_subcommand("cert-change-of-basis", "rational change of basis between Gram form and unit lattice");
  add_unit_options(cob);
  cob->callback([&] { action = [&] { return cmd_change_of_basis(g, bundle, unit_index, effort); }; });

  auto* rel = app.add_subcommand("relations", "integer relation probe");
  rel->add_option("--values", values, "constants such as log(2) or sqrt(3)/2");
  rel->add_option("--bundles", bundles, "bundles whose regulators are probed");
  rel->callback([&] { action = [&] { return cmd_relations(g, values, bundles); }; });

  auto* gen = app.add_subcommand("genericity", "polynomial relations among Gram form coordinates");
  add_unit_options(gen);
  gen->add_option("--degree", probe_degree, "monomial degree");
  gen->callback([&] { action = [&] { return cmd_genericity(g, bundle, probe_degree, unit_index, effort); }; });

  auto* res = app.add_subcommand("residue", "residue of the Dedekind zeta function at s = 1");
  res->add_option("--bundle", bundle, "bundle path")->required();
  res->callback([&] { action = [&] { return cmd_residue(g, bundle); }; });

  auto* pr = app.add_subcommand("pair-report", "compare two fields");
  pr->add_option("--a", a, "first bundle")->required();
  pr->add_option("--b", b, "second bundle")->required();
  pr->callback([&] { action = [&] { return cmd_pair_report(g, a, b); }; });

  auto* el = app.add_subcommand("elim", "sign-orbit product of a linear form");
  el->add_option("--coeffs", coeffs, "comma separated rationals c_0,...,c_n")->required();
  el->add_option("--partial", partial, "only flip the signs of these variables");
  el->callback([&] { action = [&] { return cmd_elim(g, coeffs, partial); }; });

  auto* vb = app.add_subcommand("validate-bundle", "check a FieldBundle file");
  vb->add_option("--bundle", bundle, "bundle path")->required();
  vb->callback([&] { action = [&] { return cmd_validate(g, bundle); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run with --help for the command grammar\n";
    return kExitUsage;
  }

  json envelope;
  envelope["schema"] = kReportSchema;
  envelope["command"] = command_name(app);
  envelope["prec"] = g.prec;
  envelope["inputs"] = provided_inputs(app.get_subcommands().front());

  Outcome o;
  int code = kExitOk;
  std::string error_text;
  try {
    o = action();
    envelope["status"] = o.certified ? "ok" : "certification-failed";
    envelope["result"] = o.result;
    if (!o.certified) {
      envelope["failure"] = o.failure;
      code = kExitCertification;
    }
  } catch (const Error& e) {
    code = is_usage_error(e.code()) ? kExitUsage : kExitCertification;
    envelope["status"] = "error";
    envelope["error"] = {{"code", to_string(e.code())}, {"detail", e.detail()}};
    error_text = std::string("error: ") + e.what() + "\n";
  }

  std::string body;
  if (g.format == "json") {
    body = envelope.dump(2) + "\n";
  } else {
    body = "unitlat " + envelope["command"].get<std::string>() + " (prec " + std::to_string(g.prec) + ")\n";
    body += error_text.empty() ? o.text : error_text;
    if (!o.certified) body += "certification failed: " + o.failure + "\n";
  }
  if (!error_text.empty()) err << error_text;
  if (g.out.empty()) {
    out << body;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << g.out << "\n";
      return kExitUsage;
    }
    f << body;
  }
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace unitlat::cli
