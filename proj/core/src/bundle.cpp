#include "unitlat/bundle.hpp"

#include <fstream>
#include <sstream>

#include "unitlat/error.hpp"
#include "unitlat/log_lattice.hpp"

namespace unitlat {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::SchemaError, what); }

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational parse_rational(const json& j, const std::string& where) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number_integer())
    s = std::to_string(j.get<long long>());
  else
    schema(where + ": expected a rational string");
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) schema(where + ": bad rational '" + s + "'");
  try {
    Rational q(s);
    if (q.get_den() == 0) schema(where + ": zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    schema(where + ": bad rational '" + s + "'");
  }
}

RationalVector parse_vector(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array");
  RationalVector v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(parse_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<std::string> parse_strings(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) schema(where + ": expected strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

json rational_strings(const RationalVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

// Minimal polynomial of x by exact linear dependence of its powers.
RationalPoly minimal_polynomial(const FieldElement& x) {
  std::vector<RationalVector> pows;
  FieldElement cur = x.pow(0);
  for (int d = 0; d <= x.degree(); ++d) {
    pows.push_back(cur.coords());
    if (independent_subset(pows).size() < pows.size()) {
      size_t n = pows[0].size();
      RationalMatrix m(n, RationalVector(static_cast<size_t>(d)));
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < static_cast<size_t>(d); ++c) m[r][c] = pows[c][r];
      auto sol = solve(m, pows.back());
      std::vector<Rational> coeffs;
      for (const auto& c : *sol) coeffs.push_back(-c);
      coeffs.emplace_back(1);
      return RationalPoly(coeffs);
    }
    cur = cur * x;
  }
  fail(ErrorCode::InvalidArgument, "no dependence among powers");
}

}  // namespace

PermGroup GaloisClosureData::group() const {
  try {
    return PermGroup::from_cycles(degree, generators);
  } catch (const Error& e) {
    schema(std::string("galois_closure.generators: ") + e.what());
  }
}

Subgroup GaloisClosureData::subgroup(const PermGroup& g, const std::string& name) const {
  auto it = subgroups.find(name);
  if (it == subgroups.end()) schema("galois_closure has no subgroup '" + name + "'");
  return make_subgroup(g, it->second, name);
}

NumberField FieldBundle::field(Prec prec) const { return NumberField::build(poly, prec); }

std::vector<FieldElement> FieldBundle::unit_elements(const NumberField& k) const {
  std::vector<FieldElement> out;
  for (size_t i = 0; i < units.size(); ++i) {
    if (static_cast<int>(units[i].size()) != k.degree())
      schema("units[" + std::to_string(i) + "] has " + std::to_string(units[i].size()) + " coordinates, degree is " +
             std::to_string(k.degree()));
    out.push_back(k.element(units[i]));
  }
  return out;
}

FieldBundle FieldBundle::from_json(const json& j) {
  if (!j.is_object()) schema("bundle must be a JSON object");
  const json& sch = field_of(j, "schema");
  if (!sch.is_string() || sch.get<std::string>() != kBundleSchema)
    schema(std::string("schema must be '") + kBundleSchema + "'");
  FieldBundle b;
  const json& label = field_of(j, "label");
  if (!label.is_string()) schema("label must be a string");
  b.label = label.get<std::string>();
  b.poly = RationalPoly(parse_vector(field_of(j, "poly"), "poly"));
  if (b.poly.degree() < 1) schema("poly must have degree >= 1");
  b.disc = Integer(parse_rational(field_of(j, "disc"), "disc").get_num());
  if (parse_rational(j.at("disc"), "disc").get_den() != 1) schema("disc must be an integer");
  if (j.contains("class_number") && !j.at("class_number").is_null()) {
    if (!j.at("class_number").is_number_integer()) schema("class_number must be an integer");
    b.class_number = j.at("class_number").get<long>();
  }
  if (j.contains("torsion")) {
    if (!j.at("torsion").is_number_integer()) schema("torsion must be an integer");
    b.torsion = j.at("torsion").get<long>();
  }
  const json& units = field_of(j, "units");
  if (!units.is_array()) schema("units must be an array");
  for (size_t i = 0; i < units.size(); ++i) {
    b.units.push_back(parse_vector(units[i], "units[" + std::to_string(i) + "]"));
    if (static_cast<int>(b.units.back().size()) != b.poly.degree())
      schema("units[" + std::to_string(i) + "] must have " + std::to_string(b.poly.degree()) + " coordinates");
  }
  b.provenance = j.contains("provenance") ? j.at("provenance") : json::object();
  if (j.contains("galois_closure")) {
    const json& gc = j.at("galois_closure");
    GaloisClosureData c;
    const json& deg = field_of(gc, "degree");
    if (!deg.is_number_integer() || deg.get<int>() < 1) schema("galois_closure.degree must be a positive integer");
    c.degree = deg.get<int>();
    c.generators = parse_strings(field_of(gc, "generators"), "galois_closure.generators");
    if (gc.contains("subgroups")) {
      if (!gc.at("subgroups").is_object()) schema("galois_closure.subgroups must be an object");
      for (const auto& [name, gens] : gc.at("subgroups").items())
        c.subgroups[name] = parse_strings(gens, "galois_closure.subgroups." + name);
    }
    auto opt_string = [&](const char* key, std::string& out) {
      if (!gc.contains(key)) return;
      if (!gc.at(key).is_string()) schema(std::string("galois_closure.") + key + " must be a string");
      out = gc.at(key).get<std::string>();
    };
    opt_string("field_subgroup", c.field_subgroup);
    opt_string("group_name", c.group_name);
    opt_string("closure_poly", c.closure_poly);
    c.provenance = gc.contains("provenance") ? gc.at("provenance") : json::object();
    b.galois_closure = std::move(c);
  }
  if (j.contains("subfields")) {
    if (!j.at("subfields").is_object()) schema("subfields must be an object");
    for (const auto& [name, sf] : j.at("subfields").items())
      b.subfields.push_back({name, parse_vector(field_of(sf, "generator_image"), "subfields." + name)});
  }
  return b;
}

FieldBundle FieldBundle::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open bundle " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    schema(path + ": " + e.what());
  }
  return from_json(j);
}

json FieldBundle::to_json() const {
  json j;
  j["schema"] = kBundleSchema;
  j["label"] = label;
  j["poly"] = rational_strings(poly.coeffs());
  j["disc"] = disc.get_str();
  if (class_number) j["class_number"] = *class_number;
  j["torsion"] = torsion;
  j["units"] = json::array();
  for (const auto& u : units) j["units"].push_back(rational_strings(u));
  j["provenance"] = provenance;
  if (galois_closure) {
    const auto& c = *galois_closure;
    json gc;
    gc["degree"] = c.degree;
    gc["generators"] = c.generators;
    gc["subgroups"] = json::object();
    for (const auto& [name, gens] : c.subgroups) gc["subgroups"][name] = gens;
    if (!c.field_subgroup.empty()) gc["field_subgroup"] = c.field_subgroup;
    if (!c.group_name.empty()) gc["group_name"] = c.group_name;
    if (!c.closure_poly.empty()) gc["closure_poly"] = c.closure_poly;
    gc["provenance"] = c.provenance;
    j["galois_closure"] = gc;
  }
  if (!subfields.empty()) {
    j["subfields"] = json::object();
    for (const auto& s : subfields) j["subfields"][s.label] = {{"generator_image", rational_strings(s.generator_image)}};
  }
  return j;
}

bool BundleValidation::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Rational resultant(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  int m = a.degree(), n = b.degree();
  if (n == 0) {
    Rational r(1);
    for (int i = 0; i < m; ++i) r *= b.leading();
    return r;
  }
  if (m == 0) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= a.leading();
    return r;
  }
  RationalPoly r = a % b;
  if (r.is_zero()) return Rational(0);
  Rational f(1);
  for (int i = 0; i < m - r.degree(); ++i) f *= b.leading();
  if ((m * n) % 2) f = -f;
  return f * resultant(b, r);
}

Rational poly_discriminant(const RationalPoly& p) {
  int n = p.degree();
  if (n < 1) fail(ErrorCode::InvalidArgument, "discriminant of a constant");
  Rational d = resultant(p, p.derivative()) / p.leading();
  if ((n * (n - 1) / 2) % 2) d = -d;
  return d;
}

BundleValidation validate_bundle(const FieldBundle& b, Prec prec) {
  BundleValidation v;
  auto add = [&](std::string name, bool ok, std::string detail) {
    v.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  NumberField k;
  try {
    k = b.field(prec);
    add("field", true, "degree " + std::to_string(k.degree()) + ", signature (" + std::to_string(k.r()) + "," +
                           std::to_string(k.s()) + ")");
  } catch (const Error& e) {
    add("field", false, e.what());
    return v;
  }

  int expect_sign = k.s() % 2 ? -1 : 1;
  add("disc_sign", sgn(b.disc) == expect_sign,
      "disc " + b.disc.get_str() + ", expected sign " + std::to_string(expect_sign));
  if (b.disc != 0) {
    Rational ratio = poly_discriminant(b.poly) / Rational(b.disc);
    ratio.canonicalize();
    bool square = ratio.get_den() == 1 && ratio > 0 && mpz_perfect_square_p(ratio.get_num_mpz_t());
    add("disc_index", square, "poly disc / field disc = " + ratio.get_str());
  }

  bool units_ok = true;
  std::vector<FieldElement> units;
  for (size_t i = 0; i < b.units.size(); ++i) {
    std::string name = "unit[" + std::to_string(i) + "]";
    if (static_cast<int>(b.units[i].size()) != k.degree()) {
      add(name, false, "wrong number of coordinates");
      units_ok = false;
      continue;
    }
    FieldElement u = k.element(b.units[i]);
    bool ok = u.is_integral() && abs(u.norm()) == 1;
    add(name, ok, "norm " + u.norm().get_str() + (u.is_integral() ? "" : ", not integral"));
    units_ok = units_ok && ok;
    units.push_back(u);
  }
  if (units_ok) {
    try {
      LogLattice l = log_lattice(k, units, prec);
      add("unit_rank", true, "rank " + std::to_string(l.rank()));
    } catch (const Error& e) {
      add("unit_rank", false, e.what());
    }
  }
  if (b.class_number) add("class_number", *b.class_number >= 1, std::to_string(*b.class_number));
  add("torsion", b.torsion >= 2 && b.torsion % 2 == 0 && (k.s() > 0 || b.torsion == 2),
      "w = " + std::to_string(b.torsion));

  if (b.galois_closure) {
    const auto& c = *b.galois_closure;
    try {
      PermGroup g = c.group();
      std::string detail = "order " + std::to_string(g.order());
      for (const auto& [name, gens] : c.subgroups) {
        Subgroup h = c.subgroup(g, name);
        detail += ", " + name + " index " + std::to_string(g.order() / h.order());
      }
      bool ok = g.order() % static_cast<size_t>(k.degree()) == 0;
      if (!c.field_subgroup.empty()) {
        Subgroup h = c.subgroup(g, c.field_subgroup);
        ok = ok && g.order() / h.order() == static_cast<size_t>(k.degree());
      } else {
        ok = ok && g.order() == static_cast<size_t>(k.degree());
      }
      add("galois_closure", ok, detail);
    } catch (const Error& e) {
      add("galois_closure", false, e.what());
    }
  }
  for (const auto& s : b.subfields) {
    std::string name = "subfield " + s.label;
    if (static_cast<int>(s.generator_image.size()) != k.degree()) {
      add(name, false, "wrong number of coordinates");
      continue;
    }
    RationalPoly mp = minimal_polynomial(k.element(s.generator_image));
    bool ok = mp.degree() >= 1 && k.degree() % mp.degree() == 0;
    add(name, ok, "minimal polynomial " + mp.to_string());
  }
  return v;
}

}  // namespace unitlat
