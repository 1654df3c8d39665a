#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unitlat/number_field.hpp"
#include "unitlat/perm_group.hpp"

namespace unitlat {

inline constexpr const char* kBundleSchema = "unitlat.bundle/v1";

// Permutation data of a Galois closure, acting on the roots of the closure
// polynomial (or of the field polynomial when none is given).
struct GaloisClosureData {
  int degree = 0;
  std::vector<std::string> generators;
  std::map<std::string, std::vector<std::string>> subgroups;
  std::string field_subgroup;  // subgroup whose fixed field is the bundle's field
  std::string group_name;
  std::string closure_poly;
  nlohmann::json provenance;

  PermGroup group() const;
  Subgroup subgroup(const PermGroup& g, const std::string& name) const;
};

struct SubfieldData {
  std::string label;
  RationalVector generator_image;  // power-basis coordinates of the subfield generator
};

struct FieldBundle {
  std::string label;
  RationalPoly poly;
  Integer disc;
  std::optional<long> class_number;
  long torsion = 2;
  std::vector<RationalVector> units;
  std::optional<GaloisClosureData> galois_closure;
  std::vector<SubfieldData> subfields;
  nlohmann::json provenance;

  NumberField field(Prec prec) const;
  std::vector<FieldElement> unit_elements(const NumberField& k) const;

  // Throws SchemaError on malformed input.
  static FieldBundle from_json(const nlohmann::json& j);
  static FieldBundle load(const std::string& path);
  nlohmann::json to_json() const;
};

struct BundleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BundleValidation {
  std::vector<BundleCheck> checks;
  bool ok() const;
};

// Field construction, unit integrality and norms +-1, full unit rank,
// discriminant sign (-1)^s and poly disc / field disc a nonzero square,
// closure permutations and subgroup names, subfield generator images.
BundleValidation validate_bundle(const FieldBundle& b, Prec prec);

// Exact discriminant of a polynomial via its resultant with the derivative.
Rational poly_discriminant(const RationalPoly& p);
Rational resultant(const RationalPoly& a, const RationalPoly& b);

}  // namespace unitlat
