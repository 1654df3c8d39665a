#include <gtest/gtest.h>

#include <filesystem>

#include "unitlat/bundle.hpp"
#include "unitlat/error.hpp"

using namespace unitlat;
using nlohmann::json;

namespace {

std::string bundle_path(const std::string& name) { return std::string(UNITLAT_DATA_DIR) + "/bundles/" + name + ".json"; }

json raw(const std::string& name) { return FieldBundle::load(bundle_path(name)).to_json(); }

const BundleCheck* find_check(const BundleValidation& v, const std::string& name) {
  for (const auto& c : v.checks)
    if (c.name == name) return &c;
  return nullptr;
}

ErrorCode code_of(const json& j) {
  try {
    FieldBundle::from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Bundle, AllShippedBundlesValidate) {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::string(UNITLAT_DATA_DIR) + "/bundles")) {
    FieldBundle b = FieldBundle::load(entry.path().string());
    BundleValidation v = validate_bundle(b, 128);
    for (const auto& c : v.checks) EXPECT_TRUE(c.passed) << entry.path() << ": " << c.name << " " << c.detail;
    EXPECT_TRUE(v.ok());
    ++count;
  }
  EXPECT_GE(count, 8);
}

TEST(Bundle, JsonRoundTrip) {
  for (const char* n : {"q_sqrt2", "q_sqrt2_sqrt3", "septic1"}) {
    json j = raw(n);
    EXPECT_EQ(FieldBundle::from_json(j).to_json(), j) << n;
  }
}

TEST(Bundle, SchemaErrors) {
  json j = raw("q_sqrt2");
  j["schema"] = "other/v1";
  EXPECT_EQ(code_of(j), ErrorCode::SchemaError);
  j = raw("q_sqrt2");
  j.erase("units");
  EXPECT_EQ(code_of(j), ErrorCode::SchemaError);
  j = raw("q_sqrt2");
  j["units"][0] = json::array({"1", "1", "1"});
  EXPECT_EQ(code_of(j), ErrorCode::SchemaError);
  j = raw("q_sqrt2");
  j["disc"] = "eight";
  EXPECT_EQ(code_of(j), ErrorCode::SchemaError);
  EXPECT_THROW(FieldBundle::load(bundle_path("no_such_bundle")), Error);
}

TEST(Bundle, ValidationCatchesBadData) {
  FieldBundle b = FieldBundle::load(bundle_path("q_sqrt2"));
  FieldBundle bad = b;
  bad.units[0] = {Rational(2), Rational(0)};
  BundleValidation v = validate_bundle(bad, 128);
  EXPECT_FALSE(v.ok());
  ASSERT_NE(find_check(v, "unit[0]"), nullptr);
  EXPECT_FALSE(find_check(v, "unit[0]")->passed);

  bad = b;
  bad.disc = Integer(3);
  v = validate_bundle(bad, 128);
  EXPECT_FALSE(find_check(v, "disc_index")->passed);

  bad = b;
  bad.disc = Integer(-8);
  v = validate_bundle(bad, 128);
  EXPECT_FALSE(find_check(v, "disc_sign")->passed);

  bad = b;
  bad.units.clear();
  v = validate_bundle(bad, 128);
  EXPECT_FALSE(find_check(v, "unit_rank")->passed);

  bad = b;
  bad.class_number = 0;
  EXPECT_FALSE(validate_bundle(bad, 128).ok());
}

TEST(Bundle, DiscriminantOracle) {
  // x^2 - 2: disc 8; x^3 + x + 1: -31; x^4 - 10x^2 + 1: 147456
  EXPECT_EQ(poly_discriminant(RationalPoly::parse("x^2 - 2")), Rational(8));
  EXPECT_EQ(poly_discriminant(RationalPoly::parse("x^3 + x + 1")), Rational(-31));
  EXPECT_EQ(poly_discriminant(RationalPoly::parse("x^4 - 10*x^2 + 1")), Rational(147456));
  EXPECT_EQ(resultant(RationalPoly::parse("x^2 - 1"), RationalPoly::parse("x - 2")), Rational(3));
}
