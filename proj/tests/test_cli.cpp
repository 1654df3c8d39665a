#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;
namespace cli = unitlat::cli;

namespace {

std::string bundle(const std::string& name) { return std::string(UNITLAT_DATA_DIR) + "/bundles/" + name + ".json"; }

struct Invocation {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_envelope(const json& j, const std::string& command) {
  EXPECT_EQ(j.at("schema"), cli::kReportSchema);
  EXPECT_EQ(j.at("command"), command);
  EXPECT_TRUE(j.at("prec").is_number_integer());
  EXPECT_TRUE(j.at("inputs").is_object());
  EXPECT_TRUE(j.at("status").is_string());
  if (j["status"] == "error")
    EXPECT_TRUE(j.at("error").contains("code"));
  else
    EXPECT_TRUE(j.at("result").is_object());
}

}  // namespace

TEST(Cli, RegulatorOfQSqrt2) {
  Invocation r = run({"regulator", "--bundle", bundle("q_sqrt2"), "--prec", "128"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  json j = r.report();
  expect_envelope(j, "regulator");
  std::string mid = j["result"]["regulator"]["mid"];
  EXPECT_EQ(mid.substr(0, 13), "0.88137358701");
  Invocation t = run({"regulator", "--bundle", bundle("q_sqrt2"), "--format", "text"});
  EXPECT_NE(t.out.find("8.8137358701954302523"), std::string::npos);
}

TEST(Cli, ElimPrintsDesquaredPolynomial) {
  Invocation r = run({"elim", "--coeffs", "1,1,1", "--format", "text"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("x0^2 - 2*x0*x1 - 2*x0*x2 + x1^2 - 2*x1*x2 + x2^2"), std::string::npos);
  json j = run({"elim", "--coeffs", "2,3"}).report();
  EXPECT_EQ(j["result"]["product"], "4*x0^2 - 9*x1^2");
}

TEST(Cli, OutputIsDeterministic) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"pair-report", "--a", bundle("septic1"), "--b", bundle("septic2"), "--prec", "256"},
        std::vector<std::string>{"gramform", "--bundle", bundle("cubic_c3")},
        std::vector<std::string>{"relations", "--values", "log(2)", "log(3)", "log(6)"}}) {
    Invocation a = run(args), b = run(args);
    EXPECT_EQ(a.code, cli::kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    expect_envelope(a.report(), args[0]);
  }
}

TEST(Cli, SepticPairReport) {
  json j = run({"pair-report", "--a", bundle("septic1"), "--b", bundle("septic2"), "--prec", "256"}).report();
  const json& res = j["result"];
  EXPECT_EQ(res["regulators"]["probe"]["verdict"], "FOUND");
  EXPECT_GE(res["regulators"]["equal_bits"].get<long>(), 200);
  EXPECT_EQ(res["gassmann"]["verdict"], "true");
  EXPECT_EQ(res["gassmann"]["conjugate"], false);
  EXPECT_EQ(res["isometry"]["verdict"], "NotIsometric");
  EXPECT_EQ(res["similarity"]["verdict"], "NotSimilar");
}

TEST(Cli, LatticeSubcommands) {
  Invocation g = run({"lattice", "gram", "--bundle", bundle("q_sqrt5")});
  ASSERT_EQ(g.code, cli::kExitOk);
  expect_envelope(g.report(), "lattice gram");
  auto path = std::filesystem::temp_directory_path() / "unitlat_cli_gram.json";
  {
    std::ofstream f(path);
    f << g.report()["result"]["gram"].dump();
  }
  Invocation iso = run({"lattice", "isometry", "--a", path.string(), "--b", bundle("q_sqrt5")});
  EXPECT_EQ(iso.report()["result"]["verdict"], "Isometric");
  Invocation sim = run({"lattice", "similarity", "--a", bundle("q_sqrt2"), "--b", bundle("q_sqrt3")});
  EXPECT_EQ(sim.report()["result"]["verdict"], "Similar");
  Invocation mn = run({"lattice", "min", "--bundle", bundle("q_sqrt2_sqrt3")});
  EXPECT_EQ(mn.code, cli::kExitOk);
  std::filesystem::remove(path);
}

TEST(Cli, GroupCommands) {
  json j = run({"gassmann", "--bundle", bundle("septic1"), "--h1", "point_stabilizer", "--h2", "line_stabilizer"}).report();
  EXPECT_EQ(j["result"]["gassmann_equivalent"], true);
  EXPECT_EQ(j["result"]["conjugate"], false);
  j = run({"gassmann", "--degree", "4", "--generators", "(1,2,3,4)", "(1,2)", "--h1", "(1,2)", "--h2", "(3,4)"}).report();
  EXPECT_EQ(j["result"]["gassmann_equivalent"], true);
  EXPECT_EQ(j["result"]["conjugate"], true);
  j = run({"symg", "--degree", "3", "--generators", "(1,2,3)"}).report();
  EXPECT_EQ(j["result"]["dimension"], 1);
}

TEST(Cli, ValidateBundleExitCodes) {
  EXPECT_EQ(run({"validate-bundle", "--bundle", bundle("septic1")}).code, cli::kExitOk);
  json b = json::parse(std::ifstream(bundle("q_sqrt2")));
  b["units"][0] = json::array({"2", "0"});
  auto path = std::filesystem::temp_directory_path() / "unitlat_cli_bad.json";
  {
    std::ofstream f(path);
    f << b.dump();
  }
  Invocation bad = run({"validate-bundle", "--bundle", path.string()});
  EXPECT_EQ(bad.code, cli::kExitCertification);
  EXPECT_EQ(bad.report()["status"], "certification-failed");
  b["schema"] = "nope";
  {
    std::ofstream f(path);
    f << b.dump();
  }
  EXPECT_EQ(run({"validate-bundle", "--bundle", path.string()}).code, cli::kExitUsage);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"regulator"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"regulator", "--bundle", bundle("q_sqrt2"), "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"regulator", "--bundle", "/no/such/file.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"elim", "--coeffs", "1,x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"relations", "--values", "log(2", "log(3)"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, CertificationFailureExitsOne) {
  // x^3 - 2 is not totally real, so there is no Galois action to recover
  json b = json::parse(std::ifstream(bundle("q_sqrt2")));
  b["poly"] = json::array({"-2", "0", "0", "1"});
  b["disc"] = "-108";
  b["units"] = json::array({json::array({"-1", "1", "0"})});
  auto path = std::filesystem::temp_directory_path() / "unitlat_cli_cubic.json";
  {
    std::ofstream f(path);
    f << b.dump();
  }
  Invocation r = run({"gramform", "--bundle", path.string()});
  EXPECT_EQ(r.code, cli::kExitCertification);
  EXPECT_EQ(r.report()["error"]["code"], "NotTotallyReal");
  std::filesystem::remove(path);
}

TEST(Cli, ResidueAndGenericity) {
  json j = run({"residue", "--bundle", bundle("q_sqrt5")}).report();
  EXPECT_EQ(j["result"]["residue"]["mid"].get<std::string>().substr(0, 14), "0.430408940964");
  j = run({"genericity", "--bundle", bundle("cubic_c3"), "--prec", "512", "--bound", "1e4"}).report();
  EXPECT_EQ(j["result"]["verdict"], "NONE");
  j = run({"cert-change-of-basis", "--bundle", bundle("cubic_c3"), "--prec", "256"}).report();
  EXPECT_EQ(j["status"], "ok");
}
