#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "lndlab/cli/report.hpp"
#include "lndlab/cli/run.hpp"
#include "lndlab/cli/spec_file.hpp"
#include "lndlab/polyalg/parser.hpp"
#include "lndlab/tame/jvdk.hpp"

using namespace lnd;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--json");
  const auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.out << r.err;
  return json::parse(r.out);
}

std::string data(const std::string& file) { return std::string(LNDLAB_TEST_DATA) + "/" + file; }

}  // namespace

TEST(CliExamples, CheckLndOnPlane) {
  const auto j = run_json({"check-lnd", "--bundle", "cn:2", "--derivation", "dy"}, 0);
  EXPECT_EQ(j["verdict"], "Nilpotent");
  EXPECT_EQ(j["certificate"]["x"], 1);
  EXPECT_EQ(j["certificate"]["y"], 2);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["exit_code"], 0);
  const auto text = run({"check-lnd", "--bundle", "cn:2", "--derivation", "dy"});
  EXPECT_NE(text.out.find("x: 1, y: 2"), std::string::npos);
}

TEST(CliExamples, SaturateLineFailsToSpan) {
  const auto j = run_json({"saturate", "--bundle", "cn:1", "--gen-deg", "2", "--target-deg", "2", "--max-len", "4"}, 1);
  EXPECT_EQ(j["certified"], false);
  EXPECT_EQ(j["saturation"]["span_dim"], 2);
  EXPECT_EQ(j["saturation"]["target_dim"], 3);
}

TEST(CliExamples, UnitObstructionOnGl2) {
  const auto j = run_json({"unit", "--bundle", "gl2"}, 0);
  EXPECT_EQ(j["obstruction"], true);
  bool found = false;
  for (const auto& w : j["witnesses"]) {
    if (w["g"] == "w" && w["verified"] == true) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(run({"unit", "--bundle", "sl2"}).code, 1);
}

TEST(CliExitCodes, Verdicts) {
  EXPECT_EQ(run({"check-lnd", "--bundle", "cn:2", "--derivation", "x=x; y=y"}).code, 1);
  EXPECT_EQ(run({"shear", "--bundle", "cn:2", "--derivation", "dy", "--f", "x"}).code, 0);
  const auto bad_shear = run_json({"shear", "--bundle", "cn:2", "--derivation", "dy", "--f", "y"}, 1);
  EXPECT_EQ(bad_shear["residue"], "1");
  EXPECT_EQ(run({"overshear", "--bundle", "cn:2", "--derivation", "dy", "--f", "x*y"}).code, 0);
  EXPECT_EQ(run({"overshear", "--bundle", "cn:2", "--derivation", "dy", "--f", "y^2"}).code, 1);
  EXPECT_EQ(run({"flex", "--bundle", "sl2", "--lnds", "Ae12,Ae21,e12A,e21A", "--at", "1,0,0,1"}).code, 1);
  EXPECT_EQ(run({"flex", "--bundle", "sl2", "--at", "1,0,0,1"}).code, 0);
  EXPECT_EQ(run({"compat", "--bundle", "cn:2", "--theta", "dx", "--xi", "dy", "--bound", "3"}).code, 0);
  EXPECT_EQ(run({"compat", "--bundle", "cn:2", "--theta", "dy", "--xi", "dy", "--ideal", "x", "--bound", "2"}).code, 1);
  EXPECT_EQ(run({"decompose", "--map", "y; x + y^2"}).code, 0);
  EXPECT_EQ(run({"decompose", "--map", "x^2; y"}).code, 1);
  EXPECT_EQ(run({"bracket-fd", "--bundle", "cn:2", "--theta", "dx", "--other", "x=y^3; y=x*y^2", "--at", "1/2,2"}).code, 0);
  EXPECT_EQ(run({"bundle", "list"}).code, 0);
  EXPECT_EQ(run({"bundle", "show", "koras-russell"}).code, 0);
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"parse", "x +"}).code, 2);
  EXPECT_EQ(run({"check-lnd", "--bundle", "nope", "--derivation", "dy"}).code, 2);
  EXPECT_EQ(run({"check-lnd", "--bundle", "cn:2", "--derivation", "dq"}).code, 2);
  EXPECT_EQ(run({"check-lnd", "--bundle", "cn:2"}).code, 2);
  EXPECT_EQ(run({"flow", "--bundle", "cn:2", "--derivation", "dy", "--time", "1", "--at", "1"}).code, 2);
  EXPECT_EQ(run({"check-lnd", "--spec", "/nonexistent/spec.json", "--derivation", "D"}).code, 2);
  const auto j = run_json({"parse", "x +"}, 2);
  EXPECT_TRUE(j.contains("error"));
  EXPECT_EQ(j["exit_code"], 2);
}

TEST(CliExitCodes, HelpIsSuccess) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("saturate"), std::string::npos);
}

TEST(CliCommands, ParseAndGroebner) {
  const auto p = run_json({"parse", "x^2*y - 1/2", "--vars", "x,y"}, 0);
  EXPECT_EQ(p["canonical"], "x^2*y - 1/2");
  EXPECT_EQ(p["degree"], 3);
  const auto g = run_json({"gb", "--poly", "x^2 - 1", "--poly", "x - 1"}, 0);
  EXPECT_EQ(g["basis"], json::array({"x - 1"}));
  const auto u = run_json({"gb", "--poly", "x", "--poly", "x + 1"}, 0);
  EXPECT_EQ(u["unit_ideal"], true);
}

TEST(CliCommands, FlowOfShearIsExact) {
  const auto j = run_json({"flow", "--bundle", "cn:2", "--derivation", "x=0; y=x^2", "--time", "1"}, 0);
  EXPECT_EQ(j["kind"], "polynomial");
  EXPECT_EQ(j["ideal_preserved"], true);
  const auto h = run_json({"flow", "--bundle", "cn:2", "--overshear", "xydy", "--time", "1", "--at", "1,1"}, 0);
  EXPECT_EQ(h["kind"], "hybrid");
}

TEST(CliCommands, BracketOfCoordinateFields) {
  const auto j = run_json({"bracket", "--bundle", "cn:2", "--left", "dx", "--right", "x=0; y=x^2"}, 0);
  EXPECT_EQ(j["bracket"]["images"]["y"], "2*x");
  EXPECT_EQ(j["bracket"]["images"]["x"], "0");
  const auto z = run_json({"bracket", "--bundle", "cn:2", "--left", "dx", "--right", "dy"}, 0);
  EXPECT_EQ(z["is_zero"], true);
}

TEST(CliCommands, CompareFlowAgainstClosedForm) {
  // time-1 flow of x^2 dy is (x, y + x^2)
  const auto j = run_json({"compare", "--bundle", "cn:2", "--left", "flow:x2dy@1", "--right", "x; y + x^2"}, 0);
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(run({"compare", "--bundle", "cn:2", "--left", "flow:xydy@1", "--right", "x; y*(1+x)"}).code, 1);
}

TEST(CliCommands, DanielewskiPairFindsH) {
  const auto j = run_json({"compat", "--bundle", "danielewski:p=z1^2+z2^2-1:n=2", "--bound", "2"}, 1);
  EXPECT_EQ(j["pair"]["h"], "z1");
  EXPECT_EQ(j["pair"]["h_nondegenerate"], true);
}

TEST(CliSpecFile, LoadsAndDispatches) {
  const std::string spec = data("danielewski_z2.json");
  const auto d = run_json({"check-lnd", "--spec", spec, "--derivation", "D"}, 0);
  EXPECT_EQ(d["certificate"]["v"], 3);
  EXPECT_EQ(run({"check-lnd", "--spec", spec, "--derivation", "euler"}).code, 1);
  EXPECT_EQ(run({"flow", "--spec", spec, "--overshear", "zD", "--time", "1/2"}).code, 0);
  EXPECT_EQ(run({"compat", "--spec", spec, "--bound", "2"}).code, 1);
  const auto ws = cli::load_spec_file(spec);
  EXPECT_EQ(ws.bundle.lnds.size(), 2u);
  EXPECT_EQ(ws.derivations.size(), 3u);
  EXPECT_EQ(ws.bundle.points.size(), 3u);
  EXPECT_THROW(ws.derivation("missing"), std::invalid_argument);
}

TEST(CliSpecFile, RejectsBrokenDocuments) {
  EXPECT_THROW(cli::parse_spec(json::parse(R"({"variety": {"vars": ["x"]}, "derivations": {"d": {"images": {"q": "1"}}}})"), "t"),
               std::exception);
  EXPECT_THROW(cli::parse_spec(json::parse(R"({"variety": {"vars": ["x", "y"], "defining": ["x*y - 1"]},
                                               "points": [[0, 0]]})"),
                               "t"),
               std::exception);
  EXPECT_THROW(cli::parse_spec(json::parse(R"({"variety": {"vars": ["x"]},
                                               "derivations": {"e": {"images": {"x": "x"}}},
                                               "overshears": {"o": {"base": "e", "f": "x"}}})"),
                               "t"),
               std::invalid_argument);
  EXPECT_THROW(cli::parse_spec(json::parse(R"({"variety": {"vars": ["x", "y"], "defining": ["x*y - 1"]},
                                               "derivations": {"d": {"images": {"x": "1", "y": "0"}}}})"),
                               "t"),
               std::exception);
}

TEST(CliReport, FactorListRoundTrip) {
  const polyalg::Ring ring({"x", "y"});
  const auto map = tame::PolyMap::parse(ring, "y + 2; 3*x + y^3 - y");
  const auto r = tame::jvdk_decompose(map);
  ASSERT_TRUE(r.factors.has_value());
  const auto back = cli::factor_list_from_json(cli::factor_list_json(*r.factors), ring);
  EXPECT_EQ(tame::recompose(back), map);
  EXPECT_EQ(cli::factor_list_json(back), cli::factor_list_json(*r.factors));
}

// ---------------------------------------------------------------- properties

// Re-running the argv embedded in a report reproduces the report.
TEST(CliProperty, ReportsRoundTripThroughInputs) {
  const std::vector<std::vector<std::string>> cases{
      {"check-lnd", "--bundle", "koras-russell", "--derivation", "D1"},
      {"saturate", "--bundle", "cn:2", "--gen-deg", "3", "--target-deg", "1", "--max-len", "2"},
      {"flex", "--bundle", "cn:3", "--random", "4"},
      {"flex", "--bundle", "sl2", "--seed", "7", "--random", "3"},
      {"compat", "--bundle", "cn:2", "--theta", "dx", "--xi", "dy"},
      {"unit", "--bundle", "gl2"},
      {"decompose", "--map", "y; x + y^2"},
      {"bracket-fd", "--bundle", "sl2", "--theta", "e12A", "--other", "e21A", "--at", "2,1,1,1"},
      {"flow", "--bundle", "danielewski:p=z^2", "--overshear", "z*theta_u", "--time", "0.25", "--at", "1,1,1"},
      {"shear", "--bundle", "cn:2", "--derivation", "dy", "--f", "y"},
  };
  for (const auto& args : cases) {
    auto first_args = args;
    first_args.push_back("--json");
    const auto first = run(first_args);
    const auto report = json::parse(first.out);
    ASSERT_EQ(report["exit_code"], first.code);
    const auto argv = report["inputs"]["argv"].get<std::vector<std::string>>();
    const auto second = run(argv);
    EXPECT_EQ(second.code, first.code) << args[0];
    EXPECT_EQ(json::parse(second.out), report) << args[0];
  }
}

// Exit code 0 only when the report's verdict field is affirmatively true.
TEST(CliProperty, ZeroExitMatchesVerdictField) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"saturate", "--bundle", "cn:2", "--gen-deg", "3", "--target-deg", "1", "--max-len", "2"}, "certified"},
      {{"saturate", "--bundle", "cn:1", "--gen-deg", "2", "--target-deg", "2", "--max-len", "4"}, "certified"},
      {{"flex", "--bundle", "sl2"}, "spans"},
      {{"flex", "--bundle", "sl2", "--lnds", "Ae12,e21A"}, "spans"},
      {{"compat", "--bundle", "cn:2", "--theta", "dx", "--xi", "dy"}, "is_compatible_at_bound"},
      {{"compat", "--bundle", "cn:2", "--theta", "dy", "--xi", "dy", "--ideal", "x", "--bound", "2"},
       "is_compatible_at_bound"},
      {{"decompose", "--map", "y; x + y^2"}, "recomposition_exact"},
      {{"decompose", "--map", "x*y; y"}, "recomposition_exact"},
  };
  for (auto [args, field] : cases) {
    args.push_back("--json");
    const auto r = run(args);
    const auto j = json::parse(r.out);
    EXPECT_EQ(r.code == 0, j[field] == true) << args[0];
  }
  for (const char* d : {"dy", "x=x; y=y"}) {
    const auto r = run({"check-lnd", "--bundle", "cn:2", "--derivation", d, "--json"});
    EXPECT_EQ(r.code == 0, json::parse(r.out)["verdict"] == "Nilpotent");
  }
}
