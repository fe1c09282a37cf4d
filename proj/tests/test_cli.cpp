#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "ncshift/serialize.hpp"
#include "ncshift/suites.hpp"

using namespace ncshift;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, ExpandRibbonLatex) {
  CliRun r = run({"expand", "--ribbon", "2,1,1", "--format", "latex"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("R_{(2,1,1);a} = ", 0), 0u);
  EXPECT_NE(r.out.find("S_{4;a}"), std::string::npos);
}

TEST(Cli, ExpandJsonRoundTrips) {
  CliRun r = run({"expand", "--Lambda", "3", "--shift", "-1"});
  ASSERT_EQ(r.code, kExitOk);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["input"]["family"], "Lambda");
  EXPECT_FALSE(nc_element_from_json(j["result"]).is_zero());
}

TEST(Cli, EquidistantParams) {
  CliRun r = run({"--params", "equidistant:1,-1", "expand", "--Lambda", "2", "--format", "latex"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "\\Lambda_{2;a} = -S_{1;a} + S_{1;a}S_{1;a} - S_{2;a}\n");
}

TEST(Cli, ParamsFile) {
  std::string path = temp_file("params.json", R"({"a": {"0": "0", "1": "1"}})");
  CliRun r = run({"--params", "file:" + path, "expand", "--Lambda", "2", "--format", "latex"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "\\Lambda_{2;a} = -S_{1;a} + S_{1;a}S_{1;a} - S_{2;a}\n");
  // a_2 is needed for S_3^{[1]} but missing from the file.
  EXPECT_EQ(run({"--params", "file:" + path, "expand", "--S", "3", "--shift", "1"}).code, kExitUsage);
}

TEST(Cli, Convert) {
  CliRun r = run({"convert", "--from", "Lambda", "--to", "R", "--word", "2,1", "--format", "latex"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "\\Lambda_{2;a}\\Lambda_{1;a} = \\left(-a_{-1} + a_{1}\\right)R_{(1,1);a} + R_{(1,1,1);a} + R_{(1,2);a}\n");
  EXPECT_EQ(run({"convert", "--from", "S", "--to", "Psi", "--word", "1"}).code, kExitOk);
}

TEST(Cli, WholeDistantBasisReport) {
  Json j = Json::parse(run({"--params", "equidistant:1,-1", "convert", "--from", "Lambda", "--to", "R", "--word", "2,2"}).out);
  EXPECT_EQ(j["whole_distant"], true);
  EXPECT_EQ(j["integer_coefficients"], true);
  Json h = Json::parse(run({"--params", "equidistant:1/2,0", "convert", "--from", "Lambda", "--to", "R", "--word", "2"}).out);
  EXPECT_FALSE(h.contains("whole_distant"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"expand"}).code, kExitUsage);
  EXPECT_EQ(run({"expand", "--S", "1", "--Lambda", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"expand", "--S", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"expand", "--ribbon", "2,0"}).code, kExitUsage);
  EXPECT_EQ(run({"expand", "--ribbon", "2,1", "--shifts", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "pdf", "expand", "--S", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"--params", "equidistant:1", "expand", "--S", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"convert", "--from", "X", "--word", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "bazin", "--degree", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"specialize", "/nonexistent.json"}).code, kExitUsage);
}

TEST(Cli, HelpIsNotAnError) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(Cli, VerifyPassingSuite) {
  CliRun r = run({"verify", "recovery", "--degree", "3"});
  EXPECT_EQ(r.code, kExitOk);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["suite"], "recovery");
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["cases"].size(), 9u);
}

TEST(Cli, VerifyKnownFailureExitsOne) {
  CliRun r = run({"verify", "hopf", "--degree", "2"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("coproduct-examples (known)"), std::string::npos);
}

TEST(Cli, VerifyIsByteIdentical) {
  CliRun x = run({"verify", "symmetry", "--degree", "2", "--seed", "99"});
  CliRun y = run({"verify", "symmetry", "--degree", "2", "--seed", "99"});
  EXPECT_EQ(x.out, y.out);
  EXPECT_EQ(x.code, kExitOk);
  CliRun z = run({"verify", "symmetry", "--degree", "2", "--seed", "99", "--format", "latex"});
  EXPECT_NE(z.out.find("\\begin{tabular}"), std::string::npos);
}

TEST(Cli, Specialize) {
  std::string path = temp_file("asg.json", R"({"c": "1", "base": "-1", "d": 1, "vars": [["3"], ["5"]]})");
  CliRun r = run({"specialize", path, "--degree", "3", "--ribbon", "1,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["values"].size(), 6u);
  // Lambda_3 vanishes for two variables and R_(1,1) = Lambda_2.
  EXPECT_EQ(j["values"][5]["value"], Json::parse(R"([["0"]])"));
  EXPECT_EQ(j["ribbon"]["value"], j["values"][3]["value"]);
  std::string bad = temp_file("bad.json", R"({"c": "1", "d": 1, "vars": [["3"]]})");
  EXPECT_EQ(run({"specialize", bad}).code, kExitUsage);
}

TEST(Cli, SpecializeSingularMinor) {
  // Equal variables make the Vandermonde-type denominator singular.
  std::string path = temp_file("sing.json", R"({"c": "1", "base": "-1", "d": 1, "vars": [["2"], ["3"]]})");
  CliRun r = run({"specialize", path});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("singular"), std::string::npos);
}

TEST(Suites, RegistryCoversEveryCriterion) {
  std::set<int> criteria;
  for (const auto& s : suites()) criteria.insert(s.criterion);
  EXPECT_EQ(criteria.size(), 11u);
  EXPECT_THROW(find_suite("missing"), std::invalid_argument);
  EXPECT_THROW(run_suite("bazin", 0, 1), std::invalid_argument);
}

TEST(Suites, CasesAreSorted) {
  Report rep = run_suite("extension", 2, 5);
  ASSERT_FALSE(rep.cases.empty());
  for (std::size_t i = 1; i < rep.cases.size(); ++i) EXPECT_LT(rep.cases[i - 1].id, rep.cases[i].id);
}
