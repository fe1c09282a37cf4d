#include <gtest/gtest.h>

#include "gen.hpp"
#include "ncshift/families.hpp"
#include "ncshift/serialize.hpp"

using namespace ncshift;

TEST(Json, ParamPolyShape) {
  ParamPoly p = ParamPoly(Rational(1, 2)) * ParamPoly::var(3) - ParamPoly(2);
  Json j = to_json(p);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.dump(), R"([{"c":"-2","e":{}},{"c":"1/2","e":{"3":1}}])");
  EXPECT_EQ(to_json(ParamPoly()).dump(), "[]");
}

TEST(Json, MalformedInputThrows) {
  EXPECT_THROW(param_poly_from_json(Json::parse(R"([{"c":"x","e":{}}])")), std::invalid_argument);
  EXPECT_THROW(param_poly_from_json(Json::parse(R"({"c":"1"})")), std::invalid_argument);
  EXPECT_THROW(nc_element_from_json(Json::parse(R"({"basis":"Lambda","terms":[]})")), std::invalid_argument);
}

TEST(JsonProperty, RoundTrips) {
  gen::Rng r(81);
  for (int trial = 0; trial < 50; ++trial) {
    ParamPoly p = gen::param_poly(r);
    ASSERT_EQ(param_poly_from_json(to_json(p)), p);
    NCElement x = gen::element(r);
    ASSERT_EQ(nc_element_from_json(Json::parse(to_json(x).dump())), x);
  }
}

TEST(Json, AssignmentRoundTrip) {
  std::uint64_t state = 3;
  VariableAssignment v = VariableAssignment::random(3, 2, Rational(1, 2), Rational(-1), state);
  VariableAssignment w = assignment_from_json(Json::parse(to_json(v).dump()));
  EXPECT_EQ(w.c, v.c);
  EXPECT_EQ(w.base, v.base);
  ASSERT_EQ(w.n(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(w.vars[i], v.vars[i]);
}

TEST(Json, AssignmentValidation) {
  EXPECT_THROW(assignment_from_json(Json::parse(R"({"c":"1","base":"0","d":2,"vars":[["1","2","3"]]})")),
               std::invalid_argument);
  EXPECT_THROW(assignment_from_json(Json::parse(R"({"c":"1","base":"0","d":1,"vars":[]})")), std::invalid_argument);
  EXPECT_THROW(assignment_from_json(Json::parse(R"({"c":"1","base":"0","d":1,"vars":[["1/0"]]})")), std::invalid_argument);
  EXPECT_NO_THROW(assignment_from_json(Json::parse(R"({"c":"1","base":"0","d":1,"vars":[["1"]]})")));
}

TEST(Json, ReportSchema) {
  Report rep;
  rep.suite = "demo";
  rep.seed = 4;
  rep.add("b", CheckResult::fail("entry (1,1): 1 vs 0"), Expectation::KnownFailure);
  rep.add("a", CheckResult{});
  rep.sort_cases();
  Json j = to_json(rep);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["seed"], 4);
  EXPECT_EQ(j["cases"][0]["id"], "a");
  EXPECT_FALSE(j["cases"][0].contains("witness"));
  EXPECT_EQ(j["cases"][1]["witness"], "entry (1,1): 1 vs 0");
  EXPECT_EQ(j["cases"][1]["expect"], "known-failure");
  EXPECT_FALSE(rep.pass());
  EXPECT_FALSE(rep.verified());
  EXPECT_EQ(rep.known_failures(), 1);
  EXPECT_EQ(rep.unexpected_failures(), 0);
}

TEST(Json, PrintedDiffersDoesNotFailVerification) {
  Report rep;
  rep.add("x", CheckResult::fail("w"), Expectation::PrintedDiffers);
  EXPECT_FALSE(rep.pass());
  EXPECT_TRUE(rep.verified());
}

TEST(Latex, Notation) {
  EXPECT_EQ(to_latex(ParamPoly::var(1) - ParamPoly::var(0)), "-a_{0} + a_{1}");
  EXPECT_EQ(to_latex(letter_expr(Family::S, 2, 1)), "S_{2;a}^{[1]}");
  EXPECT_EQ(to_latex(letter_expr(Family::Lambda, 3)), "\\Lambda_{3;a}");
  EXPECT_EQ(to_latex(S(1) * S(2) - S(3)), "S_{1;a}S_{2;a} - S_{3;a}");
  RibbonElement rb;
  rb.add_term({2, 1}, {2, 0}, ParamPoly(1));
  EXPECT_EQ(to_latex(rb), "R_{(2,1);a}");
  RibbonElement shifted;
  shifted.add_term({2, 1}, {3, 0}, ParamPoly(2));
  EXPECT_EQ(to_latex(shifted), "2R_{(2,1);a}^{[3,0]}");
  MatValue m = identity(2);
  m(0, 1) = Rational(-1, 2);
  EXPECT_EQ(to_latex(m), "\\begin{pmatrix}1&-\\frac{1}{2}\\\\0&1\\end{pmatrix}");
}
