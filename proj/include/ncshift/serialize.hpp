#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncshift/free_algebra.hpp"
#include "ncshift/hopf.hpp"
#include "ncshift/ribbon.hpp"
#include "ncshift/special.hpp"

namespace ncshift {

using Json = nlohmann::ordered_json;

// [{"c": "p/q", "e": {"i": exponent, ...}}, ...] in canonical term order.
Json to_json(const ParamPoly& p);
ParamPoly param_poly_from_json(const Json& j);

// {"basis": "S", "terms": [{"word": [...], "coeff": ...}]}, words in
// (degree, lex) order.
Json to_json(const NCElement& x);
NCElement nc_element_from_json(const Json& j);
// Family words: "word" holds the indices, "shifts" the letter shifts and, for
// mixed families, "families" the letter families.
Json to_json(const Expr& x);
Json to_json(const RibbonElement& x);
Json to_json(const TensorElement& t);
Json to_json(const MatValue& m);

// {"c": "p/q", "base": "p/q", "d": int, "vars": [[row-major rationals]]}.
// Throws std::invalid_argument on malformed input.
Json to_json(const VariableAssignment& v);
VariableAssignment assignment_from_json(const Json& j);

// What a case is expected to do. PrintedDiffers marks a literal reading of a
// printed formula whose corrected form is checked separately; KnownFailure
// marks a required statement that does not hold.
enum class Expectation { Pass, PrintedDiffers, KnownFailure };

struct ReportCase {
  std::string id;
  bool pass = true;
  std::string witness;
  Expectation expect = Expectation::Pass;
  std::uint64_t seed = 0;
  int retries = 0;
};

struct Report {
  std::string suite;
  std::vector<ReportCase> cases;
  std::uint64_t seed = 0;
  int retries = 0;

  // Every case passed.
  bool pass() const;
  // No Pass or KnownFailure case failed; printed-differs cases are informational.
  bool verified() const { return unexpected_failures() == 0 && known_failures() == 0; }
  // Failures not covered by an expectation.
  int unexpected_failures() const;
  int known_failures() const;
  void add(const std::string& id, const CheckResult& r, Expectation expect = Expectation::Pass);
  // Cases sorted by id so output does not depend on evaluation order.
  void sort_cases();
};

Json to_json(const Report& r);

// LaTeX in the S_{k;a}^{[s]}, \Lambda_{k;a}, \Psi_{k;a}, R_{I;a}^{[K]} notation.
std::string to_latex(const ParamPoly& p);
std::string to_latex(const NCElement& x, const Seq& b = kA);
std::string to_latex(const Expr& x, const Seq& b = kA);
std::string to_latex(const RibbonElement& x, const Seq& b = kA);
std::string to_latex(const TensorElement& t, const Seq& b = kA);
std::string to_latex(const MatValue& m);
std::string to_latex(const Report& r);

}  // namespace ncshift
