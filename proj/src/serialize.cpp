#include "ncshift/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncshift {

namespace {

Json word_json(const Word& w) {
  Json j = Json::array();
  for (int k : w) j.push_back(k);
  return j;
}

const char* family_tag(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::Lambda: return "Lambda";
    case Family::Psi: return "Psi";
  }
  return "?";
}

std::string rational_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument(std::string(what) + " must be a rational string");
}

Rational rational_from(const Json& j, const char* what) { return Rational::parse(rational_string(j, what)); }

}  // namespace

Json to_json(const ParamPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json e = Json::object();
    for (const auto& [i, x] : m.factors()) e[std::to_string(i)] = x;
    out.push_back({{"c", c.str()}, {"e", e}});
  }
  return out;
}

ParamPoly param_poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("parameter polynomial must be a list of terms");
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("c")) throw std::invalid_argument("term needs a coefficient");
    std::vector<Monomial::Factor> f;
    if (t.contains("e"))
      for (const auto& [k, v] : t.at("e").items()) f.emplace_back(std::stoi(k), v.get<int>());
    terms.emplace_back(Monomial::from_factors(std::move(f)), rational_from(t.at("c"), "coefficient"));
  }
  return ParamPoly::from_terms(std::move(terms));
}

Json to_json(const NCElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"word", word_json(w)}, {"coeff", to_json(c)}});
  return {{"basis", "S"}, {"terms", terms}};
}

NCElement nc_element_from_json(const Json& j) {
  if (!j.is_object() || j.value("basis", "") != "S" || !j.contains("terms"))
    throw std::invalid_argument("expected an S-basis element");
  NCElement x;
  for (const auto& t : j.at("terms")) x.add_term(t.at("word").get<Word>(), param_poly_from_json(t.at("coeff")));
  return x;
}

Json to_json(const Expr& x) {
  bool mixed = false;
  bool seen = false;
  Family family = Family::S;
  for (const auto& [w, c] : x.terms())
    for (const Letter& l : w) {
      if (seen && l.family != family) mixed = true;
      family = l.family;
      seen = true;
    }
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array(), shifts = Json::array(), fams = Json::array();
    for (const Letter& l : w) {
      word.push_back(l.k);
      shifts.push_back(l.shift);
      fams.push_back(family_tag(l.family));
    }
    Json t = {{"word", word}, {"shifts", shifts}};
    if (mixed) t["families"] = fams;
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  return {{"basis", mixed ? "mixed" : family_tag(family)}, {"terms", terms}};
}

Json to_json(const RibbonElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back({{"comp", word_json(key.first)}, {"shifts", word_json(key.second)}, {"coeff", to_json(c)}});
  return {{"basis", "R"}, {"terms", terms}};
}

Json to_json(const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json e;
    if (t.legs() == 2) {
      e = {{"left", word_json(key[0])}, {"right", word_json(key[1])}};
    } else {
      Json legs = Json::array();
      for (const Word& w : key) legs.push_back(word_json(w));
      e = {{"legs", legs}};
    }
    e["coeff"] = to_json(c);
    terms.push_back(e);
  }
  return {{"terms", terms}};
}

Json to_json(const MatValue& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const VariableAssignment& v) {
  Json vars = Json::array();
  for (const MatValue& x : v.vars) {
    Json flat = Json::array();
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) flat.push_back(x(i, j).str());
    vars.push_back(flat);
  }
  return {{"c", v.c.str()}, {"base", v.base.str()}, {"d", v.d}, {"vars", vars}};
}

VariableAssignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("assignment must be an object");
  for (const char* key : {"c", "base", "d", "vars"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("assignment is missing \"") + key + "\"");
  VariableAssignment v;
  v.c = rational_from(j.at("c"), "c");
  v.base = rational_from(j.at("base"), "base");
  if (!j.at("d").is_number_integer()) throw std::invalid_argument("d must be an integer");
  v.d = j.at("d").get<int>();
  if (v.d < 1) throw std::invalid_argument("assignment needs d >= 1");
  for (const auto& flat : j.at("vars")) {
    if (!flat.is_array() || static_cast<int>(flat.size()) != v.d * v.d)
      throw std::invalid_argument("each variable needs d*d row-major entries");
    MatValue x(v.d, v.d);
    for (int i = 0; i < v.d * v.d; ++i) x(i / v.d, i % v.d) = rational_from(flat[i], "matrix entry");
    v.vars.push_back(std::move(x));
  }
  v.validate();
  return v;
}

bool Report::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const ReportCase& c) { return c.pass; });
}

int Report::unexpected_failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const ReportCase& c) {
    return !c.pass && c.expect == Expectation::Pass;
  }));
}

int Report::known_failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const ReportCase& c) {
    return !c.pass && c.expect == Expectation::KnownFailure;
  }));
}

void Report::add(const std::string& id, const CheckResult& r, Expectation expect) {
  cases.push_back({id, r.pass, r.witness, expect, r.seed, r.retries});
  retries += r.retries;
}

void Report::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const ReportCase& x, const ReportCase& y) { return x.id < y.id; });
}

Json to_json(const Report& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json e = {{"id", c.id}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (c.expect == Expectation::PrintedDiffers) e["expect"] = "printed-differs";
    if (c.expect == Expectation::KnownFailure) e["expect"] = "known-failure";
    if (c.seed != 0) e["seed"] = c.seed;
    if (c.retries != 0) e["retries"] = c.retries;
    cases.push_back(e);
  }
  return {{"suite", r.suite}, {"cases", cases}, {"seed", r.seed}, {"retries", r.retries}};
}

namespace {

std::string seq_latex(const Seq& b) {
  std::string base = b.hat ? "\\hat{a}" : "a";
  if (b.shift == 0) return base;
  return "\\tau^{" + std::to_string(b.shift) + "}" + base;
}

std::string rational_latex(const Rational& q) {
  if (q.is_integer()) return q.str();
  const Rational m = abs(q);
  std::string s = m.raw().get_num().get_str(), t = m.raw().get_den().get_str();
  return std::string(q.sign() < 0 ? "-" : "") + "\\frac{" + s + "}{" + t + "}";
}

// Coefficient in front of a product; empty product prints the bare value.
std::string coeff_latex(const ParamPoly& c, bool first, bool bare) {
  std::ostringstream os;
  if (c.is_constant()) {
    const Rational v = c.constant_term();
    if (!first) os << (v.sign() < 0 ? " - " : " + ");
    else if (v.sign() < 0) os << "-";
    const Rational m = abs(v);
    if (!m.is_one() || bare) os << rational_latex(m);
  } else {
    if (!first) os << " + ";
    os << "\\left(" << to_latex(c) << "\\right)";
  }
  return os.str();
}

template <class Map, class F>
std::string sum_latex(const Map& terms, F&& body) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    std::string b = body(key);
    os << coeff_latex(c, first, b.empty()) << b;
    first = false;
  }
  return os.str();
}

std::string letter_latex(Family f, int k, int shift, const Seq& b) {
  static const char* names[] = {"S", "\\Lambda", "\\Psi"};
  std::string s = std::string(names[static_cast<int>(f)]) + "_{" + std::to_string(k) + ";" + seq_latex(b) + "}";
  if (shift != 0) s += "^{[" + std::to_string(shift) + "]}";
  return s;
}

std::string word_latex(const Word& w, const Seq& b) {
  std::string s;
  for (int k : w) s += letter_latex(Family::S, k, 0, b);
  return s;
}

std::string list_latex(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string to_latex(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (!mag.is_one() || m.is_one()) os << rational_latex(mag);
    for (const auto& [i, e] : m.factors()) {
      os << "a_{" << i << "}";
      if (e != 1) os << "^{" << e << "}";
    }
  }
  return os.str();
}

std::string to_latex(const NCElement& x, const Seq& b) {
  return sum_latex(x.terms(), [&](const Word& w) { return word_latex(w, b); });
}

std::string to_latex(const Expr& x, const Seq& b) {
  return sum_latex(x.terms(), [&](const std::vector<Letter>& w) {
    std::string s;
    for (const Letter& l : w) s += letter_latex(l.family, l.k, l.shift, b);
    return s;
  });
}

std::string to_latex(const RibbonElement& x, const Seq& b) {
  return sum_latex(x.terms(), [&](const RibbonElement::Key& key) {
    if (key.first.empty()) return std::string();
    std::string s = "R_{(" + list_latex(key.first) + ");" + seq_latex(b) + "}";
    if (key.second != canonical_shifts(key.first)) s += "^{[" + list_latex(key.second) + "]}";
    return s;
  });
}

std::string to_latex(const TensorElement& t, const Seq& b) {
  return sum_latex(t.terms(), [&](const TensorElement::Key& key) {
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) s += " \\otimes ";
      s += key[i].empty() ? "1" : word_latex(key[i], b);
    }
    return s;
  });
}

std::string to_latex(const MatValue& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "\\\\";
    for (int j = 0; j < m.cols(); ++j) os << (j ? "&" : "") << rational_latex(m(i, j));
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string to_latex(const Report& r) {
  std::ostringstream os;
  os << "\\begin{tabular}{ll}\n% suite " << r.suite << ", seed " << r.seed << ", retries " << r.retries << "\n";
  for (const auto& c : r.cases) {
    std::string id = c.id;
    std::string esc;
    for (char ch : id) {
      if (ch == '_' || ch == '#' || ch == '%' || ch == '&') esc += '\\';
      esc += ch;
    }
    os << "\\texttt{" << esc << "} & " << (c.pass ? "pass" : "fail") << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace ncshift
