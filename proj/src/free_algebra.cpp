#include "ncshift/free_algebra.hpp"

#include <sstream>

namespace ncshift {
namespace {

std::string coeff_prefix(const ParamPoly& c, bool first, bool empty_word) {
  std::ostringstream os;
  if (c.is_constant()) {
    Rational v = c.constant_term();
    if (!first) os << (v.sign() < 0 ? " - " : " + ");
    else if (v.sign() < 0) os << "-";
    Rational mag = abs(v);
    if (!mag.is_one() || empty_word) os << mag << (empty_word ? "" : "*");
  } else {
    if (!first) os << " + ";
    os << "(" << c.str() << ")" << (empty_word ? "" : "*");
  }
  return os.str();
}

std::string family_name(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::Lambda: return "L";
    case Family::Psi: return "P";
  }
  return "?";
}

}  // namespace

std::string to_string(const NCElement& x, const std::string& letter) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    os << coeff_prefix(c, first, w.empty());
    first = false;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "*" : "") << letter << w[i];
  }
  return os.str();
}

std::string to_string(const Expr& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    os << coeff_prefix(c, first, w.empty());
    first = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      os << (i ? "*" : "") << family_name(w[i].family) << w[i].k;
      if (w[i].shift != 0) os << "[" << w[i].shift << "]";
    }
  }
  return os.str();
}

}  // namespace ncshift
