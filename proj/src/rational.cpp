#include "ncshift/rational.hpp"

#include <stdexcept>

namespace ncshift {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  Rational r;
  r.v_ = mpq_class(n, d);
  r.v_.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1), b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace ncshift
