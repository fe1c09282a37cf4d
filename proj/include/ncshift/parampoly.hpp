#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncshift/rational.hpp"

namespace ncshift {

// Product of a_i^e, stored as (index, exponent) pairs with strictly
// increasing index and positive exponents.
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;
  static Monomial var(int index, int exponent = 1);
  // Builds from arbitrary pairs; merges repeated indices and drops zero powers.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return f_; }
  int degree() const;
  bool is_one() const { return f_.empty(); }

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  // Graded order: total degree, then lexicographic on the factor list.
  friend bool operator<(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.f_ == y.f_; }
  friend bool operator!=(const Monomial& x, const Monomial& y) { return x.f_ != y.f_; }

 private:
  std::vector<Factor> f_;
};

class ParamPoly;

// A parameter sequence b obtained from a by the shift tau and the dual hat:
// b_i = a_{i+shift} when !hat, b_i = -a_{1-(i+shift)} when hat.
struct Seq {
  bool hat = false;
  int shift = 0;

  ParamPoly at(int i) const;
  Seq tau(int t) const { return {hat, shift + t}; }
  Seq dual() const { return {!hat, -shift}; }
  friend bool operator==(const Seq& x, const Seq& y) { return x.hat == y.hat && x.shift == y.shift; }
  friend bool operator<(const Seq& x, const Seq& y) { return std::pair(x.hat, x.shift) < std::pair(y.hat, y.shift); }
};

inline constexpr Seq kA{false, 0};
inline constexpr Seq kAHat{true, 0};

// Polynomial in the commuting parameters a_i with exact rational coefficients.
// Terms are kept sorted by monomial order with no zero coefficients.
class ParamPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  ParamPoly(I c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamPoly(const Monomial& m, const Rational& c);

  static ParamPoly var(int index) { return ParamPoly(Monomial::var(index), Rational(1)); }
  // Takes ownership of arbitrary terms and normalizes them.
  static ParamPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Rational constant_term() const;
  int degree() const;
  std::size_t size() const { return t_.size(); }

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);

  friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
  friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator*(ParamPoly x, const Rational& c) { return x *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly x) { return x *= c; }
  friend ParamPoly operator-(ParamPoly x);

  friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.t_ == y.t_; }
  friend bool operator!=(const ParamPoly& x, const ParamPoly& y) { return !(x == y); }
  // Total order on canonical forms (term lists compared lexicographically).
  friend bool operator<(const ParamPoly& x, const ParamPoly& y) { return x.t_ < y.t_; }

  std::string str() const;

  friend void add_scaled(ParamPoly& x, const ParamPoly& y, const Rational& c);

 private:
  std::vector<Term> t_;
};

// x += c * y without materializing c * y when c is a scalar.
void add_scaled(ParamPoly& x, const ParamPoly& y, const Rational& c);

ParamPoly tau_shift(const ParamPoly& p, int s);
ParamPoly hat_dual(const ParamPoly& p);
// Ring map a_i -> b_i for a parameter sequence b.
ParamPoly to_sequence(const ParamPoly& p, const Seq& b);
// Ring map a_i -> image(i).
template <class F>
ParamPoly substitute_vars(const ParamPoly& p, F&& image);

// Numeric or symbolic assignment of the parameters.
class ParamSubstitution {
 public:
  enum class Kind { Symbolic, Equidistant, Explicit };

  static ParamSubstitution symbolic() { return ParamSubstitution(Kind::Symbolic); }
  static ParamSubstitution equidistant(const Rational& c, const Rational& base);
  static ParamSubstitution explicit_map(std::map<int, Rational> values);

  Kind kind() const { return kind_; }
  const Rational& step() const { return c_; }
  const Rational& base() const { return base_; }
  const std::map<int, Rational>& values() const { return values_; }

  // Value of a_i. Throws MissingIndex for an explicit map without i and
  // std::logic_error for a symbolic substitution.
  Rational value(int i) const;
  // Whole-distant: every difference a_i - a_j is an integer.
  bool whole_distant() const;

 private:
  explicit ParamSubstitution(Kind k) : kind_(k) {}
  Kind kind_;
  Rational c_, base_;
  std::map<int, Rational> values_;
};

class MissingIndex : public std::out_of_range {
 public:
  explicit MissingIndex(int i) : std::out_of_range("no value for a_" + std::to_string(i)), index(i) {}
  int index;
};

Rational substitute(const ParamPoly& p, const ParamSubstitution& sub);
// Partial evaluation that keeps the result a polynomial (constant unless
// the substitution is symbolic).
ParamPoly substitute_poly(const ParamPoly& p, const ParamSubstitution& sub);

// Commutative complete homogeneous and elementary symmetric polynomials.
ParamPoly complete_h(int degree, const std::vector<ParamPoly>& xs);
ParamPoly elementary_e(int degree, const std::vector<ParamPoly>& xs);

template <class F>
ParamPoly substitute_vars(const ParamPoly& p, F&& image) {
  std::map<std::pair<int, int>, ParamPoly> powers;
  auto power = [&](int i, int e) -> const ParamPoly& {
    auto key = std::pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    ParamPoly r(1);
    ParamPoly base = image(i);
    for (int k = 0; k < e; ++k) r *= base;
    return powers.emplace(key, std::move(r)).first->second;
  };
  ParamPoly out;
  for (const auto& [m, c] : p.terms()) {
    ParamPoly t(c);
    for (const auto& [i, e] : m.factors()) t *= power(i, e);
    out += t;
  }
  return out;
}

}  // namespace ncshift
