#include "ncshift/parampoly.hpp"

#include <algorithm>
#include <sstream>

namespace ncshift {

Monomial Monomial::var(int index, int exponent) {
  Monomial m;
  if (exponent != 0) m.f_.emplace_back(index, exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [i, e] : factors) {
    if (!m.f_.empty() && m.f_.back().first == i)
      m.f_.back().second += e;
    else
      m.f_.emplace_back(i, e);
  }
  std::erase_if(m.f_, [](const Factor& f) { return f.second == 0; });
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial r;
  r.f_.reserve(x.f_.size() + y.f_.size());
  auto i = x.f_.begin(), j = y.f_.begin();
  while (i != x.f_.end() && j != y.f_.end()) {
    if (i->first < j->first) {
      r.f_.push_back(*i++);
    } else if (j->first < i->first) {
      r.f_.push_back(*j++);
    } else {
      r.f_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    }
  }
  r.f_.insert(r.f_.end(), i, x.f_.end());
  r.f_.insert(r.f_.end(), j, y.f_.end());
  return r;
}

bool operator<(const Monomial& x, const Monomial& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  return x.f_ < y.f_;
}

ParamPoly Seq::at(int i) const {
  if (!hat) return ParamPoly::var(i + shift);
  return -ParamPoly::var(1 - (i + shift));
}

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) t_.emplace_back(Monomial(), c);
}

ParamPoly::ParamPoly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) t_.emplace_back(m, c);
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  ParamPoly r;
  for (auto& t : terms) {
    if (!r.t_.empty() && r.t_.back().first == t.first)
      r.t_.back().second += t.second;
    else
      r.t_.push_back(std::move(t));
    if (r.t_.back().second.is_zero()) r.t_.pop_back();
  }
  return r;
}

Rational ParamPoly::constant_term() const {
  if (!t_.empty() && t_[0].first.is_one()) return t_[0].second;
  return Rational(0);
}

int ParamPoly::degree() const {
  // Terms are sorted by degree first, so the last one has the top degree.
  return t_.empty() ? -1 : t_.back().first.degree();
}

void add_scaled(ParamPoly& x, const ParamPoly& y, const Rational& c) {
  if (c.is_zero() || y.is_zero()) return;
  std::vector<ParamPoly::Term> out;
  const auto& a = x.terms();
  const auto& b = y.terms();
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.emplace_back(j->first, j->second * c);
      ++j;
    } else {
      Rational s = i->second + j->second * c;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i, ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) out.emplace_back(j->first, j->second * c);
  x.t_ = std::move(out);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  add_scaled(*this, o, Rational(1));
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  add_scaled(*this, o, Rational(-1));
  return *this;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_constant()) return y * x.t_[0].second;
  if (y.is_constant()) return x * y.t_[0].second;
  std::vector<ParamPoly::Term> prod;
  prod.reserve(x.t_.size() * y.t_.size());
  for (const auto& [mx, cx] : x.t_)
    for (const auto& [my, cy] : y.t_) prod.emplace_back(mx * my, cx * cy);
  return ParamPoly::from_terms(std::move(prod));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
  } else if (!c.is_one()) {
    for (auto& t : t_) t.second *= c;
  }
  return *this;
}

ParamPoly operator-(ParamPoly x) {
  for (auto& t : x.t_) t.second = -t.second;
  return x;
}

std::string ParamPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag.is_one() && !m.is_one();
    if (!unit) os << mag;
    bool star = !unit;
    for (const auto& [i, e] : m.factors()) {
      if (star) os << "*";
      star = true;
      os << "a" << (i < 0 ? "_{" + std::to_string(i) + "}" : "_" + std::to_string(i));
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

ParamPoly tau_shift(const ParamPoly& p, int s) {
  if (s == 0) return p;
  std::vector<ParamPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    auto f = m.factors();
    for (auto& [i, e] : f) i += s;
    out.emplace_back(Monomial::from_factors(std::move(f)), c);
  }
  return ParamPoly::from_terms(std::move(out));
}

ParamPoly hat_dual(const ParamPoly& p) {
  std::vector<ParamPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    auto f = m.factors();
    int deg = 0;
    for (auto& [i, e] : f) {
      i = 1 - i;
      deg += e;
    }
    out.emplace_back(Monomial::from_factors(std::move(f)), deg % 2 ? -c : c);
  }
  return ParamPoly::from_terms(std::move(out));
}

ParamPoly to_sequence(const ParamPoly& p, const Seq& b) {
  ParamPoly r = b.hat ? hat_dual(p) : p;
  return tau_shift(r, b.hat ? -b.shift : b.shift);
}

ParamSubstitution ParamSubstitution::equidistant(const Rational& c, const Rational& base) {
  ParamSubstitution s(Kind::Equidistant);
  s.c_ = c;
  s.base_ = base;
  return s;
}

ParamSubstitution ParamSubstitution::explicit_map(std::map<int, Rational> values) {
  ParamSubstitution s(Kind::Explicit);
  s.values_ = std::move(values);
  return s;
}

Rational ParamSubstitution::value(int i) const {
  switch (kind_) {
    case Kind::Equidistant:
      return base_ + Rational(i) * c_;
    case Kind::Explicit: {
      auto it = values_.find(i);
      if (it == values_.end()) throw MissingIndex(i);
      return it->second;
    }
    case Kind::Symbolic:
      break;
  }
  throw std::logic_error("symbolic substitution has no numeric values");
}

bool ParamSubstitution::whole_distant() const {
  switch (kind_) {
    case Kind::Equidistant:
      return c_.is_integer();
    case Kind::Explicit: {
      if (values_.empty()) return true;
      const Rational& ref = values_.begin()->second;
      for (const auto& [i, v] : values_)
        if (!(v - ref).is_integer()) return false;
      return true;
    }
    case Kind::Symbolic:
      return false;
  }
  return false;
}

Rational substitute(const ParamPoly& p, const ParamSubstitution& sub) {
  Rational total;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [i, e] : m.factors()) t *= pow(sub.value(i), static_cast<unsigned>(e));
    total += t;
  }
  return total;
}

ParamPoly substitute_poly(const ParamPoly& p, const ParamSubstitution& sub) {
  if (sub.kind() == ParamSubstitution::Kind::Symbolic) return p;
  return ParamPoly(substitute(p, sub));
}

ParamPoly complete_h(int degree, const std::vector<ParamPoly>& xs) {
  if (degree < 0) return {};
  // h_m(x_1..x_k) = h_m(x_1..x_{k-1}) + x_k h_{m-1}(x_1..x_k)
  std::vector<ParamPoly> h(degree + 1);
  h[0] = ParamPoly(1);
  for (const auto& x : xs)
    for (int m = 1; m <= degree; ++m) h[m] += x * h[m - 1];
  return h[degree];
}

ParamPoly elementary_e(int degree, const std::vector<ParamPoly>& xs) {
  if (degree < 0) return {};
  std::vector<ParamPoly> e(degree + 1);
  e[0] = ParamPoly(1);
  for (const auto& x : xs)
    for (int m = degree; m >= 1; --m) e[m] += x * e[m - 1];
  return e[degree];
}

}  // namespace ncshift
