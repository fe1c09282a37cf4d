#pragma once

#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "ncshift/parampoly.hpp"

namespace ncshift {

// Letter of an expression word: a generator of one of the families with a
// shift exponent, e.g. Lambda_{3}^{[-1]}.
enum class Family { S, Lambda, Psi };

struct Letter {
  Family family = Family::S;
  int k = 1;
  int shift = 0;

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.family == y.family && x.k == y.k && x.shift == y.shift;
  }
  friend bool operator<(const Letter& x, const Letter& y) {
    return std::tuple(x.k, x.family, x.shift) < std::tuple(y.k, y.family, y.shift);
  }
};

inline int letter_degree(int k) { return k; }
inline int letter_degree(const Letter& l) { return l.k; }

template <class L>
int word_degree(const std::vector<L>& w) {
  int d = 0;
  for (const auto& l : w) d += letter_degree(l);
  return d;
}

// Degree first, then lexicographic on letters.
struct DegLex {
  template <class L>
  bool operator()(const std::vector<L>& x, const std::vector<L>& y) const {
    int dx = word_degree(x), dy = word_degree(y);
    if (dx != dy) return dx < dy;
    return x < y;
  }
};

// Finite Q[a]-linear combination of words in the letters L. Multiplication
// concatenates words.
template <class L>
class FreeElement {
 public:
  using Word = std::vector<L>;
  using Map = std::map<Word, ParamPoly, DegLex>;

  FreeElement() = default;
  FreeElement(const ParamPoly& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) t_.emplace(Word{}, c);
  }
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  FreeElement(I c) : FreeElement(ParamPoly(c)) {}  // NOLINT(google-explicit-constructor)

  static FreeElement word(Word w, const ParamPoly& c = ParamPoly(1)) {
    FreeElement e;
    if (!c.is_zero()) e.t_.emplace(std::move(w), c);
    return e;
  }
  static FreeElement letter(const L& l) { return word(Word{l}); }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  ParamPoly coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? ParamPoly() : it->second;
  }
  int degree() const { return t_.empty() ? -1 : word_degree(t_.rbegin()->first); }

  void add_term(const Word& w, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void add_term(Word&& w, ParamPoly&& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(std::move(w), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  // this += c * x
  void add_scaled(const FreeElement& x, const ParamPoly& c) {
    if (c.is_zero()) return;
    bool scalar = c.is_constant();
    for (const auto& [w, v] : x.t_) add_term(w, scalar ? v * c.constant_term() : v * c);
  }

  FreeElement& operator+=(const FreeElement& o) {
    for (const auto& [w, v] : o.t_) add_term(w, v);
    return *this;
  }
  FreeElement& operator-=(const FreeElement& o) {
    for (const auto& [w, v] : o.t_) add_term(w, -v);
    return *this;
  }
  FreeElement& operator*=(const ParamPoly& c) {
    if (c.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto it = t_.begin(); it != t_.end();) {
      it->second *= c;
      it = it->second.is_zero() ? t_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend FreeElement operator+(FreeElement x, const FreeElement& y) { return x += y; }
  friend FreeElement operator-(FreeElement x, const FreeElement& y) { return x -= y; }
  friend FreeElement operator-(FreeElement x) {
    for (auto& [w, v] : x.t_) v = -v;
    return x;
  }
  friend FreeElement operator*(FreeElement x, const ParamPoly& c) { return x *= c; }
  friend FreeElement operator*(const ParamPoly& c, FreeElement x) { return x *= c; }
  friend FreeElement operator*(const FreeElement& x, const FreeElement& y) {
    FreeElement r;
    for (const auto& [wx, cx] : x.t_) {
      for (const auto& [wy, cy] : y.t_) {
        Word w;
        w.reserve(wx.size() + wy.size());
        w.insert(w.end(), wx.begin(), wx.end());
        w.insert(w.end(), wy.begin(), wy.end());
        r.add_term(std::move(w), cx * cy);
      }
    }
    return r;
  }
  friend bool operator==(const FreeElement& x, const FreeElement& y) { return x.t_ == y.t_; }
  friend bool operator!=(const FreeElement& x, const FreeElement& y) { return !(x == y); }

  // Applies a map to every coefficient.
  template <class F>
  FreeElement map_coeffs(F&& f) const {
    FreeElement r;
    for (const auto& [w, v] : t_) r.add_term(w, f(v));
    return r;
  }

 private:
  Map t_;
};

// Element of Sym^a in the S-monomial basis: letter k stands for S_{k}.
using Word = std::vector<int>;
using NCElement = FreeElement<int>;
// Polynomial in shifted family letters, kept unexpanded.
using Expr = FreeElement<Letter>;

inline NCElement S(int k) { return k == 0 ? NCElement(1) : (k < 0 ? NCElement() : NCElement::letter(k)); }
inline Expr letter_expr(Family f, int k, int shift = 0) {
  if (k == 0) return Expr(1);
  if (k < 0) return Expr();
  return Expr::letter(Letter{f, k, shift});
}

// Reverses every word (the linear part of an anti-automorphism).
template <class L>
FreeElement<L> reverse_words(const FreeElement<L>& x) {
  FreeElement<L> r;
  for (const auto& [w, v] : x.terms()) r.add_term(std::vector<L>(w.rbegin(), w.rend()), v);
  return r;
}

// Algebra map sending each letter to image(letter), linear over Q[a] after
// applying coeff_map to the coefficients.
template <class L, class R, class F, class G>
R substitute_letters(const FreeElement<L>& x, F&& image, G&& coeff_map) {
  R out;
  std::map<L, R> cache;
  auto get = [&](const L& l) -> const R& {
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    return cache.emplace(l, image(l)).first->second;
  };
  for (const auto& [w, v] : x.terms()) {
    R t(coeff_map(v));
    for (const auto& l : w) t = t * get(l);
    out += t;
  }
  return out;
}

// One-line rendering of an element: "3*S1*S2 + (a_1 - a_0)*S1".
std::string to_string(const NCElement& x, const std::string& letter = "S");
std::string to_string(const Expr& x);

}  // namespace ncshift
