#include "ncshift/hopf.hpp"

#include <random>
#include <sstream>

#include "ncshift/families.hpp"
#include "ncshift/memo.hpp"
#include "ncshift/ribbon.hpp"

namespace ncshift {
namespace {

Memo<Word, TensorElement> coproduct_memo;

std::string key_string(const TensorElement::Key& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? " (x) " : "") + word_string(k[i]);
  return s;
}

CheckResult compare_tensors(const TensorElement& lhs, const TensorElement& rhs, const std::string& label) {
  TensorElement diff = lhs - rhs;
  if (diff.is_zero()) return {};
  const auto& k = diff.terms().begin()->first;
  return CheckResult::fail(label + ": coefficient of " + key_string(k) + " is " + lhs.coeff(k).str() + " vs " + rhs.coeff(k).str());
}

TensorElement word_coproduct(const Word& w) {
  return coproduct_memo.get(w, [&] {
    Expr in_psi = rewrite_in_psi(NCElement::word(w));
    // Delta of a Psi word: sum over order-preserving splits of its letters.
    std::map<std::pair<Word, Word>, ParamPoly> split;
    for (const auto& [letters, c] : in_psi.terms()) {
      const std::size_t n = letters.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Word left, right;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? left : right).push_back(letters[i].k);
        split[{left, right}] += c;
      }
    }
    TensorElement out(2);
    for (const auto& [lr, c] : split) {
      if (c.is_zero()) continue;
      out.add_scaled(TensorElement::pure({family_word(Family::Psi, lr.first), family_word(Family::Psi, lr.second)}), c);
    }
    return out;
  });
}

}  // namespace

TensorElement TensorElement::pure(const std::vector<NCElement>& factors) {
  TensorElement t(static_cast<int>(factors.size()));
  t.t_.emplace(Key(factors.size()), ParamPoly(1));
  for (std::size_t leg = 0; leg < factors.size(); ++leg) {
    Map next;
    for (const auto& [k, v] : t.t_)
      for (const auto& [w, c] : factors[leg].terms()) {
        Key nk = k;
        nk[leg] = w;
        ParamPoly nv = v * c;
        auto it = next.find(nk);
        if (it == next.end()) {
          next.emplace(std::move(nk), std::move(nv));
        } else {
          it->second += nv;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    t.t_ = std::move(next);
  }
  return t;
}

TensorElement TensorElement::unit(int legs) { return pure(std::vector<NCElement>(static_cast<std::size_t>(legs), NCElement(1))); }

ParamPoly TensorElement::coeff(const Key& k) const {
  auto it = t_.find(k);
  return it == t_.end() ? ParamPoly() : it->second;
}

void TensorElement::add_term(const Key& k, const ParamPoly& v) {
  if (v.is_zero()) return;
  if (static_cast<int>(k.size()) != legs_) throw std::invalid_argument("tensor term has the wrong number of legs");
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void TensorElement::add_scaled(const TensorElement& x, const ParamPoly& c) {
  for (const auto& [k, v] : x.t_) add_term(k, v * c);
}

TensorElement TensorElement::map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& f) const {
  TensorElement r(legs_);
  for (const auto& [k, v] : t_) r.add_term(k, f(v));
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, v] : o.t_) add_term(k, v);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, v] : o.t_) add_term(k, -v);
  return *this;
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
  if (x.legs_ != y.legs_) throw std::invalid_argument("tensor product of different arities");
  TensorElement r(x.legs_);
  for (const auto& [kx, vx] : x.t_)
    for (const auto& [ky, vy] : y.t_) {
      TensorElement::Key k(kx.size());
      for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = kx[i];
        k[i].insert(k[i].end(), ky[i].begin(), ky[i].end());
      }
      r.add_term(k, vx * vy);
    }
  return r;
}

TensorElement coproduct(const NCElement& x) {
  TensorElement out(2);
  for (const auto& [w, v] : x.terms()) out.add_scaled(word_coproduct(w), v);
  return out;
}

ParamPoly counit(const NCElement& x) { return rewrite_in_psi(x).coeff({}); }

NCElement antipode(const NCElement& x) {
  NCElement out;
  const Expr in_psi = rewrite_in_psi(x);
  for (const auto& [letters, c] : in_psi.terms()) {
    Word rev;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) rev.push_back(it->k);
    out.add_scaled(family_word(Family::Psi, rev), letters.size() % 2 ? -c : c);
  }
  return out;
}

TensorElement apply_on_leg(const TensorElement& t, int leg, const std::function<TensorElement(const NCElement&)>& f) {
  TensorElement out(-1);
  bool first = true;
  for (const auto& [k, v] : t.terms()) {
    TensorElement image = f(NCElement::word(k[static_cast<std::size_t>(leg)]));
    if (first) {
      out = TensorElement(t.legs() - 1 + image.legs());
      first = false;
    }
    for (const auto& [ik, iv] : image.terms()) {
      TensorElement::Key nk(k.begin(), k.begin() + leg);
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + leg + 1, k.end());
      out.add_term(nk, v * iv);
    }
  }
  return first ? TensorElement(t.legs() + 1) : out;
}

NCElement multiply_legs(const TensorElement& t, const std::function<NCElement(const NCElement&)>& f,
                        const std::function<NCElement(const NCElement&)>& g) {
  if (t.legs() != 2) throw std::invalid_argument("multiply_legs needs a 2-fold tensor");
  NCElement out;
  for (const auto& [k, v] : t.terms()) out.add_scaled(f(NCElement::word(k[0])) * g(NCElement::word(k[1])), v);
  return out;
}

TensorElement printed_coproduct_s2_shifted() {
  const NCElement s1m = shift_S(1, -1);
  TensorElement t = TensorElement::pure({S(2), 1}) + TensorElement::pure({1, S(2)});
  t.add_scaled(TensorElement::pure({s1m, S(1)}) + TensorElement::pure({S(1), s1m}), ParamPoly(Rational(1, 2)));
  return t;
}

TensorElement printed_coproduct_s2() {
  return TensorElement::pure({S(2), 1}) + TensorElement::pure({S(1), S(1)}) + TensorElement::pure({1, S(2)});
}

TensorElement printed_coproduct_s3() {
  TensorElement t = TensorElement::pure({S(3), 1}) + TensorElement::pure({S(2), S(1)}) + TensorElement::pure({S(1), S(2)}) +
                    TensorElement::pure({1, S(3)});
  t.add_scaled(TensorElement::pure({S(1), S(1)}), (ParamPoly::var(0) - ParamPoly::var(1)) * Rational(4, 3));
  return t;
}

ParamPoly equidistant_projection(const ParamPoly& p) {
  return substitute_vars(p, [](int i) { return ParamPoly::var(0) * Rational(1 - i) + ParamPoly::var(1) * Rational(i); });
}

CheckResult verify_coproduct_examples(bool project_equidistant) {
  CheckResult r = compare_tensors(coproduct(S(2)), printed_coproduct_s2(), "Delta(S_2)");
  r &= compare_tensors(printed_coproduct_s2_shifted(), printed_coproduct_s2(), "Delta(S_2) printed lines");
  TensorElement lhs = coproduct(S(3)), rhs = printed_coproduct_s3();
  if (project_equidistant) {
    lhs = lhs.map_coeffs(equidistant_projection);
    rhs = rhs.map_coeffs(equidistant_projection);
  }
  r &= compare_tensors(lhs, rhs, project_equidistant ? "Delta(S_3) equidistant" : "Delta(S_3)");
  return r;
}

namespace {

std::vector<Word> psi_corpus(int d) {
  std::vector<Word> out{Word{}};
  for (int deg = 1; deg <= d; ++deg)
    for (auto& c : compositions(deg)) out.push_back(c);
  return out;
}

}  // namespace

CheckResult verify_coassociativity(int d) {
  CheckResult r;
  for (const Word& w : psi_corpus(d)) {
    TensorElement delta = coproduct(family_word(Family::Psi, w));
    TensorElement left = apply_on_leg(delta, 0, coproduct);
    TensorElement right = apply_on_leg(delta, 1, coproduct);
    r &= compare_tensors(left, right, "coassociativity on Psi" + word_string(w));
    if (!r.pass) return r;
  }
  return r;
}

CheckResult verify_counit(int d) {
  auto eps = [](const NCElement& x) { return NCElement(counit(x)); };
  auto id = [](const NCElement& x) { return x; };
  CheckResult r;
  for (const Word& w : psi_corpus(d)) {
    NCElement x = family_word(Family::Psi, w);
    TensorElement delta = coproduct(x);
    r &= compare(multiply_legs(delta, eps, id), x, "left counit on Psi" + word_string(w));
    r &= compare(multiply_legs(delta, id, eps), x, "right counit on Psi" + word_string(w));
    if (!r.pass) return r;
  }
  return r;
}

CheckResult verify_morphism(int d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto random_element = [&](int deg) {
    NCElement x;
    auto comps = compositions(deg);
    for (int t = 0; t < 3; ++t) {
      int pick_deg = 1 + static_cast<int>(gen() % static_cast<unsigned>(deg));
      auto c = compositions(pick_deg);
      ParamPoly coeff(static_cast<int>(gen() % 5) - 2);
      if (gen() % 3 == 0) coeff += ParamPoly::var(static_cast<int>(gen() % 3));
      x.add_term(c[gen() % c.size()], coeff);
    }
    if (x.is_zero()) x = S(deg);
    return x;
  };
  CheckResult r;
  r.seed = seed;
  for (int trial = 0; trial < 20 && r.pass; ++trial) {
    int dx = 1 + static_cast<int>(gen() % static_cast<unsigned>(d - 1));
    int dy = 1 + static_cast<int>(gen() % static_cast<unsigned>(d - dx));
    NCElement x = random_element(dx), y = random_element(dy);
    r &= compare_tensors(coproduct(x * y), coproduct(x) * coproduct(y), "Delta(xy) trial " + std::to_string(trial));
  }
  return r;
}

CheckResult verify_antipode(int d) {
  auto id = [](const NCElement& x) { return x; };
  CheckResult r;
  for (int deg = 0; deg <= d; ++deg) {
    std::vector<Word> words = deg == 0 ? std::vector<Word>{Word{}} : compositions(deg);
    for (const Word& w : words) {
      NCElement x = NCElement::word(w);
      NCElement unit = NCElement(counit(x));
      TensorElement delta = coproduct(x);
      r &= compare(multiply_legs(delta, antipode, id), unit, "m(S (x) id)Delta on S" + word_string(w));
      r &= compare(multiply_legs(delta, id, antipode), unit, "m(id (x) S)Delta on S" + word_string(w));
      if (!r.pass) return r;
    }
  }
  return r;
}

std::string to_string(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t.terms()) {
    os << (first ? "" : " + ") << "(" << v.str() << ")*";
    first = false;
    for (std::size_t i = 0; i < k.size(); ++i) {
      os << (i ? " (x) " : "");
      if (k[i].empty()) os << "1";
      for (std::size_t j = 0; j < k[i].size(); ++j) os << (j ? "*" : "") << "S" << k[i][j];
    }
  }
  return os.str();
}

}  // namespace ncshift
