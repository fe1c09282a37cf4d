#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncshift/check.hpp"
#include "ncshift/free_algebra.hpp"

namespace ncshift {

// Element of the k-fold tensor power of Sym^a in the S-word basis. Products
// multiply leg by leg.
class TensorElement {
 public:
  using Key = std::vector<Word>;
  using Map = std::map<Key, ParamPoly>;

  explicit TensorElement(int legs = 2) : legs_(legs) {}
  static TensorElement pure(const std::vector<NCElement>& factors);
  static TensorElement unit(int legs = 2);

  int legs() const { return legs_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  ParamPoly coeff(const Key& k) const;
  void add_term(const Key& k, const ParamPoly& v);
  void add_scaled(const TensorElement& x, const ParamPoly& c);
  TensorElement map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& f) const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
  friend TensorElement operator-(TensorElement x, const TensorElement& y) { return x -= y; }
  friend TensorElement operator*(const TensorElement& x, const TensorElement& y);
  friend bool operator==(const TensorElement& x, const TensorElement& y) { return x.legs_ == y.legs_ && x.t_ == y.t_; }

 private:
  int legs_;
  Map t_;
};

// Coproduct with Delta(Psi_n) = Psi_n (x) 1 + 1 (x) Psi_n, computed through the
// Psi rewrite and expanded back into S words on both legs.
TensorElement coproduct(const NCElement& x);
ParamPoly counit(const NCElement& x);
NCElement antipode(const NCElement& x);

// Applies f to one leg of every term, splicing the resulting legs in place.
TensorElement apply_on_leg(const TensorElement& t, int leg, const std::function<TensorElement(const NCElement&)>& f);
// Multiplies the legs of a 2-fold tensor after applying f and g to them.
NCElement multiply_legs(const TensorElement& t, const std::function<NCElement(const NCElement&)>& f,
                        const std::function<NCElement(const NCElement&)>& g);

// The printed coproducts of S_2 and S_3.
TensorElement printed_coproduct_s2_shifted();
TensorElement printed_coproduct_s2();
TensorElement printed_coproduct_s3();
// Restriction to equidistant parameters: a_i -> (1 - i) a_0 + i a_1.
ParamPoly equidistant_projection(const ParamPoly& p);

CheckResult verify_coproduct_examples(bool project_equidistant);
CheckResult verify_coassociativity(int d);
CheckResult verify_counit(int d);
CheckResult verify_morphism(int d, std::uint64_t seed);
CheckResult verify_antipode(int d);

std::string to_string(const TensorElement& t);

}  // namespace ncshift
