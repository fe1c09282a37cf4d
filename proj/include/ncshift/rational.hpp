#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace ncshift {

// Exact rational number. Thin wrapper over mpq_class that evaluates eagerly,
// so it can be dropped into Eigen matrices without expression-template clashes.
class Rational {
 public:
  Rational() = default;
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) {}

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
  // or a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);
inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace ncshift
