#pragma once

// Hand-rolled generators for property tests. Everything is driven by a
// seeded splitmix64 so failures reproduce.

#include <cstdint>
#include <vector>

#include "ncshift/free_algebra.hpp"
#include "ncshift/matvalue.hpp"
#include "ncshift/parampoly.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t s_;
};

inline ncshift::Rational rational(Rng& r, int bound = 5) {
  return ncshift::Rational(r.range(-bound, bound), r.range(1, 3));
}

inline ncshift::Rational nonzero_rational(Rng& r, int bound = 5) {
  ncshift::Rational q;
  while (q.is_zero()) q = rational(r, bound);
  return q;
}

// Sparse polynomial in a_{lo..hi} of degree <= 2.
inline ncshift::ParamPoly param_poly(Rng& r, int lo = -2, int hi = 3, int terms = 3) {
  ncshift::ParamPoly p;
  for (int t = 0; t < terms; ++t) {
    ncshift::ParamPoly m = rational(r);
    for (int e = r.range(0, 2); e > 0; --e) m *= ncshift::ParamPoly::var(r.range(lo, hi));
    p += m;
  }
  return p;
}

inline ncshift::Word word(Rng& r, int max_degree) {
  ncshift::Word w;
  int left = r.range(0, max_degree);
  while (left > 0) {
    int k = r.range(1, left);
    w.push_back(k);
    left -= k;
  }
  return w;
}

inline ncshift::NCElement element(Rng& r, int max_degree = 4, int terms = 3) {
  ncshift::NCElement x;
  for (int t = 0; t < terms; ++t) x.add_term(word(r, max_degree), param_poly(r));
  return x;
}

inline ncshift::MatValue matrix(Rng& r, int rows, int cols) {
  ncshift::MatValue m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rational(r, 4);
  return m;
}

}  // namespace gen
