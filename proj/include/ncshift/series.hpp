#pragma once

#include <vector>

#include "ncshift/free_algebra.hpp"

namespace ncshift {

// Denominator basis of a truncated series in 1/t: either plain powers t^k or
// shifted powers floor(sign*t | b)^k = (sign*t - b_1)...(sign*t - b_k).
struct SeriesBasis {
  bool shifted = false;
  Seq seq{};
  int sign = 1;

  static SeriesBasis plain() { return {}; }
  static SeriesBasis shifted_by(Seq b, int sign = 1) { return {true, b, sign}; }
};

// c_0 + sum_{k=1}^{N} c_k / D_k(t) with NCElement coefficients.
struct TruncatedTSeries {
  int order = 0;
  SeriesBasis basis{};
  NCElement constant;
  std::vector<NCElement> coeffs;  // coeffs[k-1] multiplies 1/D_k

  const NCElement& coeff(int k) const;
};

// Coefficient of t^{-n} in 1/D_k for the given basis, n >= k.
ParamPoly denominator_expansion(const SeriesBasis& basis, int k, int n);

// Rewrites the same formal series over another denominator basis, keeping
// terms up to 1/t^order.
TruncatedTSeries series_reexpand(const TruncatedTSeries& s, const SeriesBasis& target, int order);
TruncatedTSeries series_reexpand(const TruncatedTSeries& s, const SeriesBasis& target);

// Product of two plain-power series truncated at the smaller order.
TruncatedTSeries series_multiply(const TruncatedTSeries& x, const TruncatedTSeries& y);

// Two-sided inverse of a plain-power series whose constant term is 1.
TruncatedTSeries series_inverse(const TruncatedTSeries& x);

}  // namespace ncshift
