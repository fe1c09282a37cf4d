#include "ncshift/series.hpp"

#include <stdexcept>

namespace ncshift {

const NCElement& TruncatedTSeries::coeff(int k) const {
  if (k == 0) return constant;
  return coeffs.at(static_cast<std::size_t>(k - 1));
}

ParamPoly denominator_expansion(const SeriesBasis& basis, int k, int n) {
  if (n < k) return {};
  if (k == 0) return n == 0 ? ParamPoly(1) : ParamPoly();
  if (!basis.shifted) return n == k ? ParamPoly(1) : ParamPoly();
  // 1/prod(eps t - b_i) = eps^k sum_m h_m(eps b_1, ..., eps b_k) / t^{k+m}
  std::vector<ParamPoly> xs;
  xs.reserve(k);
  for (int i = 1; i <= k; ++i) xs.push_back(basis.sign < 0 ? -basis.seq.at(i) : basis.seq.at(i));
  ParamPoly h = complete_h(n - k, xs);
  return (basis.sign < 0 && k % 2) ? -h : h;
}

TruncatedTSeries series_reexpand(const TruncatedTSeries& s, const SeriesBasis& target, int order) {
  if (order > s.order) throw std::invalid_argument("series_reexpand: target order exceeds source order");
  // Plain coefficients p_n of the source.
  std::vector<NCElement> plain(order + 1);
  for (int k = 1; k <= order; ++k) {
    const NCElement& ck = s.coeff(k);
    if (ck.is_zero()) continue;
    for (int n = k; n <= order; ++n) plain[n].add_scaled(ck, denominator_expansion(s.basis, k, n));
  }
  TruncatedTSeries out;
  out.order = order;
  out.basis = target;
  out.constant = s.constant;
  out.coeffs.resize(order);
  // Triangular solve p_n = sum_{k<=n} q_k [t^{-n}](1/D_k); the diagonal is sign^n.
  for (int n = 1; n <= order; ++n) {
    NCElement q = plain[n];
    for (int k = 1; k < n; ++k) q.add_scaled(out.coeffs[k - 1], -denominator_expansion(target, k, n));
    if (target.shifted && target.sign < 0 && n % 2) q = -q;
    out.coeffs[n - 1] = std::move(q);
  }
  return out;
}

TruncatedTSeries series_reexpand(const TruncatedTSeries& s, const SeriesBasis& target) {
  return series_reexpand(s, target, s.order);
}

TruncatedTSeries series_multiply(const TruncatedTSeries& x, const TruncatedTSeries& y) {
  if (x.basis.shifted || y.basis.shifted)
    throw std::invalid_argument("series_multiply: both factors must use plain powers");
  int order = std::min(x.order, y.order);
  TruncatedTSeries out;
  out.order = order;
  out.coeffs.resize(order);
  out.constant = x.constant * y.constant;
  for (int n = 1; n <= order; ++n) {
    NCElement acc;
    for (int i = 0; i <= n; ++i) {
      const NCElement& a = x.coeff(i);
      const NCElement& b = y.coeff(n - i);
      if (!a.is_zero() && !b.is_zero()) acc += a * b;
    }
    out.coeffs[n - 1] = std::move(acc);
  }
  return out;
}

TruncatedTSeries series_inverse(const TruncatedTSeries& x) {
  if (x.basis.shifted) throw std::invalid_argument("series_inverse: series must use plain powers");
  if (x.constant != NCElement(1)) throw std::invalid_argument("series_inverse: constant term must be 1");
  TruncatedTSeries out;
  out.order = x.order;
  out.constant = NCElement(1);
  out.coeffs.resize(x.order);
  // q_n = -sum_{k=1}^{n} p_k q_{n-k}; q is then a right inverse, hence two-sided.
  for (int n = 1; n <= x.order; ++n) {
    NCElement acc;
    for (int k = 1; k <= n; ++k) {
      const NCElement& p = x.coeff(k);
      const NCElement& q = out.coeff(n - k);
      if (!p.is_zero() && !q.is_zero()) acc -= p * q;
    }
    out.coeffs[n - 1] = std::move(acc);
  }
  return out;
}

}  // namespace ncshift
