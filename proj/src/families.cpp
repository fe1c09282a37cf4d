#include "ncshift/families.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "ncshift/memo.hpp"
#include "ncshift/quasidet.hpp"

namespace ncshift {
namespace {

Memo<std::tuple<int, int, int, Seq>, ParamPoly> abinom_memo;
Memo<std::tuple<int, int, Seq>, NCElement> shift_s_memo;
Memo<std::tuple<int, int, Seq>, NCElement> shift_lambda_memo;
Memo<std::tuple<int, int, Seq>, NCElement> shift_psi_memo;
Memo<std::pair<int, Seq>, NCElement> lambda_memo;
Memo<std::pair<int, Seq>, NCElement> psi_memo;
Memo<std::tuple<Family, Word, Seq>, NCElement> family_word_memo;

ParamPoly sign_poly(int e) { return ParamPoly(e % 2 ? -1 : 1); }

}  // namespace

ParamPoly a_binomial(int l, int nu, int k, const Seq& b) {
  if (nu < 0) throw std::invalid_argument("a_binomial needs nu >= 0");
  if (nu == 0) return ParamPoly(1);
  if (l < nu) return {};
  return abinom_memo.get({l, nu, k, b}, [&] {
    // Split on whether the largest index s_nu equals l.
    ParamPoly r = a_binomial(l - 1, nu, k, b);
    r += (b.at(k + l) - b.at(l)) * a_binomial(l - 1, nu - 1, k + 1, b);
    return r;
  });
}

const NCElement& shift_S(int k, int s, const Seq& b) {
  return shift_s_memo.get({k, s, b}, [&] {
    NCElement r;
    if (k <= 0) return k == 0 ? NCElement(1) : r;
    for (int nu = 0; nu < k; ++nu) {
      ParamPoly c = s >= 0 ? a_binomial(s, nu, k - nu, b.tau(-s)) : a_binomial(nu - s - 1, nu, 1 - k, b.tau(k - nu));
      r.add_term(Word{k - nu}, c);
    }
    return r;
  });
}

const NCElement& lambda_in_S(int n, const Seq& b) {
  return lambda_memo.get({n, b}, [&] {
    if (n <= 0) return n == 0 ? NCElement(1) : NCElement();
    // sum_{j=0}^{n} (-1)^j S_{n-j}^{[n-1]} Lambda_j = 0, solved for Lambda_n.
    NCElement acc;
    for (int j = 0; j < n; ++j) acc.add_scaled(shift_S(n - j, n - 1, b) * lambda_in_S(j, b), sign_poly(j));
    return acc * sign_poly(n + 1);
  });
}

const NCElement& shift_Lambda(int k, int s, const Seq& b) {
  if (s == 0 || k <= 0) return lambda_in_S(k, b);
  return shift_lambda_memo.get({k, s, b}, [&] {
    const Seq bh = b.dual();
    NCElement r;
    for (int nu = 0; nu < k; ++nu) {
      ParamPoly c = s > 0 ? a_binomial(nu + s - 1, nu, 1 - k, bh.tau(k - nu)) : a_binomial(-s, nu, k - nu, bh.tau(s));
      r.add_scaled(lambda_in_S(k - nu, b), c);
    }
    return r;
  });
}

NCElement phi_shift(const NCElement& x, int s, const Seq& b, CoeffAction action) {
  if (s == 0) return x;
  const int t = b.hat ? s : -s;
  return substitute_letters<int, NCElement>(
      x, [&](int k) { return shift_S(k, s, b); },
      [&](const ParamPoly& c) { return action == CoeffAction::Shift ? tau_shift(c, t) : c; });
}

const NCElement& psi(int n, const Seq& b) {
  return psi_memo.get({n, b}, [&] {
    NCElement r;
    for (int k = 0; k < n; ++k)
      r.add_scaled(shift_Lambda(k, n - k, b) * shift_S(n - k, n - k - 1, b), ParamPoly(k % 2 ? -(n - k) : n - k));
    return r;
  });
}

const NCElement& shift_Psi(int n, int s, const Seq& b) {
  if (s == 0) return psi(n, b);
  return shift_psi_memo.get({n, s, b}, [&] { return phi_shift(psi(n, b), s, b); });
}

NCElement letter_in_S(const Letter& l, const Seq& b) {
  switch (l.family) {
    case Family::S: return shift_S(l.k, l.shift, b);
    case Family::Lambda: return shift_Lambda(l.k, l.shift, b);
    case Family::Psi: return shift_Psi(l.k, l.shift, b);
  }
  return {};
}

NCElement to_S(const Expr& e, const Seq& b) {
  return substitute_letters<Letter, NCElement>(
      e, [&](const Letter& l) { return letter_in_S(l, b); }, [](const ParamPoly& c) { return c; });
}

Expr lambda_in_S_qdet(int n) {
  if (n == 0) return Expr(1);
  auto m = HessenbergMatrix<Expr>::build(n, [&](int r, int c) { return letter_expr(Family::S, c - r + 1, n - r); });
  return hessenberg_quasidet(m) * ParamPoly(n % 2 ? 1 : -1);
}

Expr s_in_lambda(int n) {
  if (n == 0) return Expr(1);
  auto m = HessenbergMatrix<Expr>::build(n, [&](int r, int c) { return letter_expr(Family::Lambda, c - r + 1, 1 - c); });
  return hessenberg_quasidet(m) * ParamPoly(n % 2 ? 1 : -1);
}

const NCElement& family_word(Family f, const Word& w, const Seq& b) {
  return family_word_memo.get({f, w, b}, [&] {
    NCElement r(1);
    for (int k : w) {
      switch (f) {
        case Family::S: r = r * S(k); break;
        case Family::Lambda: r = r * lambda_in_S(k, b); break;
        case Family::Psi: r = r * psi(k, b); break;
      }
    }
    return r;
  });
}

Rational leading_coefficient(Family f, const Word& w) {
  Rational c(1);
  for (int k : w) {
    if (f == Family::Lambda && k % 2 == 0) c = -c;
    if (f == Family::Psi) c *= Rational(k);
  }
  return c;
}

Expr rewrite_in_family(const NCElement& x, Family f, const Seq& b) {
  NCElement rest = x;
  Expr out;
  while (!rest.is_zero()) {
    // Leading word: top degree, fewest letters.
    const int deg = rest.degree();
    const Word* lead = nullptr;
    for (auto it = rest.terms().rbegin(); it != rest.terms().rend() && word_degree(it->first) == deg; ++it)
      if (lead == nullptr || it->first.size() < lead->size()) lead = &it->first;
    Word w = *lead;
    ParamPoly c = rest.coeff(w) * (Rational(1) / leading_coefficient(f, w));
    std::vector<Letter> letters;
    for (int k : w) letters.push_back(Letter{f, k, 0});
    out.add_term(letters, c);
    rest.add_scaled(family_word(f, w, b), -c);
  }
  return out;
}

std::string word_string(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

CheckResult compare(const NCElement& lhs, const NCElement& rhs, const std::string& label) {
  NCElement diff = lhs - rhs;
  if (diff.is_zero()) return {};
  const Word& w = diff.terms().begin()->first;
  return CheckResult::fail(label + ": coefficient of " + word_string(w) + " is " + lhs.coeff(w).str() + " vs " +
                           rhs.coeff(w).str());
}

TruncatedTSeries sigma_series(int N) {
  TruncatedTSeries s;
  s.order = N;
  s.basis = SeriesBasis::shifted_by(kA, 1);
  s.constant = NCElement(1);
  for (int k = 1; k <= N; ++k) s.coeffs.push_back(S(k));
  return s;
}

TruncatedTSeries lambda_series(int N, const std::vector<NCElement>* lambda_override) {
  TruncatedTSeries s;
  s.order = N;
  s.basis = SeriesBasis::shifted_by(kAHat, -1);
  s.constant = NCElement(1);
  for (int k = 1; k <= N; ++k) {
    bool over = lambda_override != nullptr && static_cast<int>(lambda_override->size()) >= k;
    s.coeffs.push_back(over ? (*lambda_override)[k - 1] : lambda_in_S(k));
  }
  return s;
}

namespace {

CheckResult series_is_one(const TruncatedTSeries& s, const std::string& label) {
  CheckResult r = compare(s.constant, NCElement(1), label + " at t^0");
  for (int n = 1; n <= s.order && r.pass; ++n) r &= compare(s.coeff(n), NCElement(), label + " at t^-" + std::to_string(n));
  return r;
}

}  // namespace

CheckResult verify_defining_relation(int N, const std::vector<NCElement>* lambda_override) {
  if (N < 1) throw std::invalid_argument("verify_defining_relation needs N >= 1");
  TruncatedTSeries sigma = series_reexpand(sigma_series(N), SeriesBasis::plain());
  TruncatedTSeries lambda = series_reexpand(lambda_series(N, lambda_override), SeriesBasis::plain());
  CheckResult r = series_is_one(series_multiply(lambda, sigma), "lambda(-t) sigma(t)");
  r &= series_is_one(series_multiply(sigma, lambda), "sigma(t) lambda(-t)");
  return r;
}

CheckResult verify_lineareq(int n) {
  // Lambda read off the inverse series, independent of the triangular solve.
  TruncatedTSeries inv = series_inverse(series_reexpand(sigma_series(n), SeriesBasis::plain()));
  TruncatedTSeries lam = series_reexpand(inv, SeriesBasis::shifted_by(kAHat, -1));
  CheckResult r;
  for (int m = 1; m <= n && r.pass; ++m) {
    r &= compare(lam.coeff(m), lambda_in_S(m), "Lambda_" + std::to_string(m) + " series vs solve");
    NCElement sum;
    for (int j = 0; j <= m; ++j) sum.add_scaled(shift_S(m - j, m - 1) * lam.coeff(j), sign_poly(j));
    r &= compare(sum, NCElement(), "linear relation n=" + std::to_string(m));
  }
  return r;
}

CheckResult verify_base_change(int n) {
  CheckResult r = compare(to_S(lambda_in_S_qdet(n)), lambda_in_S(n), "Lambda_" + std::to_string(n) + " quasideterminant");
  r &= compare(to_S(s_in_lambda(n)), S(n), "S_" + std::to_string(n) + " quasideterminant");
  return r;
}

CheckResult verify_wronski_newton(int n) {
  const std::string tag = " n=" + std::to_string(n);
  NCElement other, wronski, newton;
  for (int k = 1; k <= n; ++k) other.add_scaled(shift_Lambda(k, n - k) * shift_S(n - k, n - 1 - k), sign_poly(k - 1));
  for (int k = 0; k < n; ++k) wronski += shift_S(k, n - 1) * psi(n - k);
  for (int k = 0; k < n; ++k) newton.add_scaled(shift_Psi(n - k, k) * lambda_in_S(k), sign_poly(n - k - 1));
  CheckResult r = compare(other, shift_S(n, n - 1), "S via Lambda" + tag);
  r &= compare(wronski, shift_S(n, n - 1) * ParamPoly(n), "Wronski" + tag);
  r &= compare(newton, lambda_in_S(n) * ParamPoly(n), "Newton" + tag);
  return r;
}

CheckResult verify_translation_quasidets(int n) {
  const std::string tag = " n=" + std::to_string(n);
  const ParamPoly sign = sign_poly(n - 1);
  auto psi_s = HessenbergMatrix<NCElement>::build(n, [&](int r, int c) {
    return c == n ? shift_S(n - r + 1, n - r) * ParamPoly(n - r + 1) : shift_S(c - r + 1, n - r);
  });
  auto psi_l = HessenbergMatrix<NCElement>::build(n, [&](int r, int c) {
    return r == 1 ? shift_Lambda(c, n - c) * ParamPoly(c) : shift_Lambda(c - r + 1, n - c);
  });
  auto in_psi = [&](int r, int c) { return shift_Psi(c - r + 1, n - c); };
  auto s_p = HessenbergMatrix<NCElement>::build(n, in_psi);
  auto l_p = HessenbergMatrix<NCElement>::build(n, in_psi);
  for (int c = 1; c < n; ++c) {
    s_p.set_sub(c, Rational(-c));
    l_p.set_sub(c, Rational(n - c));
  }
  CheckResult r = compare(hessenberg_quasidet(psi_s), psi(n), "Psi via S" + tag);
  r &= compare(hessenberg_quasidet(psi_l) * sign, psi(n), "Psi via Lambda" + tag);
  r &= compare(hessenberg_quasidet(s_p), shift_S(n, n - 1) * ParamPoly(n), "S via Psi" + tag);
  r &= compare(hessenberg_quasidet(l_p) * sign, lambda_in_S(n) * ParamPoly(n), "Lambda via Psi" + tag);
  return r;
}

NCElement embed_unshifted(int n) {
  if (n == 0) return NCElement(1);
  return series_reexpand(sigma_series(n), SeriesBasis::plain()).coeff(n);
}

NCElement project_shifted(int n) {
  if (n == 0) return NCElement(1);
  TruncatedTSeries plain;
  plain.order = n;
  plain.constant = NCElement(1);
  for (int k = 1; k <= n; ++k) plain.coeffs.push_back(S(k));
  return series_reexpand(plain, SeriesBasis::shifted_by(kA, 1)).coeff(n);
}

namespace {

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Rational falling(int x, int m) {
  Rational r(1);
  for (int i = 0; i < m; ++i) r *= Rational(x - i);
  return r;
}

std::string triple(int l, int nu, int k) {
  return "{" + std::to_string(l) + " " + std::to_string(nu) + "}_" + std::to_string(k);
}

CheckResult poly_compare(const ParamPoly& x, const ParamPoly& y, const std::string& label) {
  if (x == y) return {};
  return CheckResult::fail(label + ": " + x.str() + " vs " + y.str());
}

}  // namespace

CheckResult verify_abinomial_symmetry(int max_index) {
  CheckResult r;
  for (int i = 1; i <= max_index; ++i)
    for (int n = 1; n <= max_index; ++n)
      for (int nu = 1; nu <= std::min(i, n); ++nu)
        r &= poly_compare(a_binomial(i - 1, nu, n - nu), a_binomial(n - 1, nu, i - nu),
                          triple(i - 1, nu, n - nu) + " vs " + triple(n - 1, nu, i - nu));
  return r;
}

CheckResult verify_abinomial_recursion(int max_index) {
  CheckResult r;
  const Seq ta = kA.tau(1);
  for (int l = 0; l <= max_index; ++l)
    for (int nu = 1; nu <= max_index; ++nu)
      for (int k = -max_index; k <= max_index; ++k) {
        ParamPoly lhs = a_binomial(l, nu, k, ta) + (ParamPoly::var(k + nu) - ParamPoly::var(1)) * a_binomial(l, nu - 1, k, ta);
        r &= poly_compare(lhs, a_binomial(l + 1, nu, k), "recursion " + triple(l + 1, nu, k));
      }
  return r;
}

CheckResult verify_equidistant_abinomial(const Rational& c, const Rational& base, int max_index) {
  const ParamSubstitution sub = ParamSubstitution::equidistant(c, base);
  CheckResult r;
  for (int k = 1; k <= max_index; ++k)
    for (int nu = 0; nu <= k; ++nu) {
      Rational want = pow(c, static_cast<unsigned>(nu)) * binomial(k, nu) * falling(k + nu - 1, nu);
      Rational got = substitute(a_binomial(k, nu, k), sub);
      if (got != want)
        r &= CheckResult::fail(triple(k, nu, k) + " at c=" + c.str() + ": " + got.str() + " vs " + want.str());
    }
  return r;
}

CheckResult verify_falling_example(int max_index) {
  const ParamSubstitution sub = ParamSubstitution::equidistant(Rational(1), Rational(-1));
  CheckResult r;
  for (int s = 0; s <= max_index; ++s)
    for (int nu = 0; nu <= max_index; ++nu)
      for (int k = 1; k <= max_index; ++k) {
        Rational want = binomial(s, nu) * falling(k + nu - 1, nu);
        Rational got = substitute(a_binomial(s, nu, k), sub);
        if (got != want) r &= CheckResult::fail(triple(s, nu, k) + " at a_i=i-1: " + got.str() + " vs " + want.str());
      }
  // phi^{[s]}(S_k) = sum_nu C(s,nu) (k-1)^(nu) S_{k-nu}.
  for (int s = 0; s <= max_index; ++s)
    for (int k = 1; k <= max_index; ++k) {
      NCElement want;
      for (int nu = 0; nu < k; ++nu) want.add_term(Word{k - nu}, ParamPoly(binomial(s, nu) * falling(k - 1, nu)));
      NCElement got;
      for (const auto& [w, c] : shift_S(k, s).terms()) got.add_term(w, ParamPoly(substitute(c, sub)));
      r &= compare(got, want, "S_" + std::to_string(k) + "^[" + std::to_string(s) + "] at a_i=i-1");
    }
  return r;
}

CheckResult verify_shift_definition(int max_degree, int max_shift) {
  CheckResult r;
  TruncatedTSeries sigma = sigma_series(max_degree);
  TruncatedTSeries lambda = lambda_series(max_degree);
  lambda.basis = SeriesBasis::shifted_by(kAHat, 1);
  for (int s = -max_shift; s <= max_shift; ++s) {
    TruncatedTSeries sig = series_reexpand(sigma, SeriesBasis::shifted_by(kA.tau(-s), 1));
    TruncatedTSeries lam = series_reexpand(lambda, SeriesBasis::shifted_by(kAHat.tau(s), 1));
    for (int k = 1; k <= max_degree; ++k) {
      const std::string tag = std::to_string(k) + "^[" + std::to_string(s) + "] series";
      r &= compare(shift_S(k, s), sig.coeff(k), "S_" + tag);
      r &= compare(shift_Lambda(k, s), lam.coeff(k), "Lambda_" + tag);
    }
  }
  return r;
}

CheckResult verify_shift_examples(int max_degree, bool literal) {
  CheckResult r;
  for (int k = 1; k <= max_degree; ++k) {
    NCElement s1 = S(k);
    if (k > 1) s1.add_term(Word{k - 1}, ParamPoly::var(k - 1) - ParamPoly::var(0));
    r &= compare(shift_S(k, 1), s1, "S_" + std::to_string(k) + "^[1]");
    // The printed coefficient a_1 - a_k agrees with a_1 - a_{2-k} only at k = 1.
    NCElement l1 = lambda_in_S(k);
    l1.add_scaled(lambda_in_S(k - 1), ParamPoly::var(1) - ParamPoly::var(literal ? k : 2 - k));
    r &= compare(shift_Lambda(k, -1), l1, "Lambda_" + std::to_string(k) + "^[-1]");
    for (int s = -3; s <= 3; ++s) r &= compare(shift_S(1, s), S(1), "S_1^[" + std::to_string(s) + "]");
  }
  return r;
}

CheckResult verify_phi_composition(int max_degree, int max_shift, CoeffAction action) {
  CheckResult r;
  for (int k = 1; k <= max_degree; ++k)
    for (int s = -max_shift; s <= max_shift; ++s)
      for (int t = -max_shift; t <= max_shift; ++t) {
        NCElement lhs = phi_shift(phi_shift(S(k), t, kA, action), s, kA, action);
        r &= compare(lhs, shift_S(k, s + t), "phi^" + std::to_string(s) + " phi^" + std::to_string(t) + " S_" + std::to_string(k));
        if (!r.pass) return r;
      }
  return r;
}

CheckResult verify_psi_examples() {
  auto L = [](int k, int s) { return shift_Lambda(k, s); };
  CheckResult r = compare(psi(1), S(1), "Psi_1 = S_1");
  r &= compare(psi(1), lambda_in_S(1), "Psi_1 = Lambda_1");
  r &= compare(psi(2), shift_S(2, 1) * ParamPoly(2) - L(1, 1) * S(1), "Psi_2 first form");
  r &= compare(psi(2), shift_S(2, 1) - lambda_in_S(2), "Psi_2 second form");
  NCElement p3 = shift_S(3, 2) * ParamPoly(3) - L(1, 2) * shift_S(2, 1) * ParamPoly(2) + L(2, 1) * S(1);
  r &= compare(psi(3), p3, "Psi_3 first form");
  // R_(1,2)^[1] = -|S_1^[2] S_3^[2]; 1 S_2^[1]|_{12}, written out.
  NCElement r12 = shift_S(1, 2) * shift_S(2, 1) - shift_S(3, 2);
  r &= compare(psi(3), shift_S(3, 2) - r12 + lambda_in_S(3), "Psi_3 second form");
  return r;
}

}  // namespace ncshift
