#pragma once

#include <string>
#include <vector>

#include "ncshift/check.hpp"
#include "ncshift/free_algebra.hpp"
#include "ncshift/series.hpp"

namespace ncshift {

// {l nu}_k^b = sum over 1 <= s_1 < ... < s_nu <= l of
//   prod_i (b_{k + (nu - i) + s_i} - b_{s_i}).
ParamPoly a_binomial(int l, int nu, int k, const Seq& b = kA);

// Shifted generators S_{k;b}^{[s]} and Lambda_{k;b}^{[s]} written in the
// S_{;b} monomial basis (closed forms for s >= 0 and s < 0).
const NCElement& shift_S(int k, int s, const Seq& b = kA);
const NCElement& shift_Lambda(int k, int s, const Seq& b = kA);

// Lambda_{n;b} in the S_{;b} basis, from the triangular solve of
// sum_{i+j=n} (-1)^j S_i^{[n-1]} Lambda_j = delta_{n,0}.
const NCElement& lambda_in_S(int n, const Seq& b = kA);

// The shift automorphism phi^{[s]}: letters S_k -> S_k^{[s]}. With
// CoeffAction::Shift the coefficients move along with the parameters
// (b_i -> b_{i-s}), which makes phi^{[s]} phi^{[t]} = phi^{[s+t]}; with
// CoeffAction::Fix they are left alone. Both agree on rational coefficients.
enum class CoeffAction { Shift, Fix };
NCElement phi_shift(const NCElement& x, int s, const Seq& b = kA, CoeffAction action = CoeffAction::Shift);

// Power sum Psi_{n;b} in the S_{;b} basis, and its shift phi^{[s]}(Psi_n).
const NCElement& psi(int n, const Seq& b = kA);
const NCElement& shift_Psi(int n, int s, const Seq& b = kA);
NCElement letter_in_S(const Letter& l, const Seq& b = kA);

// Evaluates a family expression by substituting each letter
// S_k^{[s]}, Lambda_k^{[s]}, Psi_k^{[s]} with its S-basis expansion.
NCElement to_S(const Expr& e, const Seq& b = kA);

// Hessenberg quasideterminant forms of the base change.
Expr lambda_in_S_qdet(int n);  // Lambda_n via shifted S letters
Expr s_in_lambda(int n);       // S_n via shifted Lambda letters

// Triangular rewrite of an S-basis element into words of unshifted family
// letters (S, Lambda or Psi). The leading S-word of a family word w, under
// the order (degree, fewer letters, lex), is w itself.
Expr rewrite_in_family(const NCElement& x, Family f, const Seq& b = kA);
inline Expr rewrite_in_psi(const NCElement& x, const Seq& b = kA) { return rewrite_in_family(x, Family::Psi, b); }
inline NCElement from_psi(const Expr& x, const Seq& b = kA) { return to_S(x, b); }
// Product of unshifted family generators over the word, in the S basis.
const NCElement& family_word(Family f, const Word& w, const Seq& b = kA);

std::string word_string(const Word& w);

// Compares two S-basis elements; on mismatch names the first differing word.
CheckResult compare(const NCElement& lhs, const NCElement& rhs, const std::string& label);

// Defining series relation lambda^{ahat}(-t) sigma^a(t) = sigma^a(t) lambda^{ahat}(-t) = 1
// up to order N. The optional override replaces Lambda_k (used by mutation tests).
CheckResult verify_defining_relation(int N, const std::vector<NCElement>* lambda_override = nullptr);
TruncatedTSeries sigma_series(int N);
TruncatedTSeries lambda_series(int N, const std::vector<NCElement>* lambda_override = nullptr);

// Lambda from the inverse series agrees with lambda_in_S and satisfies the
// linear relation, for degrees 1..n.
CheckResult verify_lineareq(int n);
// Both quasideterminant base changes against the solve.
CheckResult verify_base_change(int n);
CheckResult verify_wronski_newton(int n);
CheckResult verify_translation_quasidets(int n);

// Shift-coefficient identities: the index symmetry
// {i-1 nu}_{n-nu} = {n-1 nu}_{i-nu}, the tau recursion, the equidistant closed
// form c^nu C(k,nu) (k+nu-1)^(nu), and the a_i = i-1 binomial falling-power form.
CheckResult verify_abinomial_symmetry(int max_index);
CheckResult verify_abinomial_recursion(int max_index);
CheckResult verify_equidistant_abinomial(const Rational& c, const Rational& base, int max_index);
CheckResult verify_falling_example(int max_index);
// Closed forms of S_k^{[s]} and Lambda_k^{[s]} against re-expansion of the
// generating series over tau-shifted denominators.
CheckResult verify_shift_definition(int max_degree, int max_shift);
// S_k^{[1]} = S_k + (a_{k-1} - a_0) S_{k-1} and Lambda_k^{[-1]} = Lambda_k +
// (a_1 - a_{2-k}) Lambda_{k-1}; literal uses the printed a_1 - a_k.
CheckResult verify_shift_examples(int max_degree, bool literal = false);
// phi^{[s]} phi^{[t]} = phi^{[s+t]} on S_k.
CheckResult verify_phi_composition(int max_degree, int max_shift, CoeffAction action = CoeffAction::Shift);
// The printed Psi_1, Psi_2 and Psi_3 lines.
CheckResult verify_psi_examples();

// Unshifted S_n in the shifted basis and S_{n;a} in the unshifted basis.
NCElement embed_unshifted(int n);
NCElement project_shifted(int n);

}  // namespace ncshift
