#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncshift/check.hpp"
#include "ncshift/free_algebra.hpp"

namespace ncshift {

// Ribbon shape (i_1, ..., i_n) of positive parts.
using Composition = std::vector<int>;
using ShiftVector = std::vector<int>;

// Throws std::invalid_argument on an empty composition or a nonpositive part.
void validate(const Composition& c);
int degree(const Composition& c);
// s_k = i_k + ... + i_{n-1}, with s_n = 0.
ShiftVector canonical_shifts(const Composition& c);
// Conjugate via the complement of partial sums: D(I~) = {d - x : x not in D(I)}.
Composition conjugate(const Composition& c);
Composition concat(const Composition& x, const Composition& y);
// (i_1, ..., i_n + j_1, j_2, ..., j_m)
Composition near_concat(const Composition& x, const Composition& y);
// All compositions of d in lexicographic order.
std::vector<Composition> compositions(int d);
ShiftVector add_scalar(ShiftVector k, int s);

// R_{I;b}^{[K]} in the S_{;b} basis: (-1)^{n-1} times the Hessenberg
// quasideterminant with entries S^{[K_r]}_{i_r + ... + i_c}.
const NCElement& ribbon_shifted(const Composition& c, const ShiftVector& k, const Seq& b = kA);
const NCElement& ribbon(const Composition& c, const Seq& b = kA);
// Same matrix kept as an expression in shifted S letters.
Expr ribbon_expr(const Composition& c, const ShiftVector& k);

// Linear combination of R_I^{[K]}.
class RibbonElement {
 public:
  using Key = std::pair<Composition, ShiftVector>;
  using Map = std::map<Key, ParamPoly>;

  void add_term(const Composition& c, const ShiftVector& k, const ParamPoly& v);
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  ParamPoly coeff(const Composition& c, const ShiftVector& k) const;
  // Every term carries its composition's canonical shifts.
  bool is_canonical() const;
  friend bool operator==(const RibbonElement& x, const RibbonElement& y) { return x.t_ == y.t_; }

 private:
  Map t_;
};

NCElement from_ribbon_basis(const RibbonElement& x, const Seq& b = kA);
// Triangular rewrite into canonical R_I; the leading word of R_I under
// (degree, more letters, lex) is I with coefficient 1.
RibbonElement to_ribbon_basis(const NCElement& x, const Seq& b = kA);
RibbonElement canonicalize(const RibbonElement& x, const Seq& b = kA);

// R_I^{[K]} R_J^{[L]} = R_{I.J}^{[K,L]} + R_{I|>J}^{[K,l_2,...,l_m]}.
RibbonElement macmahon_product(const Composition& i, const ShiftVector& k, const Composition& j, const ShiftVector& l);
// Canonical form: the left factor is R_I shifted by d_J - j_m + i_n and the
// right factor is R_J. Returns the shift applied to R_I through that argument.
RibbonElement macmahon_product(const Composition& i, const Composition& j, int* left_shift = nullptr);

// Alternating Lambda quasideterminant for R_I^{[i_n - 1]}, built from the
// conjugate composition, expanded in the S basis.
NCElement nagelsbach_form(const Composition& c, const Seq& b = kA);
Expr nagelsbach_expr(const Composition& c);

// Anti-algebra map Sym^b -> Sym^{b^}: reverses words, sends S_{k;b} to
// Lambda_{k;b^} written in the S_{;b^} basis, keeps coefficients.
NCElement omega(const NCElement& x, const Seq& from = kA);

// Shift that makes omega(R_I) a uniformly shifted conjugate ribbon over b^.
// The literal variant is j_m - d + i_n; the verified one is one less.
int duality_shift(const Composition& c, bool literal = false);

CheckResult verify_ribbon_basis(int d);
CheckResult verify_macmahon(int total_degree);
CheckResult verify_hook_formula(int total_degree);
CheckResult verify_ribbon_recursions(int d);
CheckResult verify_product_examples(int total_degree, bool literal = false);
CheckResult verify_duality(int d, bool literal_shift = false);
CheckResult verify_nagelsbach(int d);
// omega over a^ undoes omega over a on S_k, and omega(S_k^{[s]}) = Lambda_{k;a^}^{[-s]}.
CheckResult verify_omega_involution(int max_degree);
CheckResult verify_omega_shift(int max_degree, int max_shift);
// The worked (2,2,3,2) duality example. The printed right-hand side uses
// (1,3,2,2,1), which is not the conjugate of (2,2,3,2).
CheckResult verify_duality_example(bool printed_rhs);
// The printed (2,1,1) and (1,3,2,1) S and Lambda matrices.
CheckResult verify_nagelsbach_examples();

}  // namespace ncshift
