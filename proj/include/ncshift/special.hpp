#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ncshift/check.hpp"
#include "ncshift/free_algebra.hpp"
#include "ncshift/matvalue.hpp"
#include "ncshift/parampoly.hpp"
#include "ncshift/ribbon.hpp"

namespace ncshift {

// Matrix variables x_1, ..., x_n (all d x d) together with equidistant
// parameters a_i = base + i c.
struct VariableAssignment {
  Rational c = Rational(1);
  Rational base = Rational(-1);
  int d = 1;
  std::vector<MatValue> vars;

  int n() const { return static_cast<int>(vars.size()); }
  Rational a(int i) const { return base + c * Rational(i); }
  ParamSubstitution params() const { return ParamSubstitution::equidistant(c, base); }
  // Throws std::invalid_argument unless d >= 1, n >= 1 and every x_i is d x d.
  void validate() const;
  VariableAssignment with_vars(std::vector<MatValue> xs) const;

  // Seeded random variables. The state advances with every draw.
  static VariableAssignment random(int n, int d, const Rational& c, const Rational& base, std::uint64_t& state);
};

// The a_i = i - 1 case used by the printed examples.
inline constexpr int kFallingBase = -1;

enum class SpecFamily { S, Lambda };

struct SpecValue {
  MatValue value;
  int k = 0;
  SpecFamily family = SpecFamily::S;
  int n = 0;
  int d = 0;
};

// (x - b_1)(x - b_2)...(x - b_k) under the numeric substitution.
MatValue shifted_power(const MatValue& x, const ParamSubstitution& sub, int k, const Seq& b = kA);

// Block quasideterminant with rows m in ms, column j holding
// (x_j | tau^{j-s} a)^m, boxed at the row with label boxed_m and column n.
MatValue power_quasiminor(const VariableAssignment& v, int s, const std::vector<int>& ms, int boxed_m);

// Quasideterminant quotients for Lambda_k(x_1..x_n) and S_k(x_1..x_n).
// Lambda_k is zero for k > n; S_k follows its formula for every k >= 1.
// Both give the identity at k = 0. SingularMinor propagates.
SpecValue lambda_spec(int k, const VariableAssignment& v);
SpecValue s_spec(int k, const VariableAssignment& v);

// Evaluates S-basis elements at an assignment; S_k values are cached.
class Evaluator {
 public:
  explicit Evaluator(VariableAssignment v) : v_(std::move(v)), sub_(v_.params()) {}
  const VariableAssignment& assignment() const { return v_; }
  const MatValue& s(int k);
  MatValue operator()(const NCElement& x);
  // S_m^{[s]} and Lambda_m^{[s]}; zero for m < 0.
  MatValue shifted_s(int m, int s);
  MatValue shifted_lambda(int m, int s);

 private:
  VariableAssignment v_;
  ParamSubstitution sub_;
  std::map<int, MatValue> s_;
};

MatValue evaluate(const NCElement& x, const VariableAssignment& v);

// x_i -> x_i + t for all i.
VariableAssignment translate(const VariableAssignment& v, const Rational& t);
// (x_i, x_{i+1}) -> (x_{i+1} - c, x_i + c), 1 <= i < n.
VariableAssignment shifted_swap(const VariableAssignment& v, int i);
// Appends a_1 Id as a further variable.
VariableAssignment extend(const VariableAssignment& v);

// psi^{[s]} of Lambda_k or S_k: evaluation at x_i + s c.
SpecValue psi_variable_shift(int k, const VariableAssignment& v, int s, SpecFamily f);
// Same value read from the quasiminors with tau^{j-n-s} a powers.
SpecValue psi_from_quasiminors(int k, const VariableAssignment& v, int s, SpecFamily f);

bool check_shifted_symmetry(int k, const VariableAssignment& v, int i);
bool check_extension(int k, const VariableAssignment& v);

// Commutative oracles for a_i = i - 1: ratios of determinants of falling powers
// (x_j + n - j)^{(m)} with j 1-based.
Rational h_star(int k, const std::vector<Rational>& xs);
Rational e_star(int k, const std::vector<Rational>& xs);
// Throws SingularMinor when the oracle denominator vanishes.
bool commutative_recovery(int k, const std::vector<Rational>& xs);

// Quasi-Schur function for an increasing partition: (-1)^{n-1} times the
// quasideterminant of S_{lambda_c + c - r}^{[n-r]}, boxed at (1, n).
MatValue quasi_schur_spec(const std::vector<int>& lambda, Evaluator& ev);
// Lambda form of the quasi-Schur function of the conjugate partition. The
// verified form has entries Lambda_{lambda_{m+1-r} + c - r}^{[1-c]} and sign
// (-1)^{m-1}; the printed form reads the part as lambda_{m+1-c} with no sign.
MatValue quasi_schur_lambda_form(const std::vector<int>& lambda, Evaluator& ev, bool printed = false);
// Increasing partition of the conjugate of an increasing partition.
std::vector<int> conjugate_partition(const std::vector<int>& lambda);
// Frobenius coordinates (alpha | beta) of a decreasing partition, both sorted
// increasing: alpha_i = lambda_i - i, beta_i = lambda~_i - i.
std::pair<std::vector<int>, std::vector<int>> frobenius(const std::vector<int>& decreasing);
// The k x k quasideterminant of hook quasi-Schur values S_{(beta_i | alpha_j)}
// boxed at (k, k) against the quasi-Schur value of the partition.
bool giambelli_check(const std::vector<int>& decreasing, Evaluator& ev);

// Seeded checks with bounded reseeding on singular draws.
CheckResult with_reseed(const std::string& label, std::uint64_t seed, const std::function<CheckResult(std::uint64_t)>& body);

CheckResult verify_printed_small(int d, std::uint64_t seed);
CheckResult verify_printed_symmetry(int d, std::uint64_t seed);
CheckResult verify_vanishing(int n, int d, SpecFamily f, std::uint64_t seed);
CheckResult verify_shifted_symmetry(int n, int k, int d, std::uint64_t seed);
CheckResult verify_extension(int n, int k, int d, std::uint64_t seed);
CheckResult verify_recovery(int n, int k, std::uint64_t seed);
CheckResult verify_variable_shifts(int n, int k, int d, std::uint64_t seed);
CheckResult verify_denominator_stability(int n, int d, std::uint64_t seed);
// Lambda_k built from specialized S values by the base change equals the
// Lambda quotient (zero past n), for equidistant step c.
CheckResult verify_specialized_base_change(int n, int d, const Rational& c, std::uint64_t seed);
CheckResult verify_ribbon_symmetry(int degree, int n, int d, std::uint64_t seed);
CheckResult verify_quasi_schur_examples(int n, int d, std::uint64_t seed);
CheckResult verify_conjugate_quasi_schur(int n, int d, std::uint64_t seed, bool printed = false);
CheckResult verify_giambelli(int n, int d, std::uint64_t seed);
// Decreasing partitions of Frobenius rank <= 2 used by the Giambelli check.
std::vector<std::vector<int>> giambelli_partitions();

}  // namespace ncshift
