#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncshift/check.hpp"
#include "ncshift/free_algebra.hpp"
#include "ncshift/matvalue.hpp"

namespace ncshift {

class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Upper Hessenberg matrix with entries e_{ij}, j >= i, in a noncommutative
// ring E, nonzero scalar subdiagonal entries (default 1) and zeros below.
// Indices are 1-based.
template <class E>
class HessenbergMatrix {
 public:
  explicit HessenbergMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)), sub_(n > 0 ? n - 1 : 0, Rational(1)) {
    if (n < 1) throw ShapeError("Hessenberg matrix needs size >= 1");
  }
  template <class F>
  static HessenbergMatrix build(int n, F&& entry) {
    HessenbergMatrix m(n);
    for (int r = 1; r <= n; ++r)
      for (int c = r; c <= n; ++c) m.at(r, c) = entry(r, c);
    return m;
  }
  // Validates a dense square layout: scalar nonzero subdiagonal, zeros below.
  static HessenbergMatrix from_dense(const std::vector<std::vector<E>>& rows);

  int size() const { return n_; }
  E& at(int r, int c) { return e_[idx(r, c)]; }
  const E& at(int r, int c) const { return e_[idx(r, c)]; }
  // Entry (c+1, c).
  const Rational& sub(int c) const { return sub_.at(static_cast<std::size_t>(c - 1)); }
  void set_sub(int c, const Rational& v) {
    if (v.is_zero()) throw ShapeError("Hessenberg subdiagonal entry must be nonzero");
    sub_.at(static_cast<std::size_t>(c - 1)) = v;
  }

 private:
  std::size_t idx(int r, int c) const {
    if (r < 1 || c < r || c > n_) throw ShapeError("Hessenberg entry outside the upper triangle");
    return static_cast<std::size_t>((r - 1) * n_ + (c - 1));
  }
  int n_;
  std::vector<E> e_;
  std::vector<Rational> sub_;
};

namespace detail {
template <class L>
bool scalar_value(const FreeElement<L>& x, Rational& out) {
  if (x.is_zero()) {
    out = Rational(0);
    return true;
  }
  if (x.size() != 1) return false;
  const auto& [w, c] = *x.terms().begin();
  if (!w.empty() || !c.is_constant()) return false;
  out = c.constant_term();
  return true;
}
}  // namespace detail

template <class E>
HessenbergMatrix<E> HessenbergMatrix<E>::from_dense(const std::vector<std::vector<E>>& rows) {
  const int n = static_cast<int>(rows.size());
  HessenbergMatrix m(n);
  for (int r = 1; r <= n; ++r) {
    if (static_cast<int>(rows[r - 1].size()) != n) throw ShapeError("Hessenberg input is not square");
    for (int c = 1; c <= n; ++c) {
      const E& v = rows[r - 1][c - 1];
      if (c >= r) {
        m.at(r, c) = v;
      } else if (c == r - 1) {
        Rational s;
        if (!detail::scalar_value(v, s) || s.is_zero())
          throw ShapeError("subdiagonal entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not a nonzero scalar");
        m.set_sub(c, s);
      } else if (!v.is_zero()) {
        throw ShapeError("nonzero entry below the subdiagonal at (" + std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  return m;
}

// Quasideterminant |M|_{1n}. For unit subdiagonal this is the alternating sum
// over 1 <= l_1 < ... < l_k < n of (-1)^k e_{1,l_1} e_{l_1+1,l_2} ... e_{l_k+1,n};
// the general case uses T(r) = e_{rn} - sum_c e_{rc} sub(c)^{-1} T(c+1).
template <class E>
E hessenberg_quasidet(const HessenbergMatrix<E>& m) {
  const int n = m.size();
  std::vector<E> t(static_cast<std::size_t>(n + 2));
  t[n + 1] = E(1);
  for (int r = n; r >= 1; --r) {
    E acc = m.at(r, n);
    for (int c = r; c < n; ++c) {
      const E& e = m.at(r, c);
      if (e.is_zero() || t[c + 1].is_zero()) continue;
      acc.add_scaled(e * t[c + 1], ParamPoly(-Rational(1) / m.sub(c)));
    }
    t[r] = std::move(acc);
  }
  return t[1];
}

// n x n matrix of d x d rational blocks, stored flat. Indices are 1-based.
class BlockMatrix {
 public:
  BlockMatrix(int n, int d) : n_(n), d_(d), flat_(zero_matrix(n * d, n * d)) {
    if (n < 1 || d < 1) throw ShapeError("block matrix needs n, d >= 1");
  }
  int size() const { return n_; }
  int block_dim() const { return d_; }
  MatValue block(int i, int j) const { return flat_.block((i - 1) * d_, (j - 1) * d_, d_, d_); }
  void set_block(int i, int j, const MatValue& b);
  const MatValue& flat() const { return flat_; }

 private:
  int n_, d_;
  MatValue flat_;
};

// |A|_{pq} = a_{pq} - row_p(A^{pq}) (A^{pq})^{-1} col_q(A^{pq}). Throws
// SingularMinor when the deleted minor is not invertible.
MatValue block_quasidet(const BlockMatrix& a, int p, int q);

// Tall matrix of blocks (rows x cols) with a helper to pick labelled rows.
class BlockRows {
 public:
  BlockRows(int rows, int cols, int d) : rows_(rows), cols_(cols), d_(d), blocks_(static_cast<std::size_t>(rows * cols)) {}
  MatValue& at(int i, int j) { return blocks_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))]; }
  const MatValue& at(int i, int j) const { return blocks_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int block_dim() const { return d_; }
  // Square block matrix from the given original row labels (all columns).
  BlockMatrix select(const std::vector<int>& labels) const;

 private:
  int rows_, cols_, d_;
  std::vector<MatValue> blocks_;
};

// Quasideterminant of the rows with the given labels, boxed at the row with
// original label p and column q.
MatValue quasiminor(const BlockRows& a, const std::vector<int>& labels, int p, int q);

// Seeded draws from the pool {-3, ..., 3, 1/2, -1/2}.
MatValue random_matrix(int d, std::uint64_t& state);
BlockRows random_block_rows(int rows, int cols, int d, std::uint64_t seed);

// Bazin-type identity for quasiminors of a random 2n x n block matrix:
// |B|_{..} = |A_{k..n-1,n+1..n+k}|_{n+k,n} |A_{k..n+k-1}|_{n,n}^{-1} |A_{1..n}|_{n,n}.
// Orientation::Literal takes b_ij = |A_{i..i+n-2,n+j}|_{n+j,n} boxed at (1,k);
// Orientation::Transposed takes b_ij = |A_{j..j+n-2,n+i}|_{n+i,n} boxed at (k,1).
// Reseeds (seed+1, ...) on SingularMinor up to max_reseed() times, then throws
// ExhaustedRetries.
enum class BazinOrientation { Literal, Transposed };
CheckResult verify_bazin(int n, int k, int d, std::uint64_t seed, BazinOrientation orient = BazinOrientation::Transposed);

}  // namespace ncshift
