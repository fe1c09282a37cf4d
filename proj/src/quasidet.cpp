#include "ncshift/quasidet.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ncshift {

void BlockMatrix::set_block(int i, int j, const MatValue& b) {
  if (b.rows() != d_ || b.cols() != d_) throw ShapeError("block has the wrong dimension");
  flat_.block((i - 1) * d_, (j - 1) * d_, d_, d_) = b;
}

MatValue block_quasidet(const BlockMatrix& a, int p, int q) {
  const int n = a.size(), d = a.block_dim();
  if (p < 1 || p > n || q < 1 || q > n) throw ShapeError("quasideterminant position out of range");
  if (n == 1) return a.block(1, 1);
  std::vector<int> rows, cols;
  for (int i = 1; i <= n; ++i) {
    if (i != p) rows.push_back(i);
    if (i != q) cols.push_back(i);
  }
  const int m = (n - 1) * d;
  MatValue minor(m, m), row(d, m), col(m, d);
  for (int bi = 0; bi < n - 1; ++bi) {
    for (int bj = 0; bj < n - 1; ++bj) minor.block(bi * d, bj * d, d, d) = a.block(rows[bi], cols[bj]);
    col.block(bi * d, 0, d, d) = a.block(rows[bi], q);
    row.block(0, bi * d, d, d) = a.block(p, cols[bi]);
  }
  MatValue x = solve(minor, col);
  MatValue prod = row * x;
  return a.block(p, q) - prod;
}

BlockMatrix BlockRows::select(const std::vector<int>& labels) const {
  if (static_cast<int>(labels.size()) != cols_) throw ShapeError("row selection must give a square matrix");
  BlockMatrix m(cols_, d_);
  for (int i = 0; i < cols_; ++i)
    for (int j = 1; j <= cols_; ++j) m.set_block(i + 1, j, at(labels[i], j));
  return m;
}

MatValue quasiminor(const BlockRows& a, const std::vector<int>& labels, int p, int q) {
  auto it = std::find(labels.begin(), labels.end(), p);
  if (it == labels.end()) throw ShapeError("boxed row is not among the selected rows");
  return block_quasidet(a.select(labels), static_cast<int>(it - labels.begin()) + 1, q);
}

MatValue random_matrix(int d, std::uint64_t& state) {
  static const Rational pool[] = {Rational(-3), Rational(-2), Rational(-1), Rational(0), Rational(1),
                                  Rational(2),  Rational(3),  Rational(1, 2), Rational(-1, 2)};
  std::mt19937_64 gen(state);
  std::uniform_int_distribution<int> pick(0, 8);
  MatValue m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = pool[pick(gen)];
  state = gen();
  return m;
}

BlockRows random_block_rows(int rows, int cols, int d, std::uint64_t seed) {
  BlockRows a(rows, cols, d);
  std::uint64_t state = seed;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) a.at(i, j) = random_matrix(d, state);
  return a;
}

namespace {

std::vector<int> range_labels(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

bool bazin_once(int n, int k, int d, std::uint64_t seed, BazinOrientation orient, std::string& witness) {
  BlockRows a = random_block_rows(2 * n, n, d, seed);
  auto b_entry = [&](int i, int j) {
    std::vector<int> labels = range_labels(i, i + n - 2);
    labels.push_back(n + j);
    return quasiminor(a, labels, n + j, n);
  };
  BlockMatrix b(k, d);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      b.set_block(i, j, orient == BazinOrientation::Literal ? b_entry(i, j) : b_entry(j, i));
  MatValue lhs = orient == BazinOrientation::Literal ? block_quasidet(b, 1, k) : block_quasidet(b, k, 1);

  std::vector<int> l1 = range_labels(k, n - 1);
  for (int i = n + 1; i <= n + k; ++i) l1.push_back(i);
  MatValue r1 = quasiminor(a, l1, n + k, n);
  MatValue r2 = quasiminor(a, range_labels(k, n + k - 1), n, n);
  MatValue r3 = quasiminor(a, range_labels(1, n), n, n);
  MatValue rhs = r1 * inverse(r2) * r3;
  witness = first_difference(lhs, rhs);
  return witness.empty();
}

}  // namespace

CheckResult verify_bazin(int n, int k, int d, std::uint64_t seed, BazinOrientation orient) {
  if (n < 1 || k < 1 || k > n || d < 1) throw std::invalid_argument("verify_bazin needs n >= k >= 1 and d >= 1");
  const int budget = max_reseed();
  for (int attempt = 0; attempt <= budget; ++attempt) {
    std::string witness;
    try {
      bool ok = bazin_once(n, k, d, seed + attempt, orient, witness);
      CheckResult r;
      r.pass = ok;
      r.seed = seed + attempt;
      r.retries = attempt;
      if (!ok) r.witness = "bazin n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d) + ": " + witness;
      return r;
    } catch (const SingularMinor&) {
      continue;
    }
  }
  throw ExhaustedRetries("verify_bazin: every draw hit a singular minor");
}

}  // namespace ncshift
