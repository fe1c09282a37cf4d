#include "ncshift/matvalue.hpp"

#include <sstream>
#include <utility>

namespace ncshift {

MatValue identity(int d) {
  MatValue m = zero_matrix(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = Rational(1);
  return m;
}

MatValue zero_matrix(int rows, int cols) {
  MatValue m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(0);
  return m;
}

MatValue scalar_matrix(int d, const Rational& c) {
  MatValue m = zero_matrix(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = c;
  return m;
}

MatValue solve(const MatValue& a, const MatValue& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(b.cols());
  MatValue w(n, n + m);
  w.leftCols(n) = a;
  w.rightCols(m) = b;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMinor("singular matrix in exact solve");
    if (piv != col) w.row(piv).swap(w.row(col));
    Rational inv = Rational(1) / w(col, col);
    for (int j = col; j < n + m; ++j) w(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || w(i, col).is_zero()) continue;
      Rational f = w(i, col);
      for (int j = col; j < n + m; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return w.rightCols(m);
}

MatValue inverse(const MatValue& a) { return solve(a, identity(static_cast<int>(a.rows()))); }

Rational determinant(const MatValue& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const int n = static_cast<int>(a.rows());
  MatValue w = a;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      w.row(piv).swap(w.row(col));
      det = -det;
    }
    det *= w(col, col);
    Rational inv = Rational(1) / w(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (w(i, col).is_zero()) continue;
      Rational f = w(i, col) * inv;
      for (int j = col; j < n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return det;
}

bool is_zero(const MatValue& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

std::string first_difference(const MatValue& x, const MatValue& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return "shape mismatch";
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) {
        std::ostringstream os;
        os << "entry (" << i + 1 << "," << j + 1 << "): " << x(i, j) << " vs " << y(i, j);
        return os.str();
      }
  return {};
}

std::string to_string(const MatValue& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace ncshift
