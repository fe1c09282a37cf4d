#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

#include "ncshift/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<ncshift::Rational> : GenericNumTraits<ncshift::Rational> {
  using Real = ncshift::Rational;
  using NonInteger = ncshift::Rational;
  using Nested = ncshift::Rational;
  using Literal = ncshift::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace ncshift {

// Square matrix of exact rationals.
using MatValue = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

class SingularMinor : public std::domain_error {
 public:
  explicit SingularMinor(const std::string& what) : std::domain_error(what) {}
};

MatValue identity(int d);
MatValue zero_matrix(int rows, int cols);
MatValue scalar_matrix(int d, const Rational& c);

// X with A X = B by exact Gauss-Jordan elimination. Throws SingularMinor.
MatValue solve(const MatValue& a, const MatValue& b);
MatValue inverse(const MatValue& a);
Rational determinant(const MatValue& a);

bool is_zero(const MatValue& m);
// "entry (i,j): x vs y" for the first differing entry, empty when equal.
std::string first_difference(const MatValue& x, const MatValue& y);
std::string to_string(const MatValue& m);

}  // namespace ncshift
