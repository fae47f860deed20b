#pragma once

#include <optional>
#include <vector>

#include "cvgraph/rational.hpp"

namespace cvgraph {

/// Dense matrix over exact rationals. Elimination pivots on exact nonzero
/// tests; there are no tolerances anywhere.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix transpose() const;

  bool operator==(const RationalMatrix&) const = default;

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<RationalMatrix> inverse() const;

  int rank() const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

}  // namespace cvgraph
