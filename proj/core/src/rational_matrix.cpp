#include "cvgraph/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cvgraph {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  data_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix shape mismatch in product");
  }
  RationalMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out.at(j, i) = at(i, j);
    }
  }
  return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("only square matrices invert");
  }
  const int n = rows_;
  RationalMatrix work(*this);
  RationalMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational scale = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= scale;
      inv.at(col, j) /= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

int RationalMatrix::rank() const {
  RationalMatrix work(*this);
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols_; ++j) {
        std::swap(work.at(pivot, j), work.at(rank, j));
      }
    }
    for (int r = rank + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col) / work.at(rank, col);
      for (int j = col; j < cols_; ++j) {
        work.at(r, j) -= factor * work.at(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace cvgraph
