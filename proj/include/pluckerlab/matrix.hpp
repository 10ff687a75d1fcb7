#pragma once

#include <cstddef>
#include <vector>

#include "pluckerlab/rational.hpp"

namespace pluckerlab {

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

// Square minor selector: row set P, column set Q, both strictly increasing,
// 1-based. Empty spec selects the 0x0 matrix whose determinant is 1.
struct MinorSpec {
  std::vector<int> row_set;
  std::vector<int> col_set;
};

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

// Exact determinant via fraction-free Bareiss elimination on the
// denominator-cleared integer matrix. det of the 0x0 matrix is 1.
Rational det(const RationalMatrix& m);

// Determinant of the (P, Q) submatrix.
Rational minor_det(const RationalMatrix& m, const MinorSpec& spec);

// Submatrix with rows and columns drawn in the listed order (entries may
// repeat, so this also builds generalized submatrices).
RationalMatrix submatrix(const RationalMatrix& m, const std::vector<int>& rows_1based,
                         const std::vector<int>& cols_1based);

}  // namespace pluckerlab
