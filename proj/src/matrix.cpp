#include "pluckerlab/matrix.hpp"

#include <algorithm>

namespace pluckerlab {

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Rational det(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row; track the overall scale.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      Rational e = m(i, j) * Rational(l);
      a[i][j] = e.get_num();
    }
    scale *= l;
  }

  // Bareiss: every division below is exact.
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational result(sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1], scale);
  result.canonicalize();
  return result;
}

RationalMatrix submatrix(const RationalMatrix& m, const std::vector<int>& rows_1based,
                         const std::vector<int>& cols_1based) {
  RationalMatrix out(static_cast<int>(rows_1based.size()), static_cast<int>(cols_1based.size()));
  for (size_t i = 0; i < rows_1based.size(); ++i) {
    const int r = rows_1based[i];
    if (r < 1 || r > m.rows()) throw std::out_of_range("submatrix: row index out of range");
    for (size_t j = 0; j < cols_1based.size(); ++j) {
      const int c = cols_1based[j];
      if (c < 1 || c > m.cols()) throw std::out_of_range("submatrix: column index out of range");
      out(static_cast<int>(i), static_cast<int>(j)) = m(r - 1, c - 1);
    }
  }
  return out;
}

Rational minor_det(const RationalMatrix& m, const MinorSpec& spec) {
  if (spec.row_set.size() != spec.col_set.size())
    throw std::invalid_argument("minor: |P| != |Q|");
  return det(submatrix(m, spec.row_set, spec.col_set));
}

}  // namespace pluckerlab
