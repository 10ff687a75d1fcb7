#include "pluckerlab/plucker.hpp"

#include <algorithm>

namespace pluckerlab {

Rational plucker(const RationalMatrix& X, const IndexTuple& I) {
  const int m = I.shape.m;
  if (X.rows() != I.shape.ambient() || X.cols() != m)
    throw std::invalid_argument("plucker: matrix is not (m+n) x m for the tuple's shape");
  std::vector<int> cols(m);
  for (int j = 0; j < m; ++j) cols[j] = j + 1;
  return det(submatrix(X, I.entries, cols));
}

RationalMatrix antidiagonal_signs(int m) {
  RationalMatrix w(m, m);
  for (int i = 1; i <= m; ++i) w(i - 1, m - i) = (i % 2 == 1) ? 1 : -1;
  return w;
}

RationalMatrix embed(const RationalMatrix& A, int m_hint) {
  const int m = m_hint < 0 ? A.cols() : m_hint;
  if (A.cols() != m) throw std::invalid_argument("embed: column count mismatch");
  if (m > A.rows()) throw std::invalid_argument("embed: requires m <= n");
  RationalMatrix out(A.rows() + m, m);
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < m; ++j) out(i, j) = A(i, j);
  const RationalMatrix w0 = antidiagonal_signs(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(A.rows() + i, j) = w0(i, j);
  return out;
}

IndexTuple minor_to_plucker(const std::vector<int>& P, const std::vector<int>& Q,
                            const GrassmannShape& shape) {
  if (P.size() != Q.size()) throw std::invalid_argument("minor_to_plucker: |P| != |Q|");
  for (int p : P)
    if (p < 1 || p > shape.n) throw std::out_of_range("minor_to_plucker: row index");
  for (int q : Q)
    if (q < 1 || q > shape.m) throw std::out_of_range("minor_to_plucker: column index");
  std::vector<bool> inQ(shape.m + 1, false);
  for (int q : Q) inQ[q] = true;
  std::vector<int> entries = P;
  for (int j = 1; j <= shape.m; ++j)
    if (!inQ[j]) entries.push_back(shape.ambient() + 1 - j);
  std::sort(entries.begin(), entries.end());
  return IndexTuple(shape, entries);
}

std::pair<std::vector<int>, std::vector<int>> plucker_to_minor(const IndexTuple& I) {
  const int n = I.shape.n;
  const int amb = I.shape.ambient();
  std::vector<int> P;
  std::vector<bool> dropped(I.shape.m + 1, false);
  for (int x : I.sorted().entries) {
    if (x <= n) P.push_back(x);
    else dropped[amb + 1 - x] = true;
  }
  std::vector<int> Q;
  for (int j = 1; j <= I.shape.m; ++j)
    if (!dropped[j]) Q.push_back(j);
  return {P, Q};
}

namespace {
bool next_subset(std::vector<int>& idx, int n) {
  const int m = static_cast<int>(idx.size());
  for (int i = m - 1; i >= 0; --i) {
    if (idx[i] < n - (m - 1 - i)) {
      ++idx[i];
      for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace

bool all_maximal_minors_nonnegative(const RationalMatrix& X, const GrassmannShape& shape) {
  if (X.rows() != shape.ambient() || X.cols() != shape.m)
    throw std::invalid_argument("expected a (m+n) x m matrix");
  std::vector<int> idx(shape.m);
  for (int i = 0; i < shape.m; ++i) idx[i] = i + 1;
  do {
    if (plucker(X, IndexTuple(shape, idx)) < 0) return false;
  } while (next_subset(idx, shape.ambient()));
  return true;
}

}  // namespace pluckerlab
