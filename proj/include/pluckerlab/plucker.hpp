#pragma once

#include <utility>

#include "pluckerlab/index_tuple.hpp"
#include "pluckerlab/matrix.hpp"

namespace pluckerlab {

// Delta_I(X): determinant of the rows of X listed by I, in tuple order,
// against all m columns. The alternating convention is implicit: an odd
// permutation of the tuple flips the sign.
Rational plucker(const RationalMatrix& X, const IndexTuple& I);

// The m x m antidiagonal sign matrix w_{ij} = (-1)^{i+1} if j = m-i+1.
RationalMatrix antidiagonal_signs(int m);

// Stacks the n x m matrix A on top of the sign block: the standard embedding
// of n x m TNN matrices into the TNN Grassmannian Gr(m, m+n).
RationalMatrix embed(const RationalMatrix& A, int m_hint = -1);

// Maximal-minor index I with det A_{P,Q} = Delta_I(embed(A)):
// I = P u { m+n+1-j | j in [m] \ Q }, sorted.
IndexTuple minor_to_plucker(const std::vector<int>& P, const std::vector<int>& Q,
                            const GrassmannShape& shape);

// Inverse map: P = I n [n], Q = [m] \ { m+n+1-i | i in I n [n+1, m+n] }.
std::pair<std::vector<int>, std::vector<int>> plucker_to_minor(const IndexTuple& I);

// All maximal minors nonnegative (the Grassmannian-point analogue of TNN).
bool all_maximal_minors_nonnegative(const RationalMatrix& X, const GrassmannShape& shape);

}  // namespace pluckerlab
