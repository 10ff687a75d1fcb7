#pragma once

#include <utility>

#include "pluckerlab/index_tuple.hpp"

namespace pluckerlab {

// Clockwise layout of the symmetric difference of a pair (I, J) on the
// circle [1, m+n]. i_seq lists I\J and j_seq lists J\I, both in the order
// met when traversing clockwise from the chosen start i_1.
struct SymDiffLayout {
  int eta = 0;
  std::vector<int> i_seq;
  std::vector<int> j_seq;
  int start = 0;  // the chosen i_1
};

// True iff I\J and J\I can be separated by a chord of the circle with
// marked points 1..m+n, i.e. each occupies a contiguous arc of the cyclic
// order restricted to the symmetric difference. Pairs with eta <= 1 are
// always weakly separated.
bool is_weakly_separated(const IndexTuple& I, const IndexTuple& J);

// Canonical start rule: traverse the circular word of symmetric-difference
// elements; i_1 is the element immediately following the end of the longest
// maximal run of J\I elements (ties broken by smallest i_1). For weakly
// separated pairs this is the unique rotation splitting the word into an
// i-arc followed by a j-arc; it reproduces the clockwise-order convention
// of the oscillating systems. Throws when eta = 0.
SymDiffLayout layout(const IndexTuple& I, const IndexTuple& J);

// The single-exchange pair (I_{k,r}, J_{k,r}): j_k and i_r replace each
// other in place. 1 <= k, r <= eta.
std::pair<IndexTuple, IndexTuple> exchange_pair(const IndexTuple& I, const IndexTuple& J, int k,
                                                int r);
std::pair<IndexTuple, IndexTuple> exchange_pair(const IndexTuple& I, const IndexTuple& J,
                                                const SymDiffLayout& lay, int k, int r);

}  // namespace pluckerlab
