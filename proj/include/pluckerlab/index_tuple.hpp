#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pluckerlab {

// Ambient shape for Gr(m, m+n): minors are m x m, ground set is [1, m+n].
struct GrassmannShape {
  int m = 1;
  int n = 1;

  GrassmannShape() = default;
  GrassmannShape(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || m > n) throw std::invalid_argument("shape requires 1 <= m <= n");
  }

  int ambient() const { return m + n; }
  bool operator==(const GrassmannShape& o) const { return m == o.m && n == o.n; }
};

// Ordered tuple of m distinct elements of [1, m+n]. Order matters: the sign
// bookkeeping of the oscillating systems lives in the ordering, so sorting
// is always an explicit operation.
struct IndexTuple {
  GrassmannShape shape;
  std::vector<int> entries;

  IndexTuple() = default;
  IndexTuple(GrassmannShape sh, std::vector<int> e) : shape(sh), entries(std::move(e)) {
    validate();
  }

  void validate() const {
    if (static_cast<int>(entries.size()) != shape.m)
      throw std::invalid_argument("index tuple: wrong length");
    std::vector<int> s = entries;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > shape.ambient())
        throw std::invalid_argument("index tuple: entry out of range");
      if (i > 0 && s[i] == s[i - 1])
        throw std::invalid_argument("index tuple: repeated entry");
    }
  }

  IndexTuple sorted() const {
    IndexTuple t = *this;
    std::sort(t.entries.begin(), t.entries.end());
    return t;
  }

  bool same_set(const IndexTuple& o) const {
    return shape == o.shape && sorted().entries == o.sorted().entries;
  }

  bool operator==(const IndexTuple& o) const { return shape == o.shape && entries == o.entries; }
  bool operator<(const IndexTuple& o) const { return entries < o.entries; }
};

// Parity of the permutation sorting the tuple ascending: +1 for an even
// number of inversions, -1 for odd.
int tuple_sign(const IndexTuple& t);

// Entry-wise x -> ((x - 1 + t) mod (m+n)) + 1, positions preserved.
IndexTuple cyclic_shift_tuple(const IndexTuple& t, int shift);

// Entry-wise x -> (m+n+1) - x, positions preserved.
IndexTuple reflect_tuple(const IndexTuple& t);

// Sorted complement of the underlying set within [1, m+n]; the result has
// m+n-m entries, so it is only a valid IndexTuple when m+n = 2m.
std::vector<int> complement_set(const IndexTuple& t);

}  // namespace pluckerlab
