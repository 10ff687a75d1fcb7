#include "pluckerlab/index_tuple.hpp"

namespace pluckerlab {

int tuple_sign(const IndexTuple& t) {
  int inversions = 0;
  const auto& e = t.entries;
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      if (e[i] > e[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

IndexTuple cyclic_shift_tuple(const IndexTuple& t, int shift) {
  const int mod = t.shape.ambient();
  IndexTuple out = t;
  for (int& x : out.entries) {
    int v = (x - 1 + shift) % mod;
    if (v < 0) v += mod;
    x = v + 1;
  }
  return out;
}

IndexTuple reflect_tuple(const IndexTuple& t) {
  IndexTuple out = t;
  for (int& x : out.entries) x = t.shape.ambient() + 1 - x;
  return out;
}

std::vector<int> complement_set(const IndexTuple& t) {
  std::vector<bool> in(t.shape.ambient() + 1, false);
  for (int x : t.entries) in[x] = true;
  std::vector<int> out;
  for (int x = 1; x <= t.shape.ambient(); ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

}  // namespace pluckerlab
