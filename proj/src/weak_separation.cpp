#include "pluckerlab/weak_separation.hpp"

#include <algorithm>
#include <stdexcept>

namespace pluckerlab {

namespace {

// Symmetric-difference elements in circle order, tagged true for I\J.
std::vector<std::pair<int, bool>> symdiff_word(const IndexTuple& I, const IndexTuple& J) {
  if (!(I.shape == J.shape)) throw std::invalid_argument("pair has mismatched shapes");
  const int amb = I.shape.ambient();
  std::vector<int> where(amb + 1, 0);  // 1 = I only, 2 = J only, 3 = both
  for (int x : I.entries) where[x] |= 1;
  for (int x : J.entries) where[x] |= 2;
  std::vector<std::pair<int, bool>> word;
  for (int x = 1; x <= amb; ++x) {
    if (where[x] == 1) word.emplace_back(x, true);
    else if (where[x] == 2) word.emplace_back(x, false);
  }
  return word;
}

}  // namespace

bool is_weakly_separated(const IndexTuple& I, const IndexTuple& J) {
  const auto word = symdiff_word(I, J);
  if (word.size() <= 2) return true;
  int blocks = 0;
  const size_t n = word.size();
  for (size_t p = 0; p < n; ++p)
    if (word[p].second != word[(p + 1) % n].second) ++blocks;
  return blocks <= 2;
}

SymDiffLayout layout(const IndexTuple& I, const IndexTuple& J) {
  const auto word = symdiff_word(I, J);
  if (word.empty()) throw std::invalid_argument("layout: empty symmetric difference");
  const size_t n = word.size();
  const int eta = static_cast<int>(n) / 2;

  // Candidate starts: the position after each maximal run of j's. Prefer the
  // longest j-run, then the smallest start element.
  size_t best_start = n;
  int best_run = -1;
  for (size_t p = 0; p < n; ++p) {
    const auto& prev = word[(p + n - 1) % n];
    if (!word[p].second || prev.second) continue;  // start must be an i after a j
    int run = 0;
    for (size_t q = (p + n - 1) % n; word[q].second == false; q = (q + n - 1) % n) {
      ++run;
      if (run == static_cast<int>(n)) break;
    }
    if (run > best_run || (run == best_run && word[p].first < word[best_start].first)) {
      best_run = run;
      best_start = p;
    }
  }
  if (best_start == n) throw std::invalid_argument("layout: degenerate pair");

  SymDiffLayout lay;
  lay.eta = eta;
  lay.start = word[best_start].first;
  for (size_t t = 0; t < n; ++t) {
    const auto& [elem, is_i] = word[(best_start + t) % n];
    (is_i ? lay.i_seq : lay.j_seq).push_back(elem);
  }
  return lay;
}

std::pair<IndexTuple, IndexTuple> exchange_pair(const IndexTuple& I, const IndexTuple& J,
                                                const SymDiffLayout& lay, int k, int r) {
  if (k < 1 || k > lay.eta || r < 1 || r > lay.eta)
    throw std::out_of_range("exchange_pair: k or r out of range");
  const int ir = lay.i_seq[r - 1];
  const int jk = lay.j_seq[k - 1];
  IndexTuple Ikr = I;
  IndexTuple Jkr = J;
  std::replace(Ikr.entries.begin(), Ikr.entries.end(), ir, jk);
  std::replace(Jkr.entries.begin(), Jkr.entries.end(), jk, ir);
  return {std::move(Ikr), std::move(Jkr)};
}

std::pair<IndexTuple, IndexTuple> exchange_pair(const IndexTuple& I, const IndexTuple& J, int k,
                                                int r) {
  return exchange_pair(I, J, layout(I, J), k, r);
}

}  // namespace pluckerlab
