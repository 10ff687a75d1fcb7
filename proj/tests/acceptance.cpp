// Acceptance gate: one PASS/FAIL line per criterion, exit nonzero if any
// criterion fails. All checks are exact (zero tolerance).
#include <chrono>
#include <functional>
#include <iostream>

#include "pluckerlab/inequality.hpp"
#include "pluckerlab/parallel.hpp"
#include "pluckerlab/plucker.hpp"
#include "pluckerlab/prematching.hpp"
#include "pluckerlab/tl_algebra.hpp"
#include "pluckerlab/tnn_gen.hpp"
#include "pluckerlab/weak_separation.hpp"

using namespace pluckerlab;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, name, ok, detail);
}

RationalMatrix tnn_sample(int n, int m, std::uint64_t seed, const Rational& density = Rational(1, 2)) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.n = n;
  cfg.m = m;
  cfg.density = density;
  return random_tnn(cfg);
}

KauffmanDiagram diag(std::vector<std::pair<int, int>> edges) {
  return KauffmanDiagram::from_edges(static_cast<int>(edges.size()), edges);
}

std::vector<IndexTuple> all_tuples(const GrassmannShape& sh) {
  std::vector<IndexTuple> out;
  std::vector<int> idx(sh.m);
  for (int i = 0; i < sh.m; ++i) idx[i] = i + 1;
  while (true) {
    out.emplace_back(sh, idx);
    int i = sh.m - 1;
    while (i >= 0 && idx[i] == sh.ambient() - (sh.m - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < sh.m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// --- criteria ---

bool catalan_counts(std::string& detail) {
  const size_t expect[] = {1, 2, 5, 14, 42, 132};
  for (int s = 1; s <= 6; ++s)
    if (enumerate_diagrams(s).size() != expect[s - 1]) {
      detail = "wrong count at s=" + std::to_string(s);
      return false;
    }
  return true;
}

bool example_2_6(std::string& detail) {
  const GrassmannShape sh(3, 3);
  const IndexTuple I124(sh, {1, 2, 4}), I356(sh, {3, 5, 6});
  const IndexTuple I123(sh, {1, 2, 3}), I456(sh, {4, 5, 6});
  const KauffmanDiagram K2 = diag({{1, 6}, {2, 3}, {4, 5}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RationalMatrix A = tnn_sample(3, 3, 2600 + seed);
    const RationalMatrix Xbar = embed(A);
    const Rational lhs =
        plucker(Xbar, I124) * plucker(Xbar, I356) - plucker(Xbar, I123) * plucker(Xbar, I456);
    if (lhs != immanant(K2, A) || lhs < 0) {
      detail = "seed " + std::to_string(seed);
      return false;
    }
  }
  return true;
}

bool example_3_5(std::string& detail) {
  const GrassmannShape sh(3, 3);
  const KauffmanDiagram K0 = diag({{1, 6}, {2, 5}, {3, 4}});
  const KauffmanDiagram K1 = diag({{1, 6}, {2, 3}, {4, 5}});
  const KauffmanDiagram K2 = diag({{1, 4}, {2, 3}, {5, 6}});
  std::vector<std::vector<KauffmanDiagram>> phis;
  std::vector<IndexTuple> tuples;
  for (int k = 0; k <= 3; ++k) {
    tuples.emplace_back(sh, std::vector<int>{1, 2, 3 + k});
    phis.push_back(compatible_set(tuples[k], IndexTuple(sh, complement_set(tuples[k]))));
  }
  const size_t sizes[] = {1, 2, 2, 1};
  for (int k = 0; k <= 3; ++k)
    if (phis[k].size() != sizes[k]) {
      detail = "size at k=" + std::to_string(k);
      return false;
    }
  auto has = [](const std::vector<KauffmanDiagram>& v, const KauffmanDiagram& k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };
  if (!(has(phis[0], K0) && has(phis[1], K0) && has(phis[1], K1) && has(phis[2], K1) &&
        has(phis[2], K2) && has(phis[3], K2))) {
    detail = "sharing pattern";
    return false;
  }
  // Full alternating sum is the zero polynomial.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RationalMatrix X = random_rational_matrix(3, 3, 3500 + seed);
    const RationalMatrix Xbar = embed(X);
    Rational total = 0;
    for (int k = 0; k <= 3; ++k) {
      const Rational prod =
          plucker(Xbar, tuples[k]) * plucker(Xbar, IndexTuple(sh, complement_set(tuples[k])));
      total += Rational(k % 2 == 0 ? -1 : 1) * prod;  // (-1)^{1+k}
    }
    if (total != 0) {
      detail = "nonzero alternating sum, seed " + std::to_string(seed);
      return false;
    }
  }
  return true;
}

bool example_3_7(std::string& detail) {
  const GeneralizedLaplaceSystem sys = generalized_laplace_system(7, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rows = evaluate_laplace(sys, tnn_sample(7, 7, 3700 + seed));
    for (int l = 0; l <= 6; ++l)
      if (rows[l] < 0) {
        detail = "negative row l=" + std::to_string(l) + " seed " + std::to_string(seed);
        return false;
      }
    if (rows[7] != 0) {
      detail = "row 7 nonzero, seed " + std::to_string(seed);
      return false;
    }
  }
  return true;
}

bool example_4_2(std::string& detail) {
  const GrassmannShape sh(6, 6);
  const IndexTuple I(sh, {1, 2, 3, 4, 10, 11});
  const IndexTuple J(sh, {5, 6, 7, 8, 9, 11});
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> products{
      {{1, 2, 3, 4, 10, 11}, {5, 6, 7, 8, 9, 11}}, {{1, 3, 4, 5, 10, 11}, {2, 6, 7, 8, 9, 11}},
      {{1, 3, 4, 6, 10, 11}, {2, 5, 7, 8, 9, 11}}, {{1, 3, 4, 7, 10, 11}, {2, 5, 6, 8, 9, 11}},
      {{1, 3, 4, 8, 10, 11}, {2, 5, 6, 7, 9, 11}}, {{1, 3, 4, 9, 10, 11}, {2, 5, 6, 7, 8, 11}}};
  const size_t sizes[] = {1, 2, 4, 5, 4, 2};
  for (size_t p = 0; p < products.size(); ++p) {
    const auto phi =
        compatible_set(IndexTuple(sh, products[p].first), IndexTuple(sh, products[p].second));
    if (phi.size() != sizes[p]) {
      detail = "Phi size at product " + std::to_string(p);
      return false;
    }
  }
  const KauffmanDiagram K3 = diag({{1, 2}, {3, 8}, {4, 5}, {6, 7}, {9, 10}, {11, 12}});
  const KauffmanDiagram K4 = diag({{1, 8}, {2, 3}, {4, 5}, {6, 7}, {9, 10}, {11, 12}});
  const KauffmanDiagram K5 = diag({{1, 6}, {2, 3}, {4, 5}, {7, 8}, {9, 10}, {11, 12}});
  const KauffmanDiagram K6 = diag({{1, 2}, {3, 6}, {4, 5}, {7, 8}, {9, 10}, {11, 12}});
  const KauffmanDiagram K7 = diag({{1, 6}, {2, 3}, {4, 5}, {7, 10}, {8, 9}, {11, 12}});
  const KauffmanDiagram K8 = diag({{1, 2}, {3, 6}, {4, 5}, {7, 10}, {8, 9}, {11, 12}});
  const InequalitySystem sys = build_system(I, J, 3);
  // The three displayed inequalities correspond to the partial sums of
  // lengths 2, 3, 4 (the length-1 sum carries the first product's pair).
  const std::vector<std::vector<KauffmanDiagram>> expected{{K3, K4}, {K5, K6}, {K7, K8}};
  for (int i = 0; i < 3; ++i) {
    const Certificate c = certify(sys, i + 2);
    if (!c.certified() || c.coefficients.size() != 2) {
      detail = "certificate shape at l=" + std::to_string(i + 2);
      return false;
    }
    for (const KauffmanDiagram& k : expected[i])
      if (!c.coefficients.count(k) || c.coefficients.at(k) != 1) {
        detail = "certificate diagrams at l=" + std::to_string(i + 2);
        return false;
      }
  }
  if (!certify(sys, 5).coefficients.empty()) {
    detail = "l=5 not the zero vector";
    return false;
  }
  return true;
}

bool forward_sweep(std::string& detail) {
  std::vector<GrassmannShape> shapes;
  for (int m = 2; m <= 3; ++m)
    for (int n = m; m + n <= 7; ++n) shapes.emplace_back(m, n);
  for (const GrassmannShape& sh : shapes) {
    std::vector<RationalMatrix> points;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
      points.push_back(embed(tnn_sample(sh.n, sh.m, 6000 + seed)));
    const auto tuples = all_tuples(sh);
    std::string err;
    parallel_for(static_cast<int>(tuples.size()), [&](int a) {
      for (const IndexTuple& J : tuples) {
        const IndexTuple& I = tuples[a];
        if (!is_weakly_separated(I, J)) continue;
        SymDiffLayout lay;
        try {
          lay = layout(I, J);
        } catch (const std::invalid_argument&) {
          continue;
        }
        if (lay.eta < 2) continue;
        for (int r = 1; r <= lay.eta; ++r) {
          const InequalitySystem sys = build_system(I, J, r);
          for (int l = 1; l <= lay.eta; ++l)
            if (!certify(sys, l).certified()) err = "uncertified ws system";
          for (const RationalMatrix& X : points) {
            const auto vals = evaluate_system(sys, X);
            for (const Rational& v : vals)
              if (v < 0) err = "negative value on TNN point";
            if (vals.back() != 0) err = "l=eta not zero";
          }
        }
      }
    });
    if (!err.empty()) {
      detail = err;
      return false;
    }
  }
  return true;
}

bool converse_witnesses(std::string& detail) {
  GeneratorConfig cfg;
  cfg.seed = 1;
  struct Case {
    GrassmannShape sh;
    std::vector<int> I, J;
  };
  const std::vector<Case> bases{{GrassmannShape(2, 2), {1, 3}, {2, 4}},
                                {GrassmannShape(3, 3), {1, 3, 5}, {2, 4, 6}}};
  for (const Case& c : bases) {
    for (int shift = 0; shift < c.sh.ambient(); ++shift) {
      for (int refl = 0; refl < 2; ++refl) {
        IndexTuple I(c.sh, c.I), J(c.sh, c.J);
        I = cyclic_shift_tuple(I, shift);
        J = cyclic_shift_tuple(J, shift);
        if (refl) {
          I = reflect_tuple(I);
          J = reflect_tuple(J);
        }
        const auto w = search_counterexample(I, J, 60, cfg);
        if (!w) {
          detail = "no witness for an orbit element";
          return false;
        }
        if (!(w->value < 0) || !all_maximal_minors_nonnegative(w->X, c.sh)) {
          detail = "invalid witness";
          return false;
        }
      }
    }
  }
  return true;
}

bool oracle_identity(std::string& detail) {
  for (int s = 1; s <= 4; ++s) {
    const GrassmannShape sh(s, s);
    const auto diagrams = enumerate_diagrams(s);
    for (const IndexTuple& I : all_tuples(sh)) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RationalMatrix X = random_rational_matrix(s, s, 8000 + seed);
        const RationalMatrix Xbar = embed(X);
        Rational rhs = 0;
        for (const KauffmanDiagram& k : diagrams)
          if (complementary_b(I, k)) rhs += immanant(k, X);
        const Rational lhs =
            plucker(Xbar, I) * plucker(Xbar, IndexTuple(sh, complement_set(I)));
        if (lhs != rhs) {
          detail = "mismatch at s=" + std::to_string(s);
          return false;
        }
      }
    }
  }
  return true;
}

// All reduced words of w via right descents.
void reduced_words(const std::vector<int>& im, std::vector<int>& acc,
                   std::vector<std::vector<int>>& out) {
  bool descent = false;
  for (size_t i = 0; i + 1 < im.size(); ++i)
    if (im[i] > im[i + 1]) {
      descent = true;
      std::vector<int> next = im;
      std::swap(next[i], next[i + 1]);
      acc.push_back(static_cast<int>(i) + 1);
      reduced_words(next, acc, out);
      acc.pop_back();
    }
  if (!descent) out.emplace_back(acc.rbegin(), acc.rend());
}

bool reduced_word_independence(std::string& detail) {
  std::vector<int> im{1, 2, 3, 4};
  do {
    std::vector<std::vector<int>> words;
    std::vector<int> acc;
    reduced_words(im, acc, words);
    const TLElement ref = word_image(4, words.front());
    if (!(ref == permutation_image(Permutation(4, im)))) {
      detail = "builtin word disagrees";
      return false;
    }
    for (const auto& word : words)
      if (!(word_image(4, word) == ref)) {
        detail = "word dependence found";
        return false;
      }
  } while (std::next_permutation(im.begin(), im.end()));
  return true;
}

bool symmetry_transport(std::string& detail) {
  // Complementary pairs on Gr(3,6): the cyclic shift and the reflection act
  // on subsets of [2s] and on diagram vertices simultaneously, carrying the
  // 0/1 certificate vector of Delta_I Delta_{I^c} onto the image pair's.
  const GrassmannShape sh(3, 3);
  const auto diagrams = enumerate_diagrams(3);
  int pairs = 0;
  for (const IndexTuple& I : all_tuples(sh)) {
    ++pairs;
    const IndexTuple sI = cyclic_shift_tuple(I, 1).sorted();
    const IndexTuple rI = reflect_tuple(I).sorted();
    for (const KauffmanDiagram& k : diagrams) {
      if (complementary_b(I, k) != complementary_b(sI, shift_diagram(k))) {
        detail = "shift b-vector mismatch";
        return false;
      }
      if (complementary_b(I, k) != complementary_b(rI, reflect_diagram(k))) {
        detail = "reflection b-vector mismatch";
        return false;
      }
    }
    // Compatible sets transport as whole families of diagrams.
    auto image = [&](const std::function<KauffmanDiagram(const KauffmanDiagram&)>& f) {
      std::vector<KauffmanDiagram> out;
      for (const KauffmanDiagram& k :
           compatible_set(I, IndexTuple(sh, complement_set(I))))
        out.push_back(f(k));
      std::sort(out.begin(), out.end());
      return out;
    };
    if (compatible_set(sI, IndexTuple(sh, complement_set(sI))) != image(shift_diagram) ||
        compatible_set(rI, IndexTuple(sh, complement_set(rI))) != image(reflect_diagram)) {
      detail = "compatible-set transport failed";
      return false;
    }
    // The transported expansion still evaluates exactly.
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const RationalMatrix X = random_rational_matrix(3, 3, 10000 + seed);
      const RationalMatrix Xbar = embed(X);
      Rational shift_sum = 0, refl_sum = 0;
      for (const KauffmanDiagram& k : diagrams) {
        if (complementary_b(I, k)) {
          shift_sum += immanant(shift_diagram(k), X);
          refl_sum += immanant(reflect_diagram(k), X);
        }
      }
      if (plucker(Xbar, sI) * plucker(Xbar, IndexTuple(sh, complement_set(sI))) != shift_sum ||
          plucker(Xbar, rI) * plucker(Xbar, IndexTuple(sh, complement_set(rI))) != refl_sum) {
        detail = "transported expansion mismatch";
        return false;
      }
    }
  }
  if (pairs != 20) {
    detail = "expected 20 complementary pairs";
    return false;
  }
  return true;
}

bool immanant_nonnegativity(std::string& detail) {
  for (int s = 1; s <= 4; ++s) {
    const auto diagrams = enumerate_diagrams(s);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const RationalMatrix M = tnn_sample(s, s, 11000 + seed);
      for (const KauffmanDiagram& k : diagrams)
        if (immanant(k, M) < 0) {
          detail = "negative immanant at s=" + std::to_string(s);
          return false;
        }
    }
  }
  return true;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  run(1, "Catalan diagram counts s=1..6", catalan_counts);
  run(2, "complementary product identity on 100 TNN samples", example_2_6);
  run(3, "n=3 telescoping family sizes, sharing, zero sum", example_3_5);
  run(4, "n=7 d=4 Laplace family on 20 TNN samples", example_3_7);
  run(5, "m=n=6 r=3 compatible sets and certificates", example_4_2);
  run(6, "forward sweep: all weakly separated pairs, m+n<=7", forward_sweep);
  run(7, "converse witnesses at eta=2,3 with shift/reflection orbits", converse_witnesses);
  run(8, "complementary-minor oracle identity, s<=4", oracle_identity);
  run(9, "reduced-word independence across S_4", reduced_word_independence);
  run(10, "certificate transport under shift and reflection", symmetry_transport);
  run(11, "immanant nonnegativity on 50 TNN samples, s<=4", immanant_nonnegativity);
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << 11 - failures << "/11, " << secs.count() << "s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
