#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pluckerlab/inequality.hpp"
#include "pluckerlab/plucker.hpp"
#include "pluckerlab/prematching.hpp"

using namespace pluckerlab;

namespace {

const GrassmannShape g66(6, 6);
const IndexTuple kI42(g66, {1, 2, 3, 4, 10, 11});
const IndexTuple kJ42(g66, {5, 6, 7, 8, 9, 11});

KauffmanDiagram diag(std::vector<std::pair<int, int>> edges) {
  return KauffmanDiagram::from_edges(static_cast<int>(edges.size()), edges);
}

}  // namespace

TEST_CASE("build_system reproduces the m = n = 6 long relation at r = 3") {
  const InequalitySystem sys = build_system(kI42, kJ42, 3);
  REQUIRE(sys.layout.eta == 5);
  CHECK(sys.layout.i_seq == std::vector<int>{10, 1, 2, 3, 4});
  for (int k = 1; k <= 5; ++k) {
    CHECK(sys.terms[k - 1].Ikr.sorted().entries ==
          std::vector<int>{1, 3, 4, 4 + k, 10, 11});
    CHECK(sys.terms[k - 1].subtract_base == (k == 3));  // eta - r + 1
  }
  CHECK_THROWS_AS(build_system(kI42, kJ42, 6), std::out_of_range);
}

TEST_CASE("weakly separated system holds on TNN points and closes at l = eta") {
  GeneratorConfig cfg;
  cfg.n = 6;
  cfg.m = 6;
  for (int r = 1; r <= 5; ++r) {
    const InequalitySystem sys = build_system(kI42, kJ42, r);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      cfg.seed = 60 + seed;
      const auto vals = evaluate_system(sys, embed(random_tnn(cfg)));
      REQUIRE(vals.size() == 5);
      for (const Rational& v : vals) CHECK(v >= 0);
      CHECK(vals.back() == 0);
    }
  }
}

TEST_CASE("certificates for the r = 3 system match the published diagrams") {
  const InequalitySystem sys = build_system(kI42, kJ42, 3);
  const KauffmanDiagram K1 = diag({{1, 8}, {2, 3}, {4, 7}, {5, 6}, {9, 10}, {11, 12}});
  const KauffmanDiagram K2 = diag({{1, 2}, {3, 8}, {4, 7}, {5, 6}, {9, 10}, {11, 12}});
  const KauffmanDiagram K3 = diag({{1, 2}, {3, 8}, {4, 5}, {6, 7}, {9, 10}, {11, 12}});
  const KauffmanDiagram K4 = diag({{1, 8}, {2, 3}, {4, 5}, {6, 7}, {9, 10}, {11, 12}});
  const KauffmanDiagram K5 = diag({{1, 6}, {2, 3}, {4, 5}, {7, 8}, {9, 10}, {11, 12}});
  const KauffmanDiagram K6 = diag({{1, 2}, {3, 6}, {4, 5}, {7, 8}, {9, 10}, {11, 12}});
  const KauffmanDiagram K7 = diag({{1, 6}, {2, 3}, {4, 5}, {7, 10}, {8, 9}, {11, 12}});
  const KauffmanDiagram K8 = diag({{1, 2}, {3, 6}, {4, 5}, {7, 10}, {8, 9}, {11, 12}});
  const std::vector<std::vector<KauffmanDiagram>> expected{
      {K1, K2}, {K3, K4}, {K5, K6}, {K7, K8}};
  for (int l = 1; l <= 4; ++l) {
    const Certificate c = certify(sys, l);
    CHECK(c.certified());
    REQUIRE(c.coefficients.size() == 2);
    for (const KauffmanDiagram& k : expected[l - 1]) {
      REQUIRE(c.coefficients.count(k) == 1);
      CHECK(c.coefficients.at(k) == 1);
    }
  }
  CHECK(certify(sys, 5).coefficients.empty());
}

TEST_CASE("long Plucker relation vanishes identically") {
  CHECK(long_plucker_check(kI42, kJ42, 3));
  const GrassmannShape g33(3, 3);
  CHECK(long_plucker_check(IndexTuple(g33, {1, 3, 5}), IndexTuple(g33, {2, 4, 6}), 2));
  const GrassmannShape g22(2, 2);
  CHECK(long_plucker_check(IndexTuple(g22, {1, 3}), IndexTuple(g22, {2, 4}), 1));
}

TEST_CASE("generalized Laplace tuples and rows") {
  const GeneralizedLaplaceSystem sys = generalized_laplace_system(7, 4);
  REQUIRE(sys.tuples.size() == 8);
  CHECK(sys.tuples[0].entries == std::vector<int>{1, 2, 3, 4, 12, 13, 14});
  CHECK(sys.tuples[7].entries == std::vector<int>{1, 2, 3, 4, 5, 13, 14});
  CHECK_THROWS_AS(generalized_laplace_system(3, 3), std::out_of_range);

  GeneratorConfig cfg;
  cfg.n = 7;
  cfg.m = 7;
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    cfg.seed = 30 + seed;
    const auto rows = evaluate_laplace(sys, random_tnn(cfg));
    REQUIRE(rows.size() == 8);
    for (const Rational& v : rows) CHECK(v >= 0);
    CHECK(rows.back() == 0);
  }
  // The final row is the long Plucker relation: zero even off the TNN cone.
  CHECK(evaluate_laplace(sys, random_rational_matrix(7, 7, 99)).back() == 0);
}

TEST_CASE("Laplace certificates are single unit diagrams") {
  const GeneralizedLaplaceSystem sys = generalized_laplace_system(3, 1);
  for (int l = 0; l <= 2; ++l) {
    const Certificate c = certify_laplace(sys, l);
    CHECK(c.certified());
    CHECK(c.coefficients.size() == 1);
    CHECK(c.coefficients.begin()->second == 1);
  }
  CHECK(certify_laplace(sys, 3).coefficients.empty());
}

TEST_CASE("shift-then-reflect maps the Laplace family to the interval form") {
  for (int n = 3; n <= 7; ++n)
    for (int d = 1; d < n; ++d) {
      const GeneralizedLaplaceSystem sys = generalized_laplace_system(n, d);
      for (int k = 0; k <= n; ++k) {
        const IndexTuple mapped =
            reflect_tuple(cyclic_shift_tuple(sys.tuples[k], 2 * n - d)).sorted();
        std::vector<int> expect;
        for (int x = 1; x <= n - 1; ++x) expect.push_back(x);
        expect.push_back(n + k);
        CHECK(mapped.entries == expect);
      }
    }
}

TEST_CASE("verify_theorem_A reports") {
  GeneratorConfig cfg;
  cfg.seed = 3;
  const Report good = verify_theorem_A(kI42, kJ42, 2, cfg);
  CHECK(good.ws);
  CHECK(good.results.size() == 25);
  for (const SystemResult& res : good.results) {
    CHECK(res.certified);
    CHECK(res.min_value >= 0);
    CHECK(!res.witness);
  }
  const GrassmannShape g22(2, 2);
  const Report bad = verify_theorem_A(IndexTuple(g22, {1, 3}), IndexTuple(g22, {2, 4}), 8, cfg);
  CHECK_FALSE(bad.ws);
  bool some_uncertified = false;
  for (const SystemResult& res : bad.results) some_uncertified |= !res.certified;
  CHECK(some_uncertified);
  // Identical pair: nothing to check.
  const Report empty = verify_theorem_A(kI42, kI42, 1, cfg);
  CHECK(empty.ws);
  CHECK(empty.results.empty());
}

TEST_CASE("search finds exact witnesses for the non-separated pairs") {
  GeneratorConfig cfg;
  cfg.seed = 1;
  const GrassmannShape g22(2, 2);
  const auto w1 =
      search_counterexample(IndexTuple(g22, {1, 3}), IndexTuple(g22, {2, 4}), 50, cfg);
  REQUIRE(w1.has_value());
  CHECK(w1->value < 0);
  CHECK(all_maximal_minors_nonnegative(w1->X, g22));
  CHECK(evaluate_system(build_system(IndexTuple(g22, {1, 3}), IndexTuple(g22, {2, 4}), w1->r),
                        w1->X)[w1->l - 1] == w1->value);

  const GrassmannShape g33(3, 3);
  const auto w2 =
      search_counterexample(IndexTuple(g33, {1, 3, 5}), IndexTuple(g33, {2, 4, 6}), 100, cfg);
  REQUIRE(w2.has_value());
  CHECK(w2->value < 0);
  CHECK(all_maximal_minors_nonnegative(w2->X, g33));

  // Weakly separated input short-circuits.
  CHECK_FALSE(search_counterexample(kI42, kJ42, 1, cfg).has_value());
  // Exhausted ladder is an explicit error.
  GeneratorConfig tiny = cfg;
  CHECK_THROWS_AS(
      search_counterexample(IndexTuple(g22, {1, 3}), IndexTuple(g22, {2, 4}), 0, tiny),
      BudgetExhausted);
}
