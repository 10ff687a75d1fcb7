#include "pluckerlab/inequality.hpp"

#include <algorithm>

#include "pluckerlab/parallel.hpp"
#include "pluckerlab/plucker.hpp"
#include "pluckerlab/prematching.hpp"
#include "pluckerlab/tl_algebra.hpp"

namespace pluckerlab {

InequalitySystem build_system(const IndexTuple& I, const IndexTuple& J, int r) {
  InequalitySystem sys;
  sys.I = I;
  sys.J = J;
  sys.layout = layout(I, J);
  const int eta = sys.layout.eta;
  if (eta == 0) throw std::invalid_argument("build_system: pair has empty symmetric difference");
  if (r < 1 || r > eta) throw std::out_of_range("build_system: r out of [1, eta]");
  sys.r = r;
  for (int k = 1; k <= eta; ++k) {
    auto [Ikr, Jkr] = exchange_pair(I, J, sys.layout, k, r);
    TermSpec t;
    t.subtract_base = (k == eta - r + 1);
    t.Ikr = std::move(Ikr);
    t.Jkr = std::move(Jkr);
    sys.signs.push_back(tuple_sign(t.Ikr) * tuple_sign(t.Jkr));
    sys.terms.push_back(std::move(t));
  }
  return sys;
}

std::vector<Rational> evaluate_system(const InequalitySystem& sys, const RationalMatrix& X) {
  const int eta = sys.layout.eta;
  const Rational base = plucker(X, sys.I) * plucker(X, sys.J);
  std::vector<Rational> out;
  Rational cum = 0;
  bool base_included = false;
  for (int l = 1; l <= eta; ++l) {
    const TermSpec& t = sys.terms[l - 1];
    cum += plucker(X, t.Ikr) * plucker(X, t.Jkr);
    if (t.subtract_base) base_included = true;
    out.push_back(Rational(sys.signs[l - 1]) * (base_included ? cum - base : cum));
  }
  return out;
}

Certificate certify(const InequalitySystem& sys, int l) {
  const int eta = sys.layout.eta;
  if (l < 1 || l > eta) throw std::out_of_range("certify: l out of [1, eta]");
  Certificate cert;
  cert.l = l;
  const Integer sign_l = sys.signs[l - 1];
  bool base_included = false;
  for (int k = 1; k <= l; ++k) {
    const TermSpec& t = sys.terms[k - 1];
    const Integer sk = sys.signs[k - 1];
    for (const KauffmanDiagram& kd : compatible_set(t.Ikr.sorted(), t.Jkr.sorted()))
      cert.coefficients[kd] += sign_l * sk;
    if (t.subtract_base) base_included = true;
  }
  if (base_included) {
    const Integer sb = Integer(tuple_sign(sys.I)) * tuple_sign(sys.J);
    for (const KauffmanDiagram& kd : compatible_set(sys.I.sorted(), sys.J.sorted()))
      cert.coefficients[kd] -= sign_l * sb;
  }
  for (auto it = cert.coefficients.begin(); it != cert.coefficients.end();)
    it = (it->second == 0) ? cert.coefficients.erase(it) : std::next(it);
  return cert;
}

bool long_plucker_check(const IndexTuple& I, const IndexTuple& J, int r, std::uint64_t seed) {
  const InequalitySystem sys = build_system(I, J, r);
  const int eta = sys.layout.eta;
  if (!certify(sys, eta).coefficients.empty()) return false;
  for (int t = 0; t < 3; ++t) {
    const RationalMatrix X =
        random_rational_matrix(I.shape.ambient(), I.shape.m, seed + static_cast<std::uint64_t>(t));
    if (evaluate_system(sys, X).back() != 0) return false;
  }
  return true;
}

GeneralizedLaplaceSystem generalized_laplace_system(int n, int d) {
  if (n < 2 || d < 1 || d >= n)
    throw std::out_of_range("generalized_laplace_system: need 1 <= d < n");
  GeneralizedLaplaceSystem sys;
  sys.n = n;
  sys.d = d;
  const GrassmannShape shape(n, n);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> entries;
    for (int x = 1; x <= d; ++x) entries.push_back(x);
    entries.push_back(n + d + 1 - k);
    for (int x = n + d + 2; x <= 2 * n; ++x) entries.push_back(x);
    std::sort(entries.begin(), entries.end());
    sys.tuples.emplace_back(shape, std::move(entries));
  }
  return sys;
}

std::vector<Rational> evaluate_laplace(const GeneralizedLaplaceSystem& sys,
                                       const RationalMatrix& A) {
  if (A.rows() != sys.n || A.cols() != sys.n)
    throw std::invalid_argument("evaluate_laplace: matrix must be n x n");
  const RationalMatrix Xbar = embed(A);
  std::vector<Rational> products;
  for (const IndexTuple& I : sys.tuples) {
    const IndexTuple Ic(I.shape, complement_set(I));
    products.push_back(plucker(Xbar, I) * plucker(Xbar, Ic));
  }
  std::vector<Rational> rows;
  Rational alt = 0;
  for (int l = 0; l <= sys.n; ++l) {
    alt += Rational((l % 2 == 0) ? 1 : -1) * products[l];
    rows.push_back(Rational((l % 2 == 0) ? 1 : -1) * alt);
  }
  return rows;
}

Certificate certify_laplace(const GeneralizedLaplaceSystem& sys, int l) {
  if (l < 0 || l > sys.n) throw std::out_of_range("certify_laplace: l out of [0, n]");
  Certificate cert;
  cert.l = l;
  const Integer sign_l = (l % 2 == 0) ? 1 : -1;
  for (const KauffmanDiagram& kd : enumerate_diagrams(sys.n)) {
    Integer c = 0;
    for (int k = 0; k <= l; ++k)
      if (complementary_b(sys.tuples[k], kd)) c += (k % 2 == 0) ? 1 : -1;
    c *= sign_l;
    if (c != 0) cert.coefficients.emplace(kd, c);
  }
  return cert;
}

namespace {

GeneratorConfig shaped_config(const GeneratorConfig& config, const GrassmannShape& shape,
                              std::uint64_t seed) {
  GeneratorConfig c = config;
  c.n = shape.n;
  c.m = shape.m;
  c.seed = seed;
  return c;
}

}  // namespace

Report verify_theorem_A(const IndexTuple& I, const IndexTuple& J, int samples,
                        const GeneratorConfig& config) {
  Report report;
  report.I = I;
  report.J = J;
  report.ws = is_weakly_separated(I, J);

  SymDiffLayout lay;
  try {
    lay = layout(I, J);
  } catch (const std::invalid_argument&) {
    return report;  // empty symmetric difference: no systems to check
  }
  const int eta = lay.eta;

  std::vector<InequalitySystem> systems;
  for (int r = 1; r <= eta; ++r) systems.push_back(build_system(I, J, r));

  std::vector<RationalMatrix> points(samples);
  parallel_for(samples, [&](int t) {
    points[t] = embed(random_tnn(
        shaped_config(config, I.shape, config.seed + static_cast<std::uint64_t>(t))));
  });
  // values[t][r-1] = the eta signed partial sums of system r at point t
  std::vector<std::vector<std::vector<Rational>>> values(samples);
  parallel_for(samples, [&](int t) {
    for (const InequalitySystem& sys : systems) values[t].push_back(evaluate_system(sys, points[t]));
  });

  for (int r = 1; r <= eta; ++r) {
    for (int l = 1; l <= eta; ++l) {
      SystemResult res;
      res.l = l;
      res.r = r;
      Certificate cert = certify(systems[r - 1], l);
      res.certified = cert.certified();
      res.coefficients = std::move(cert.coefficients);
      for (int t = 0; t < samples; ++t) {
        const Rational& v = values[t][r - 1][l - 1];
        if (t == 0 || v < res.min_value) res.min_value = v;
        if (v < 0 && !res.witness) res.witness = ViolationWitness{points[t], l, r, v};
      }
      report.results.push_back(std::move(res));
    }
  }
  return report;
}

std::optional<ViolationWitness> search_counterexample(const IndexTuple& I, const IndexTuple& J,
                                                      int budget, const GeneratorConfig& config) {
  if (is_weakly_separated(I, J)) return std::nullopt;

  const int eta = layout(I, J).eta;
  std::vector<InequalitySystem> systems;
  for (int r = 1; r <= eta; ++r) systems.push_back(build_system(I, J, r));

  // Certificate scan: the basis coefficients decide which rows can fail.
  std::vector<std::pair<int, int>> candidates;  // (l, r)
  for (int r = 1; r <= eta; ++r)
    for (int l = 1; l <= eta; ++l)
      if (!certify(systems[r - 1], l).certified()) candidates.emplace_back(l, r);
  if (candidates.empty())
    for (int r = 1; r <= eta; ++r)
      for (int l = 1; l <= eta; ++l) candidates.emplace_back(l, r);

  auto try_point = [&](const RationalMatrix& X) -> std::optional<ViolationWitness> {
    for (const auto& [l, r] : candidates) {
      const Rational v = evaluate_system(systems[r - 1], X)[l - 1];
      if (v < 0 && all_maximal_minors_nonnegative(X, I.shape))
        return ViolationWitness{X, l, r, v};
    }
    return std::nullopt;
  };

  for (int t = 0; t < budget; ++t) {
    const RationalMatrix X = embed(
        random_tnn(shaped_config(config, I.shape, config.seed + static_cast<std::uint64_t>(t))));
    if (auto w = try_point(X)) return w;
    // Adjacent-row duplication keeps all maximal minors nonnegative and
    // collapses exchange terms, driving the induction step of the converse.
    for (int a = 1; a < I.shape.ambient(); ++a) {
      if (auto w = try_point(duplicated_row_point(X, a, a + 1))) return w;
      if (auto w = try_point(duplicated_row_point(X, a + 1, a))) return w;
    }
    if (auto w = try_point(tp_perturb(X))) return w;
  }
  throw BudgetExhausted("search_counterexample: budget exhausted without witness");
}

}  // namespace pluckerlab
