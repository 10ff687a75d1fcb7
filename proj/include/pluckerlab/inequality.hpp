#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "pluckerlab/diagram.hpp"
#include "pluckerlab/matrix.hpp"
#include "pluckerlab/tnn_gen.hpp"
#include "pluckerlab/weak_separation.hpp"

namespace pluckerlab {

// One exchange term of the oscillating system at fixed r.
struct TermSpec {
  IndexTuple Ikr;  // ordered: i_r replaced in place by j_k
  IndexTuple Jkr;  // ordered: j_k replaced in place by i_r
  bool subtract_base = false;  // true at k = eta - r + 1
};

// The r-th oscillating system for a pair (I, J): for l = 1..eta the signed
// partial sum sgn(I_{l,r}) sgn(J_{l,r}) (sum_{k<=l} D_{I_{k,r}} D_{J_{k,r}}
// - [l >= eta-r+1] D_I D_J). The l = eta row is the long Plucker relation
// and vanishes identically.
struct InequalitySystem {
  IndexTuple I, J;  // as given (evaluation uses them verbatim)
  SymDiffLayout layout;
  int r = 1;
  std::vector<TermSpec> terms;  // k = 1..eta
  std::vector<int> signs;       // l = 1..eta: sgn(I_{l,r}) * sgn(J_{l,r})
};

InequalitySystem build_system(const IndexTuple& I, const IndexTuple& J, int r);

// Signed partial sums for l = 1..eta on a (m+n) x m point X.
std::vector<Rational> evaluate_system(const InequalitySystem& sys, const RationalMatrix& X);

// Integer diagram-coefficient vector of the l-th signed partial sum. For
// homogeneous systems in the TL immanant space the scan is decisive: the
// inequality holds on the whole TNN region iff every coefficient is >= 0.
struct Certificate {
  int l = 0;
  std::map<KauffmanDiagram, Integer> coefficients;

  bool certified() const {
    for (const auto& [k, c] : coefficients)
      if (c < 0) return false;
    return true;
  }
};

Certificate certify(const InequalitySystem& sys, int l);

// The l = eta row vanishes identically: checks the full signed sum on
// random rational (not TNN) matrices and that its formal coefficient vector
// is zero.
bool long_plucker_check(const IndexTuple& I, const IndexTuple& J, int r,
                        std::uint64_t seed = 2026);

// Complementary family I(d,k) = [1,d] u [n+d+2,2n] u {n+d+1-k}, k = 0..n,
// in Gr(n, 2n); row l is (-1)^l sum_{k<=l} (-1)^k D_{I(d,k)} D_{I(d,k)^c}.
struct GeneralizedLaplaceSystem {
  int n = 0, d = 0;
  std::vector<IndexTuple> tuples;  // I(d,k) for k = 0..n, sorted
};

GeneralizedLaplaceSystem generalized_laplace_system(int n, int d);

// Rows l = 0..n evaluated at embed(A), A an n x n matrix.
std::vector<Rational> evaluate_laplace(const GeneralizedLaplaceSystem& sys,
                                       const RationalMatrix& A);

// Coefficient vector of row l via the complementary b_K indicators.
Certificate certify_laplace(const GeneralizedLaplaceSystem& sys, int l);

struct ViolationWitness {
  RationalMatrix X;  // (m+n) x m, all maximal minors >= 0
  int l = 0, r = 0;
  Rational value;  // the negative signed partial sum
};

struct SystemResult {
  int l = 0, r = 0;
  bool certified = false;
  std::map<KauffmanDiagram, Integer> coefficients;
  Rational min_value;  // over the sampled points
  std::optional<ViolationWitness> witness;
};

struct Report {
  IndexTuple I, J;
  bool ws = false;
  std::vector<SystemResult> results;
};

// Certify + sample every (l, r); samples drawn from the deterministic seed
// ladder config.seed, config.seed+1, ...
Report verify_theorem_A(const IndexTuple& I, const IndexTuple& J, int samples,
                        const GeneratorConfig& config);

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Witness search for non-weakly-separated pairs: certificate scan to target
// (l, r), then duplicated-row constructions, then the random seed ladder
// (each point also tried TP-perturbed). Returns nullopt for weakly separated
// input; throws BudgetExhausted when the ladder runs out.
std::optional<ViolationWitness> search_counterexample(const IndexTuple& I, const IndexTuple& J,
                                                      int budget, const GeneratorConfig& config);

}  // namespace pluckerlab
