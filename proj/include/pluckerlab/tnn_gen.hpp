#pragma once

#include <cstdint>

#include "pluckerlab/matrix.hpp"

namespace pluckerlab {

// Deterministic, seedable generation of exact-rational TNN / TP test
// matrices. Same config -> bit-identical output.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n = 3;
  int m = 3;
  Rational parameter_bound = 3;  // max bidiagonal parameter, > 0
  Rational density = Rational(1, 2);  // probability a factor parameter is nonzero

  void validate() const {
    if (n < 1 || m < 1) throw std::invalid_argument("generator: sizes must be positive");
    if (parameter_bound <= 0) throw std::invalid_argument("generator: bound must be positive");
    if (density < 0 || density > 1) throw std::invalid_argument("generator: density in [0,1]");
  }
};

// TNN n x m matrix built from Whitney's factorization: a product of
// elementary lower bidiagonal factors (descending), a nonnegative diagonal,
// and upper bidiagonal factors (ascending), truncated to n x m.
RationalMatrix random_tnn(const GeneratorConfig& config);

// The s x s totally positive kernel q^{(j-k)^2}, 0 < q < 1.
RationalMatrix gaussian_like_tp(int s, const Rational& q);

// gaussian_like_tp(rows(X), q) * X; maps TNN Grassmannian points into the
// totally positive part.
RationalMatrix tp_perturb(const RationalMatrix& X, const Rational& q = Rational(1, 2));

// Every square minor nonnegative. Exponential; intended for dimensions <= 6.
bool is_tnn(const RationalMatrix& M);

// Copy of X with row b overwritten by row a (1-based).
RationalMatrix duplicated_row_point(const RationalMatrix& X, int a, int b);

// Arbitrary (signed) rational entries; no positivity structure. Used for
// polynomial-identity checks where TNN would be too special.
RationalMatrix random_rational_matrix(int rows, int cols, std::uint64_t seed);

}  // namespace pluckerlab
