#include "pluckerlab/tnn_gen.hpp"

#include <random>

namespace pluckerlab {

namespace {

// Seed schedule: std::mt19937_64 seeded directly with config.seed. A
// parameter draw takes one "keep" coin (uniform in [0, DENSITY_DEN) against
// density * DENSITY_DEN) followed, when kept, by numerator/denominator
// integers giving a ratio in (0, bound].
constexpr std::uint64_t kDensityDen = 1u << 20;

class ParamDraw {
 public:
  explicit ParamDraw(const GeneratorConfig& cfg)
      : rng_(cfg.seed),
        bound_(cfg.parameter_bound),
        keep_threshold_(static_cast<std::uint64_t>(
            mpz_class(cfg.density.get_num() * kDensityDen / cfg.density.get_den()).get_ui())) {}

  // Zero with probability ~ 1 - density, else a rational in (0, bound].
  Rational sparse() {
    if (coin_(rng_) % kDensityDen >= keep_threshold_) return 0;
    return positive();
  }

  // Always a rational in (0, bound].
  Rational positive() {
    const long num = static_cast<long>(coin_(rng_) % 64) + 1;
    const long den = static_cast<long>(coin_(rng_) % 64) + 1;
    Rational r = rat(num, den);
    if (r > bound_) r = bound_ / r;  // fold back into (0, bound]
    return r;
  }

 private:
  std::mt19937_64 rng_;
  Rational bound_;
  std::uint64_t keep_threshold_;
  std::uniform_int_distribution<std::uint64_t> coin_;
};

// row i <- row i + c * row (i-1), 1-based, applied in place.
void add_row_multiple(RationalMatrix& M, int i, const Rational& c) {
  for (int j = 0; j < M.cols(); ++j) M(i - 1, j) += c * M(i - 2, j);
}

// col j <- col j + c * col (j-1), 1-based.
void add_col_multiple(RationalMatrix& M, int j, const Rational& c) {
  for (int i = 0; i < M.rows(); ++i) M(i, j - 1) += c * M(i, j - 2);
}

}  // namespace

RationalMatrix random_tnn(const GeneratorConfig& config) {
  config.validate();
  ParamDraw draw(config);
  const int s = std::max(config.n, config.m);
  RationalMatrix M(s, s);
  for (int i = 0; i < s; ++i) M(i, i) = draw.positive();
  // Lower factors descending, then upper factors ascending; each sweep
  // repeated twice so dense minors can be strictly positive.
  for (int pass = 0; pass < 2; ++pass)
    for (int i = s; i >= 2; --i) add_row_multiple(M, i, draw.sparse());
  for (int pass = 0; pass < 2; ++pass)
    for (int j = 2; j <= s; ++j) add_col_multiple(M, j, draw.sparse());
  RationalMatrix out(config.n, config.m);
  for (int i = 0; i < config.n; ++i)
    for (int j = 0; j < config.m; ++j) out(i, j) = M(i, j);
  return out;
}

RationalMatrix gaussian_like_tp(int s, const Rational& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("gaussian_like_tp: q must be in (0,1)");
  if (s < 1) throw std::invalid_argument("gaussian_like_tp: size must be positive");
  RationalMatrix G(s, s);
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) {
      const long d = j - k;
      G(j, k) = rat_pow(q, static_cast<unsigned long>(d * d));
    }
  return G;
}

RationalMatrix tp_perturb(const RationalMatrix& X, const Rational& q) {
  return matmul(gaussian_like_tp(X.rows(), q), X);
}

namespace {
bool next_subset(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - 1 - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace

bool is_tnn(const RationalMatrix& M) {
  const int maxk = std::min(M.rows(), M.cols());
  for (int k = 1; k <= maxk; ++k) {
    std::vector<int> rows(k), cols0(k);
    for (int i = 0; i < k; ++i) rows[i] = i + 1;
    do {
      std::vector<int> cols(k);
      for (int i = 0; i < k; ++i) cols[i] = i + 1;
      do {
        if (det(submatrix(M, rows, cols)) < 0) return false;
      } while (next_subset(cols, M.cols()));
    } while (next_subset(rows, M.rows()));
  }
  return true;
}

RationalMatrix random_rational_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  RationalMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = rat(num(rng), den(rng));
  return out;
}

RationalMatrix duplicated_row_point(const RationalMatrix& X, int a, int b) {
  if (a < 1 || a > X.rows() || b < 1 || b > X.rows())
    throw std::out_of_range("duplicated_row_point: row index out of bounds");
  RationalMatrix out = X;
  for (int j = 0; j < X.cols(); ++j) out(b - 1, j) = X(a - 1, j);
  return out;
}

}  // namespace pluckerlab
