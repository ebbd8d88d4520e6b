#pragma once

#include <cstddef>

namespace entropykit {

inline constexpr double kDefaultMaxIntensity = 1e4;
inline constexpr std::size_t kDefaultMaxTerms = 10'000'000;

/// Poisson intensity, validated on construction: 0 < lambda <= max_lambda.
class Intensity {
 public:
  explicit Intensity(double lambda, double max_lambda = kDefaultMaxIntensity);

  double value() const noexcept { return lambda_; }
  double log() const noexcept { return log_lambda_; }

 private:
  double lambda_;
  double log_lambda_;
};

/// An evaluated infinite series truncated after `truncation_index`.
/// `tail_bound` is a certified upper bound on the magnitude of everything
/// that was omitted.
struct SeriesValue {
  double value = 0.0;
  std::size_t truncation_index = 0;
  double tail_bound = 0.0;
};

/// Hard cap on truncation indices. Reads ENTROPYKIT_MAX_TERMS once, falling
/// back to kDefaultMaxTerms when unset or unparsable.
std::size_t default_max_terms();

/// log P{X = k} for X ~ Poisson(lambda).
///
/// Uses Loader's saddle-point form -stirlerr(k) - bd0(k, lambda) -
/// log(2 pi k)/2, which keeps full relative accuracy where the naive
/// k log(lambda) - lambda - lgamma(k+1) cancels catastrophically.
double log_pmf(const Intensity& lambda, std::size_t k);

/// Sum of p_m, ..., p_{m+n}. Terms are scaled by the largest one and
/// accumulated with compensated summation.
double window_sum(const Intensity& lambda, std::size_t m, std::size_t n);

/// Sum of p_k for k >= from, accurate to full relative precision even when
/// the tail is tiny.
double upper_tail(const Intensity& lambda, std::size_t from);

/// Certified upper bound on sum_{k>n} p_k: p_{n+1} / (1 - lambda/(n+2)).
/// Requires n + 2 > lambda.
double tail_bound(const Intensity& lambda, std::size_t n);

/// ceil(2 lambda); every truncation scan starts here so that the pmf ratio
/// past the cut is below 1/2.
std::size_t min_truncation_start(const Intensity& lambda);

/// Smallest n >= ceil(2 lambda) with tail_bound(lambda, n) <= eps.
/// Throws TruncationError past max_terms.
std::size_t truncation_index(const Intensity& lambda, double eps,
                             std::size_t max_terms = default_max_terms());

namespace detail {
/// Stirling-series remainder log(n!) - (n + 1/2) log n + n - log(2 pi)/2.
double stirlerr(std::size_t n);
/// Loader's deviance term x log(x/np) + np - x, in extended precision.
long double bd0(double x, double np);
}  // namespace detail

}  // namespace entropykit
