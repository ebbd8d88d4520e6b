#pragma once

#include <cstdint>
#include <optional>

#include "entropykit/entropy.hpp"
#include "entropykit/poisson.hpp"

namespace entropykit {

/// Two-sided Stirling bounds on n!, kept as logarithms.
/// sqrt(2 pi n) (n/e)^n e^{1/(12n+1)} < n! < sqrt(2 pi n) (n/e)^n e^{1/(12n)}.
struct StirlingBounds {
  double log_lower = 0.0;
  double log_upper = 0.0;

  double lower() const;
  double upper() const;
};

/// Requires n > 1.
StirlingBounds stirling_bounds(std::uint64_t n);

/// floor(lambda / 2). Halving a binary64 value is exact, so the floor is too.
std::uint64_t half_floor(const Intensity& lambda);

/// e^{-lambda} (log lambda)^{-1} sum_{k>=1} lambda^k log(k+1)/k!, for lambda > 1.
/// Equals 1 + H_S'(lambda)/log(lambda).
double entropy_prime_statistic(const Intensity& lambda, double eps = kDefaultEps);
/// Same, with the truncation provenance.
SeriesValue entropy_prime_statistic_series(const Intensity& lambda, double eps = kDefaultEps);

/// The S_1 part of the statistic: e^{-lambda} (log lambda)^{-1}
/// sum_{k=1}^{floor(lambda/2)} lambda^k log(k+1)/k!.
double s1_contribution(const Intensity& lambda);

/// (2.1/e)^m sqrt(m) / (sqrt(2 pi) e^{1/(12m+1)}) with m = floor(lambda/2).
/// Bounds s1_contribution and the scaled partial exponential sum
/// e^{-lambda} sum_{k=1}^{m} lambda^k/k! for lambda > 42.
double s1_upper_bound(const Intensity& lambda);

/// 1 - e^{-lambda} sum_{k=0}^{floor(lambda/2)} lambda^k/k!.
double tail_fraction(const Intensity& lambda);

/// e^{-lambda} sum_{k=0}^{floor(lambda/2)} lambda^k/k!, i.e. 1 - tail_fraction,
/// kept separately because it underflows the resolution of tail_fraction.
double tail_fraction_complement(const Intensity& lambda);

/// Lower bound on the statistic assembled from the displayed inequalities:
/// (log(m+1)/log lambda) (1 - e^{-lambda} - s1_upper_bound(lambda)), lambda > 42.
double statistic_lower_bound(const Intensity& lambda);

struct AsymptoticReport {
  double lambda = 0.0;
  double statistic = 0.0;
  /// Present only for lambda > 42, where the bound is valid.
  std::optional<double> s1_bound;
  double tail_fraction = 0.0;
};

AsymptoticReport asymptotic_report(const Intensity& lambda, double eps = kDefaultEps);

}  // namespace entropykit
