#include "entropykit/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entropykit/errors.hpp"
#include "entropykit/summation.hpp"
#include "series.hpp"

namespace entropykit {

namespace {

// The bound needs floor(lambda/2) >= lambda/2.1, which holds past 42.
constexpr double kS1Threshold = 42.0;
constexpr double kShrink = 2.1;

void require_s1_range(const Intensity& lambda, const char* what) {
  if (!(lambda.value() > kS1Threshold)) {
    throw DomainError(std::string(what) + " requires lambda > 42, got " +
                      std::to_string(lambda.value()));
  }
}

}  // namespace

double StirlingBounds::lower() const { return std::exp(log_lower); }
double StirlingBounds::upper() const { return std::exp(log_upper); }

StirlingBounds stirling_bounds(std::uint64_t n) {
  if (n <= 1) throw DomainError("Stirling bounds require n > 1");
  const double x = static_cast<double>(n);
  const double base = 0.5 * std::log(2 * std::numbers::pi * x) + x * (std::log(x) - 1.0);
  return {base + 1.0 / (12.0 * x + 1.0), base + 1.0 / (12.0 * x)};
}

std::uint64_t half_floor(const Intensity& lambda) {
  return static_cast<std::uint64_t>(std::floor(lambda.value() * 0.5));
}

SeriesValue entropy_prime_statistic_series(const Intensity& lambda, double eps) {
  if (!(lambda.value() > 1.0)) {
    throw DomainError("entropy_prime_statistic requires lambda > 1, got " +
                      std::to_string(lambda.value()));
  }
  // The series part of H_S' is exactly the numerator of the statistic.
  const double log_lam = lambda.log();
  const SeriesValue s = shannon_prime(lambda, eps * log_lam).series;
  return {s.value / log_lam, s.truncation_index, s.tail_bound / log_lam};
}

double entropy_prime_statistic(const Intensity& lambda, double eps) {
  return entropy_prime_statistic_series(lambda, eps).value;
}

double s1_contribution(const Intensity& lambda) {
  const std::uint64_t m = half_floor(lambda);
  if (m == 0) return 0.0;
  std::vector<double> logs;
  logs.reserve(m);
  for (std::uint64_t k = 1; k <= m; ++k) {
    logs.push_back(log_pmf(lambda, k) + std::log(std::log1p(static_cast<double>(k))));
  }
  return sum_exp(logs) / lambda.log();
}

double s1_upper_bound(const Intensity& lambda) {
  require_s1_range(lambda, "s1_upper_bound");
  const double m = static_cast<double>(half_floor(lambda));
  const double log_bound = m * (std::log(kShrink) - 1.0) + 0.5 * std::log(m) -
                           0.5 * std::log(2 * std::numbers::pi) - 1.0 / (12.0 * m + 1.0);
  return std::exp(log_bound);
}

double tail_fraction(const Intensity& lambda) {
  // Sum whichever side is smaller, so the result carries full accuracy.
  const double head = tail_fraction_complement(lambda);
  return head < 0.5 ? 1.0 - head : upper_tail(lambda, half_floor(lambda) + 1);
}

double tail_fraction_complement(const Intensity& lambda) {
  return window_sum(lambda, 0, half_floor(lambda));
}

double statistic_lower_bound(const Intensity& lambda) {
  require_s1_range(lambda, "statistic_lower_bound");
  const double m = static_cast<double>(half_floor(lambda));
  return std::log1p(m) / lambda.log() *
         (1.0 - std::exp(-lambda.value()) - s1_upper_bound(lambda));
}

AsymptoticReport asymptotic_report(const Intensity& lambda, double eps) {
  AsymptoticReport r;
  r.lambda = lambda.value();
  r.statistic = entropy_prime_statistic(lambda, eps);
  if (lambda.value() > kS1Threshold) r.s1_bound = s1_upper_bound(lambda);
  r.tail_fraction = tail_fraction(lambda);
  return r;
}

}  // namespace entropykit
