#include "entropykit/poisson.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "entropykit/errors.hpp"
#include "entropykit/summation.hpp"
#include "series.hpp"

namespace entropykit {

Intensity::Intensity(double lambda, double max_lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("intensity must be a positive finite number, got " +
                      std::to_string(lambda));
  }
  if (lambda > max_lambda) {
    throw DomainError("intensity " + std::to_string(lambda) + " exceeds the maximum " +
                      std::to_string(max_lambda));
  }
  log_lambda_ = std::log(lambda);
}

std::size_t default_max_terms() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("ENTROPYKIT_MAX_TERMS")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxTerms;
  }();
  return cap;
}

namespace detail {

double stirlerr(std::size_t n) {
  // Exact to the digits shown (256-bit evaluation of lgamma(n+1) - ...).
  static constexpr std::array<double, 16> kSmall = {
      0.0,
      0.08106146679532725821967026,
      0.04134069595540929409382208,
      0.02767792568499833914878929,
      0.02079067210376509311152277,
      0.01664469118982119216319487,
      0.01387612882307074799874573,
      0.01189670994589177009505572,
      0.01041126526197209649747857,
      0.009255462182712732917728637,
      0.008330563433362871256469319,
      0.007573675487951840794972024,
      0.006942840107209529865664153,
      0.006408994188004207068439631,
      0.005951370112758847735624416,
      0.00555473355196280137103869,
  };
  if (n < kSmall.size()) return kSmall[n];

  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  constexpr double s5 = 691.0 / 360360.0;
  constexpr double s6 = 1.0 / 156.0;
  const double x = static_cast<double>(n);
  const double xx = x * x;
  if (n > 500) return (s0 - s1 / xx) / x;
  if (n > 80) return (s0 - (s1 - s2 / xx) / xx) / x;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / xx) / xx) / xx) / x;
  return (s0 - (s1 - (s2 - (s3 - (s4 - (s5 - s6 / xx) / xx) / xx) / xx) / xx) / xx) / x;
}

long double bd0(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    if (std::abs(s) < std::numeric_limits<double>::min()) return s;
    double ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
  }
  // Far from the mean the two halves cancel; the extended format keeps the
  // result within an ulp.
  const long double xl = x;
  const long double npl = np;
  return xl * std::log(xl / npl) + (npl - xl);
}

}  // namespace detail

double log_pmf(const Intensity& lambda, std::size_t k) {
  if (k == 0) return -lambda.value();
  const double x = static_cast<double>(k);
  const long double sum = -static_cast<long double>(detail::stirlerr(k)) -
                         detail::bd0(x, lambda.value()) -
                         0.5L * std::log(2 * std::numbers::pi_v<long double> * x);
  return static_cast<double>(sum);
}

double window_sum(const Intensity& lambda, std::size_t m, std::size_t n) {
  std::vector<double> logs;
  logs.reserve(n + 1);
  for (std::size_t k = m; k <= m + n; ++k) logs.push_back(log_pmf(lambda, k));
  return sum_exp(logs);
}

double upper_tail(const Intensity& lambda, std::size_t from) {
  // Stop once the certified remainder is below a quarter ulp of the
  // accumulated sum; the ratio bound needs k + 2 > lambda.
  constexpr double kRelStop = 0.25 * std::numeric_limits<double>::epsilon();
  const std::size_t cap = default_max_terms();
  std::vector<double> logs;
  CompensatedSum running;
  for (std::size_t k = from;; ++k) {
    const double lp = log_pmf(lambda, k);
    logs.push_back(lp);
    running.add(std::exp(lp));
    if (static_cast<double>(k) + 2.0 > lambda.value()) {
      const double rest = tail_bound(lambda, k);
      if (rest <= kRelStop * running.value() || rest == 0.0) break;
    }
    if (k - from > cap) throw TruncationError("upper tail exceeded the term cap");
  }
  return sum_exp(logs);
}

double tail_bound(const Intensity& lambda, std::size_t n) {
  const double next = static_cast<double>(n) + 2.0;
  if (!(next > lambda.value())) {
    throw DomainError("tail bound requires n + 2 > lambda (n = " + std::to_string(n) + ")");
  }
  return detail::geometric_tail(log_pmf(lambda, n + 1), lambda.value() / next);
}

std::size_t min_truncation_start(const Intensity& lambda) {
  return static_cast<std::size_t>(std::ceil(2.0 * lambda.value()));
}

std::size_t truncation_index(const Intensity& lambda, double eps, std::size_t max_terms) {
  detail::require_eps(eps);
  std::size_t n = min_truncation_start(lambda);
  while (tail_bound(lambda, n) > eps) {
    if (++n > max_terms) {
      throw TruncationError("truncation index exceeded " + std::to_string(max_terms));
    }
  }
  return n;
}

}  // namespace entropykit
