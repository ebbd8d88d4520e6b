#include "entropykit/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entropykit/errors.hpp"
#include "entropykit/summation.hpp"
#include "series.hpp"

namespace entropykit {

RenyiOrder::RenyiOrder(double alpha, double band_width) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("Renyi order must be a positive finite number, got " +
                      std::to_string(alpha));
  }
  near_one_ = std::abs(alpha - 1.0) < band_width;
}

namespace {

double plus(double a, double b) {
  CompensatedSum s;
  s.add(a);
  s.add(b);
  return s.value();
}

}  // namespace

EntropyValue shannon_entropy(const Intensity& lambda, double eps) {
  const double lam = lambda.value();
  // log(k!) for k >= 2 is positive, so log(log(k!)) is defined.
  auto term = [&](std::size_t k) {
    return ScaledTerm{log_pmf(lambda, k) + std::log(std::lgamma(k + 1.0)), 1.0};
  };
  auto tail_after = [&](std::size_t n) {
    const std::size_t m = std::max<std::size_t>(n + 1, 2);
    const double mm = static_cast<double>(m);
    const double ratio = lam / (mm + 1.0) * (std::lgamma(mm + 2.0) / std::lgamma(mm + 1.0));
    return detail::geometric_tail(term(m).log_magnitude, ratio);
  };
  const SeriesValue s =
      detail::evaluate_series(lambda, 2, term, tail_after, eps, default_max_terms());
  return {plus(lam * (1.0 - lambda.log()), s.value), s};
}

EntropyValue shannon_prime(const Intensity& lambda, double eps) {
  const double lam = lambda.value();
  auto term = [&](std::size_t k) {
    return ScaledTerm{log_pmf(lambda, k) + std::log(std::log1p(static_cast<double>(k))), 1.0};
  };
  auto tail_after = [&](std::size_t n) {
    const std::size_t m = std::max<std::size_t>(n + 1, 1);
    const double mm = static_cast<double>(m);
    const double ratio = lam / (mm + 1.0) * (std::log(mm + 2.0) / std::log(mm + 1.0));
    return detail::geometric_tail(term(m).log_magnitude, ratio);
  };
  const SeriesValue s =
      detail::evaluate_series(lambda, 1, term, tail_after, eps, default_max_terms());
  return {plus(-lambda.log(), s.value), s};
}

EntropyValue shannon_second(const Intensity& lambda, double eps) {
  const double lam = lambda.value();
  auto term = [&](std::size_t k) {
    const double kk = static_cast<double>(k);
    return ScaledTerm{log_pmf(lambda, k) + std::log(std::log1p(1.0 / (kk + 1.0))), 1.0};
  };
  // log(1 + 1/(k+2)) < log(1 + 1/(k+1)), so lambda/(k+1) bounds the ratio.
  auto tail_after = [&](std::size_t n) {
    const std::size_t m = n + 1;
    return detail::geometric_tail(term(m).log_magnitude, lam / (static_cast<double>(m) + 1.0));
  };
  const SeriesValue s =
      detail::evaluate_series(lambda, 0, term, tail_after, eps, default_max_terms());
  return {plus(-1.0 / lam, s.value), s};
}

SeriesValue psi(const RenyiOrder& alpha, const Intensity& lambda, double eps) {
  const double a = alpha.value();
  const double lam = lambda.value();
  auto term = [&](std::size_t k) { return ScaledTerm{a * log_pmf(lambda, k), 1.0}; };
  auto tail_after = [&](std::size_t n) {
    const std::size_t m = n + 1;
    const double ratio = std::pow(lam / (static_cast<double>(m) + 1.0), a);
    return detail::geometric_tail(term(m).log_magnitude, ratio);
  };
  return detail::evaluate_series(lambda, 0, term, tail_after, eps, default_max_terms());
}

EntropyValue renyi_entropy(const RenyiOrder& alpha, const Intensity& lambda, double eps) {
  if (alpha.near_one()) return shannon_entropy(lambda, eps);
  detail::require_eps(eps);

  // |log(psi) - log(psi_N)| <= tail / psi_N because every term is positive.
  const double gap = std::abs(1.0 - alpha.value());
  SeriesValue s = psi(alpha, lambda, eps * gap);
  double bound = s.tail_bound / (s.value * gap);
  if (bound > eps) {
    s = psi(alpha, lambda, eps * gap * s.value);
    bound = s.tail_bound / (s.value * gap);
  }
  const double h = std::log(s.value) / (1.0 - alpha.value());
  return {h, {s.value, s.truncation_index, bound}};
}

SeriesValue r_statistic(const RenyiOrder& alpha, const Intensity& lambda, double eps) {
  const double a = alpha.value();
  const double lam = lambda.value();
  const double log_lam = lambda.log();
  // b_j = lambda^{alpha j} / (j!)^alpha = e^{alpha lambda} p_j^alpha.
  auto log_b = [&](std::size_t j) { return a * (log_pmf(lambda, j) + lam); };
  auto term = [&](std::size_t j) {
    const double x = std::log(static_cast<double>(j) + 1.0) - log_lam;
    return ScaledTerm{log_b(j), std::expm1((1.0 - a) * x)};
  };
  // Past 2 lambda, (j+1)/lambda >= 1: for alpha >= 1 the factor lies in
  // (-1, 0]; for alpha < 1 it lies in [0, ((j+1)/lambda)^{1-alpha}).
  auto tail_after = [&](std::size_t n) {
    const std::size_t m = n + 1;
    const double mm = static_cast<double>(m);
    double ratio = std::pow(lam / (mm + 1.0), a);
    double log_first = log_b(m);
    if (a < 1.0) {
      log_first += (1.0 - a) * (std::log(mm + 1.0) - log_lam);
      ratio *= std::pow((mm + 2.0) / (mm + 1.0), 1.0 - a);
    }
    return detail::geometric_tail(log_first, ratio);
  };
  return detail::evaluate_series(lambda, 0, term, tail_after, eps, default_max_terms());
}

}  // namespace entropykit
