#pragma once

// Brute-force reference values in 213-bit binary floating point. Every
// quantity is summed straight from its defining series with pmf terms built
// by the recurrence p_k = p_{k-1} lambda / k, sharing nothing with the
// library's log-space evaluation.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace entropykit::oracle {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>>;
static_assert(std::numeric_limits<Real>::digits >= 200);

/// max(10 lambda, 200) terms.
inline std::size_t term_count(double lambda) {
  return std::max<std::size_t>(static_cast<std::size_t>(std::ceil(10.0 * lambda)), 200);
}

/// p_0, ..., p_{count-1}.
inline std::vector<Real> pmf_table(double lambda, std::size_t count) {
  const Real lam(lambda);
  std::vector<Real> p(count);
  p[0] = exp(-lam);
  for (std::size_t k = 1; k < count; ++k) p[k] = p[k - 1] * lam / Real(k);
  return p;
}

inline std::vector<Real> pmf_table(double lambda) { return pmf_table(lambda, term_count(lambda)); }

/// log 0!, ..., log (count-1)!.
inline std::vector<Real> log_factorials(std::size_t count) {
  std::vector<Real> out(count);
  out[0] = 0;
  for (std::size_t k = 1; k < count; ++k) out[k] = out[k - 1] + log(Real(k));
  return out;
}

inline Real window_sum(double lambda, std::size_t m, std::size_t n) {
  const auto p = pmf_table(lambda, std::max(term_count(lambda), m + n + 1));
  Real s = 0;
  for (std::size_t k = m; k <= m + n; ++k) s += p[k];
  return s;
}

/// sum_{k>n} p_k.
inline Real tail_after(double lambda, std::size_t n) {
  const auto p = pmf_table(lambda, std::max(term_count(lambda), n + 200));
  Real s = 0;
  for (std::size_t k = n + 1; k < p.size(); ++k) s += p[k];
  return s;
}

/// -lambda log(lambda/e) + e^{-lambda} sum_{k>=2} lambda^k log(k!)/k!.
inline Real shannon(double lambda) {
  const Real lam(lambda);
  const auto p = pmf_table(lambda);
  const auto lf = log_factorials(p.size());
  Real s = -lam * (log(lam) - 1);
  for (std::size_t k = 2; k < p.size(); ++k) s += p[k] * lf[k];
  return s;
}

/// -sum p_k log p_k.
inline Real shannon_direct(double lambda) {
  Real s = 0;
  for (const Real& pk : pmf_table(lambda)) {
    if (pk > 0) s -= pk * log(pk);
  }
  return s;
}

inline Real shannon_prime(double lambda) {
  const Real lam(lambda);
  const auto p = pmf_table(lambda);
  Real s = -log(lam);
  for (std::size_t k = 1; k < p.size(); ++k) s += p[k] * log(Real(k + 1));
  return s;
}

inline Real shannon_second(double lambda) {
  const Real lam(lambda);
  const auto p = pmf_table(lambda);
  Real s = -1 / lam;
  for (std::size_t k = 0; k < p.size(); ++k) s += p[k] * log1p(1 / Real(k + 1));
  return s;
}

/// sum_k p_k^alpha. Terms decay like (lambda/k)^{alpha k}, so small alpha
/// needs far more than term_count(lambda) terms; sum until negligible.
inline Real psi(double alpha, double lambda) {
  const Real a(alpha);
  const Real lam(lambda);
  Real log_p = -lam;
  Real s = 0;
  for (std::size_t k = 0;; ++k) {
    if (k > 0) log_p += log(lam / Real(k));
    const Real t = exp(a * log_p);
    s += t;
    if (Real(k) > 2 * lam && t < s * Real(1e-45)) break;
  }
  return s;
}

inline Real renyi(double alpha, double lambda) {
  return log(psi(alpha, lambda)) / (1 - Real(alpha));
}

/// sum_k (k - lambda) lambda^{alpha k - 1} / (k!)^alpha, term by term.
inline Real r_statistic(double alpha, double lambda) {
  const Real a(alpha);
  const Real lam(lambda);
  const Real log_lam = log(lam);
  Real log_fact = 0;
  Real s = 0;
  Real scale = 0;
  for (std::size_t k = 0;; ++k) {
    if (k > 0) log_fact += log(Real(k));
    const Real t = (Real(k) - lam) * exp((a * Real(k) - 1) * log_lam - a * log_fact);
    s += t;
    scale = std::max(scale, Real(abs(t)));
    if (Real(k) > 2 * lam && abs(t) < scale * Real(1e-45)) break;
  }
  return s;
}

/// I_0(x) = sum_k (x/2)^{2k} / (k!)^2.
inline Real bessel_i0(double x) {
  const Real q = Real(x) * Real(x) / 4;
  Real term = 1;
  Real s = 1;
  for (std::size_t k = 1; k < 10000; ++k) {
    term *= q / (Real(k) * Real(k));
    s += term;
    if (term < s * Real(1e-70)) break;
  }
  return s;
}

inline Real log_factorial(std::uint64_t n) {
  Real s = 0;
  for (std::uint64_t k = 2; k <= n; ++k) s += log(Real(k));
  return s;
}

/// e^{-lambda} (log lambda)^{-1} sum_{k=1}^{floor(lambda/2)} lambda^k log(k+1)/k!.
inline Real s1_contribution(double lambda) {
  const auto m = static_cast<std::size_t>(std::floor(lambda / 2));
  const auto p = pmf_table(lambda, m + 1);
  Real s = 0;
  for (std::size_t k = 1; k <= m; ++k) s += p[k] * log(Real(k + 1));
  return s / log(Real(lambda));
}

/// e^{-lambda} (log lambda)^{-1} sum_{k>=1} lambda^k log(k+1)/k!.
inline Real statistic(double lambda) {
  const auto p = pmf_table(lambda);
  Real s = 0;
  for (std::size_t k = 1; k < p.size(); ++k) s += p[k] * log(Real(k + 1));
  return s / log(Real(lambda));
}

inline Real tail_fraction(double lambda) {
  const auto m = static_cast<std::size_t>(std::floor(lambda / 2));
  const auto p = pmf_table(lambda, m + 1);
  Real s = 0;
  for (const Real& pk : p) s += pk;
  return 1 - s;
}

inline double to_double(const Real& x) { return static_cast<double>(x); }

}  // namespace entropykit::oracle
