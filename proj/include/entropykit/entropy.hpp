#pragma once

#include "entropykit/poisson.hpp"

namespace entropykit {

inline constexpr double kDefaultEps = 1e-12;
inline constexpr double kNearOneBand = 1e-6;

/// Renyi order alpha > 0. Orders with |alpha - 1| < band_width are flagged
/// near-one; Renyi evaluation there delegates to Shannon entropy.
class RenyiOrder {
 public:
  explicit RenyiOrder(double alpha, double band_width = kNearOneBand);

  double value() const noexcept { return alpha_; }
  bool near_one() const noexcept { return near_one_; }

 private:
  double alpha_;
  bool near_one_;
};

/// An entropy (or derivative) in nats together with the series it came
/// from. `series.value` is the raw infinite-series part before any closed
/// form terms were added.
struct EntropyValue {
  double value = 0.0;
  SeriesValue series;
};

/// H_S(lambda) = -lambda log(lambda/e) + e^{-lambda} sum_{k>=2} lambda^k log(k!)/k!.
///
/// The tail of the sum is certified with the exact term ratio
/// (lambda/(k+1)) * log((k+1)!)/log(k!), which is decreasing for k >= 2, so
/// its value at the first omitted index bounds every later ratio.
EntropyValue shannon_entropy(const Intensity& lambda, double eps = kDefaultEps);

/// H_S'(lambda) = -log(lambda) + e^{-lambda} sum_{k>=1} lambda^k log(k+1)/k!.
EntropyValue shannon_prime(const Intensity& lambda, double eps = kDefaultEps);

/// H_S''(lambda) = -1/lambda + e^{-lambda} sum_{k>=0} lambda^k log(1 + 1/(k+1))/k!.
EntropyValue shannon_second(const Intensity& lambda, double eps = kDefaultEps);

/// psi(alpha, lambda) = sum_k p_k(lambda)^alpha.
SeriesValue psi(const RenyiOrder& alpha, const Intensity& lambda, double eps = kDefaultEps);

/// H_R^alpha(lambda) = log(psi(alpha, lambda)) / (1 - alpha), or H_S inside
/// the near-one band. The tail bound refers to the entropy itself.
EntropyValue renyi_entropy(const RenyiOrder& alpha, const Intensity& lambda,
                           double eps = kDefaultEps);

/// R(alpha, lambda) = sum_k (k - lambda) lambda^{alpha k - 1} / (k!)^alpha.
///
/// Evaluated as e^{alpha lambda} sum_j p_j^alpha (((j+1)/lambda)^{1-alpha} - 1),
/// which pairs the k = j+1 term of the positive part with the k = j term of
/// the negative part. At alpha = 1 every paired term is exactly zero.
SeriesValue r_statistic(const RenyiOrder& alpha, const Intensity& lambda,
                        double eps = kDefaultEps);

}  // namespace entropykit
