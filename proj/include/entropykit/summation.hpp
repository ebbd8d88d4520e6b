#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace entropykit {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// A series term stored as exp(log_magnitude) * factor. Keeping the
/// magnitude in log-space lets terms spanning hundreds of orders of
/// magnitude be combined without overflow.
struct ScaledTerm {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  double factor = 1.0;
};

/// Sums terms after rescaling by the largest magnitude. Returns the result
/// split as exp(log_scale) * mantissa so callers can stay in log-space.
struct ScaledSum {
  double log_scale = -std::numeric_limits<double>::infinity();
  double mantissa = 0.0;

  double value() const noexcept {
    if (mantissa == 0.0) return 0.0;
    return std::exp(log_scale) * mantissa;
  }
};

inline ScaledSum sum_scaled(std::span<const ScaledTerm> terms) {
  ScaledSum out;
  for (const auto& t : terms) {
    if (t.factor != 0.0) out.log_scale = std::max(out.log_scale, t.log_magnitude);
  }
  if (!std::isfinite(out.log_scale)) return {};
  CompensatedSum acc;
  for (const auto& t : terms) {
    if (t.factor == 0.0) continue;
    acc.add(std::exp(t.log_magnitude - out.log_scale) * t.factor);
  }
  out.mantissa = acc.value();
  return out;
}

/// Sums exp(log_values[i]) scaled by the largest entry.
inline double sum_exp(std::span<const double> log_values) {
  if (log_values.empty()) return 0.0;
  const double top = *std::max_element(log_values.begin(), log_values.end());
  if (!std::isfinite(top)) return top > 0 ? top : 0.0;
  CompensatedSum acc;
  for (double l : log_values) acc.add(std::exp(l - top));
  return std::exp(top) * acc.value();
}

}  // namespace entropykit
