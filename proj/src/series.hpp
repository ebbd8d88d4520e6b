#pragma once

// Certified truncation of positive-ratio series. Private to the library.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "entropykit/errors.hpp"
#include "entropykit/poisson.hpp"
#include "entropykit/summation.hpp"

namespace entropykit::detail {

// Relative slack applied to every geometric bound so that rounding in the
// first omitted term cannot push the bound below the true tail.
inline constexpr double kBoundSlack = 64 * std::numeric_limits<double>::epsilon();

// Bound on t_1 + t_2 + ... when t_1 = exp(log_first) and every ratio
// t_{j+1}/t_j is at most `ratio`. Infinite when the ratio gives no decay.
inline double geometric_tail(double log_first, double ratio) {
  if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
  if (log_first == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(log_first - std::log1p(-ratio)) * (1.0 + kBoundSlack);
}

inline void require_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw DomainError("eps must be a positive finite number");
  }
}

// Sums term(first..N) where N is the smallest index >= ceil(2 lambda) with
// tail_after(N) <= eps. tail_after(n) must bound |sum_{k>n} term_k|.
template <class Term, class Tail>
SeriesValue evaluate_series(const Intensity& lambda, std::size_t first, Term&& term,
                            Tail&& tail_after, double eps, std::size_t max_terms) {
  require_eps(eps);
  std::size_t n = min_truncation_start(lambda);
  double bound = tail_after(n);
  while (bound > eps) {
    if (++n > max_terms) {
      throw TruncationError("series truncation exceeded " + std::to_string(max_terms) +
                            " terms");
    }
    bound = tail_after(n);
  }

  std::vector<ScaledTerm> terms;
  if (n >= first) {
    terms.reserve(n - first + 1);
    for (std::size_t k = first; k <= n; ++k) terms.push_back(term(k));
  }
  const double value = sum_scaled(terms).value();
  if (!std::isfinite(value)) throw NumericalError("series value overflows binary64");
  return {value, n, bound};
}

}  // namespace entropykit::detail
