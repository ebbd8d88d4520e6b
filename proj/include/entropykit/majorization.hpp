#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "entropykit/poisson.hpp"

namespace entropykit {

inline constexpr double kDefaultMajorizationTol = 1e-14;
/// Tolerance used for the Poisson majorization certificates; matches the
/// accuracy to which a window plus its remainder sums to one.
inline constexpr double kCertificateTol = 1e-12;

/// The n+1 largest pmf values. For Poisson these always sit at consecutive
/// indices start, ..., start + n; `values` holds them sorted nonincreasing
/// and `remainder` is the probability mass outside the window.
struct Window {
  std::size_t start = 0;
  std::vector<double> values;
  double remainder = 0.0;

  std::size_t length() const noexcept { return values.size(); }
  /// values followed by remainder, the vector fed to majorization checks.
  std::vector<double> extended() const;
};

/// Geometric mean of m+1, ..., m+n+1: the intensity at which the best
/// length-(n+1) window moves from start m to m+1.
double window_threshold(std::size_t m, std::size_t n);

/// Start index of the heaviest window of length n+1: the smallest m with
/// lambda <= window_threshold(m, n). At a threshold both neighbouring
/// windows carry equal mass and the smaller start is returned.
std::size_t window_start(const Intensity& lambda, std::size_t n);

Window rearranged_prefix(const Intensity& lambda, std::size_t n);

/// Sum of the n+1 largest pmf values.
double partial_sum(const Intensity& lambda, std::size_t n);

/// 1 - partial_sum(lambda, n), summed directly from the mass outside the
/// window. Stays resolvable when partial_sum rounds to 1.
double partial_sum_complement(const Intensity& lambda, std::size_t n);

struct MajorizationVerdict {
  bool sorted_a = false;
  bool sorted_b = false;
  /// Number of leading prefixes (out of length - 1) on which a dominates b.
  std::size_t prefix_dominance_upto = 0;
  bool sums_equal = false;
  /// Every proper prefix of a strictly exceeds the matching prefix of b.
  bool strict = false;
  bool majorizes = false;
};

/// Tests whether descending `a` majorizes descending `b`. Prefix sums are
/// compared with relative slack `tol`, total sums for equality within `tol`.
MajorizationVerdict check_majorization(std::span<const double> a, std::span<const double> b,
                                       double tol = kDefaultMajorizationTol);

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// sum f(a_k) - sum f(b_k). Nonnegative for convex f, nonpositive for
/// concave f. Throws DomainError unless a majorizes b and every entry
/// lies in `domain`.
double karamata_gap(const std::function<double(double)>& f, std::span<const double> a,
                    std::span<const double> b, Interval domain = {},
                    double tol = kDefaultMajorizationTol);

/// Window length for comparing the extended rearranged vectors at two
/// intensities: starts at ceil(2 max(l1, l2)) + 20 and grows until both
/// windows begin at index 0 and their last value is at least the remainder.
std::size_t certificate_length(const Intensity& l1, const Intensity& l2);

/// check_majorization on the extended rearranged vectors at l1 and l2.
MajorizationVerdict majorization_certificate(const Intensity& l1, const Intensity& l2,
                                             std::size_t n, double tol = kCertificateTol);

}  // namespace entropykit
