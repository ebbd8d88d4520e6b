#include "entropykit/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "entropykit/errors.hpp"
#include "entropykit/summation.hpp"

namespace entropykit {

namespace {

// Mass below and above the window [start, start + n], each part summed
// directly so that a tiny remainder keeps its relative accuracy.
double outside_mass(const Intensity& lambda, std::size_t start, std::size_t n) {
  CompensatedSum rest;
  if (start > 0) rest.add(window_sum(lambda, 0, start - 1));
  rest.add(upper_tail(lambda, start + n + 1));
  return rest.value();
}

}  // namespace

std::vector<double> Window::extended() const {
  std::vector<double> out = values;
  out.push_back(remainder);
  return out;
}

double window_threshold(std::size_t m, std::size_t n) {
  if (n == 0) return static_cast<double>(m + 1);
  CompensatedSum logs;
  for (std::size_t i = 1; i <= n + 1; ++i) logs.add(std::log(static_cast<double>(m + i)));
  return std::exp(logs.value() / static_cast<double>(n + 1));
}

std::size_t window_start(const Intensity& lambda, std::size_t n) {
  const double lam = lambda.value();
  // m + 1 <= c_m <= m + n + 1 brackets the answer.
  const double lo_guess = std::floor(lam) - static_cast<double>(n) - 1.0;
  std::size_t lo = lo_guess > 0 ? static_cast<std::size_t>(lo_guess) : 0;
  std::size_t hi = static_cast<std::size_t>(std::ceil(lam));
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lam <= window_threshold(mid, n)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Window rearranged_prefix(const Intensity& lambda, std::size_t n) {
  Window w;
  w.start = window_start(lambda, n);
  w.values.reserve(n + 1);
  for (std::size_t k = w.start; k <= w.start + n; ++k) w.values.push_back(std::exp(log_pmf(lambda, k)));
  std::sort(w.values.begin(), w.values.end(), std::greater<>());

  w.remainder = outside_mass(lambda, w.start, n);
  return w;
}

double partial_sum(const Intensity& lambda, std::size_t n) {
  const std::size_t start = window_start(lambda, n);
  // Near 1 the window sum carries an ulp of summation noise; subtracting the
  // small outside mass instead rounds correctly and keeps S_n monotone.
  const double outside = outside_mass(lambda, start, n);
  return outside < 0.5 ? 1.0 - outside : window_sum(lambda, start, n);
}

double partial_sum_complement(const Intensity& lambda, std::size_t n) {
  return outside_mass(lambda, window_start(lambda, n), n);
}

MajorizationVerdict check_majorization(std::span<const double> a, std::span<const double> b,
                                       double tol) {
  if (a.size() != b.size()) {
    throw DomainError("majorization needs equal lengths, got " + std::to_string(a.size()) +
                      " and " + std::to_string(b.size()));
  }
  if (a.empty()) throw DomainError("majorization needs nonempty vectors");

  MajorizationVerdict v;
  v.sorted_a = std::is_sorted(a.begin(), a.end(), std::greater<>());
  v.sorted_b = std::is_sorted(b.begin(), b.end(), std::greater<>());

  CompensatedSum pa;
  CompensatedSum pb;
  bool dominating = true;
  bool strict = true;
  const std::size_t len = a.size();
  for (std::size_t i = 0; i + 1 < len; ++i) {
    pa.add(a[i]);
    pb.add(b[i]);
    const double sa = pa.value();
    const double sb = pb.value();
    const double slack = tol * std::max(std::abs(sa), std::abs(sb));
    if (dominating && sa >= sb - slack) {
      ++v.prefix_dominance_upto;
    } else {
      dominating = false;
    }
    if (!(sa > sb)) strict = false;
  }
  pa.add(a[len - 1]);
  pb.add(b[len - 1]);
  const double ta = pa.value();
  const double tb = pb.value();
  v.sums_equal = std::abs(ta - tb) <= tol * std::max({std::abs(ta), std::abs(tb), 1.0});
  v.majorizes = v.sorted_a && v.sorted_b && v.sums_equal && dominating;
  v.strict = v.majorizes && strict;
  return v;
}

double karamata_gap(const std::function<double(double)>& f, std::span<const double> a,
                    std::span<const double> b, Interval domain, double tol) {
  const MajorizationVerdict v = check_majorization(a, b, tol);
  if (!v.majorizes) throw DomainError("karamata_gap: first vector does not majorize the second");
  const auto outside = [&](double x) { return !domain.contains(x); };
  if (std::any_of(a.begin(), a.end(), outside) || std::any_of(b.begin(), b.end(), outside)) {
    throw DomainError("karamata_gap: entry outside the function's interval");
  }
  CompensatedSum gap;
  for (double x : a) gap.add(f(x));
  for (double x : b) gap.add(-f(x));
  return gap.value();
}

namespace {

bool certifiable(const Intensity& lambda, std::size_t n) {
  if (window_start(lambda, n) != 0) return false;
  const Window w = rearranged_prefix(lambda, n);
  return w.values.back() >= w.remainder;
}

}  // namespace

std::size_t certificate_length(const Intensity& l1, const Intensity& l2) {
  const double top = std::max(l1.value(), l2.value());
  std::size_t n = static_cast<std::size_t>(std::ceil(2.0 * top)) + 20;
  const std::size_t cap = default_max_terms();
  while (!(certifiable(l1, n) && certifiable(l2, n))) {
    if (++n > cap) throw TruncationError("no certificate length below the term cap");
  }
  return n;
}

MajorizationVerdict majorization_certificate(const Intensity& l1, const Intensity& l2,
                                             std::size_t n, double tol) {
  const std::vector<double> a = rearranged_prefix(l1, n).extended();
  const std::vector<double> b = rearranged_prefix(l2, n).extended();
  return check_majorization(a, b, tol);
}

}  // namespace entropykit
