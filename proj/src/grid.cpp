#include "entropykit/grid.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "entropykit/errors.hpp"

namespace entropykit {

namespace {

double snap(double x) {
  constexpr double kScale = 1e9;
  if (std::abs(x) >= 1e6) return x;
  const double scaled = std::round(x * kScale);
  return std::abs(x * kScale - scaled) < 1e-3 ? scaled / kScale : x;
}

std::string to_chars_string(double v, int precision) {
  char buf[64];
  const auto res = precision > 0
                       ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general,
                                       precision)
                       : std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw NumericalError("cannot format value");
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw DomainError("grid needs start <= stop and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(snap(start + static_cast<double>(i) * step));
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw DomainError("log grid needs 0 < lo < hi, n >= 2");
  std::vector<double> out;
  out.reserve(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1)));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> alpha_grid_below_one() { return linear_grid(0.1, 0.9, 0.1); }
std::vector<double> alpha_grid_above_one() { return linear_grid(1.1, 2.0, 0.1); }
std::vector<double> default_lambda_grid() { return linear_grid(0.1, 50.0, 0.1); }

std::string format_value(double v) { return to_chars_string(v, 17); }
std::string format_coordinate(double v) { return to_chars_string(v, 0); }

}  // namespace entropykit
