#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace entropykit {

/// start, start + step, ..., up to stop inclusive. Points are computed as
/// start + i*step (never accumulated) and snapped to the nearest binary64
/// of their 9-decimal value, so 0.1 + 2*0.1 becomes 0.3.
std::vector<double> linear_grid(double start, double stop, double step);

/// n points from lo to hi inclusive, evenly spaced in log.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// {0.1, ..., 0.9}
std::vector<double> alpha_grid_below_one();
/// {1.1, ..., 2.0}
std::vector<double> alpha_grid_above_one();

/// Default intensity grid: 0.1 to 50 in steps of 0.1.
std::vector<double> default_lambda_grid();

/// 17 significant digits, '.' separator, independent of the C locale.
std::string format_value(double v);
/// Shortest representation that round-trips; used for grid coordinates.
std::string format_coordinate(double v);

}  // namespace entropykit
