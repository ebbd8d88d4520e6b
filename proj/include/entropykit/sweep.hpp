#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entropykit/entropy.hpp"

namespace entropykit {

enum class Quantity {
  shannon,
  shannon_prime,
  shannon_second,
  renyi,
  psi,
  r,
  partial_sum,
  statistic,
};

std::optional<Quantity> parse_quantity(std::string_view name);
std::string_view to_string(Quantity q);
bool depends_on_alpha(Quantity q);

enum class TableFormat { csv, tsv };

std::optional<TableFormat> parse_format(std::string_view name);
char delimiter(TableFormat f);

/// One evaluated quantity with the certified bound on its truncation error.
struct Evaluation {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Evaluates `q` at (alpha, lambda). `window_n` is the window length
/// parameter n for partial_sum and is ignored otherwise. Throws
/// DomainError or NumericalError.
Evaluation evaluate(Quantity q, double alpha, double lambda, double eps = kDefaultEps,
                    std::size_t window_n = 0);

struct SweepConfig {
  Quantity quantity = Quantity::psi;
  double lambda_start = 0.1;
  double lambda_stop = 50.0;
  double lambda_step = 0.1;
  std::vector<double> alpha_list;
  double eps = kDefaultEps;
  std::size_t window_n = 0;

  /// Throws DomainError when the config is unusable.
  void validate() const;
  std::vector<double> lambdas() const;
};

struct SweepRow {
  double alpha = 0.0;
  double lambda = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
  /// Empty on success.
  std::string error;
  bool numerical_failure = false;

  bool ok() const noexcept { return error.empty(); }
};

/// One row per (alpha, lambda), alpha outer ascending, lambda inner
/// ascending. Rows are computed on worker threads but always returned in
/// that order. Per-row evaluation failures are recorded, not thrown.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Header `alpha,lambda,value[,tail_bound],status`.
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, TableFormat format,
                 bool with_tail_bound);

}  // namespace entropykit
