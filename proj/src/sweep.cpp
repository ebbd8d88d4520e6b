#include "entropykit/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>
#include <utility>

#include "entropykit/asymptotics.hpp"
#include "entropykit/errors.hpp"
#include "entropykit/grid.hpp"
#include "entropykit/majorization.hpp"

namespace entropykit {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 8> kQuantityNames = {{
    {Quantity::shannon, "shannon"},
    {Quantity::shannon_prime, "shannon_prime"},
    {Quantity::shannon_second, "shannon_second"},
    {Quantity::renyi, "renyi"},
    {Quantity::psi, "psi"},
    {Quantity::r, "r"},
    {Quantity::partial_sum, "partial_sum"},
    {Quantity::statistic, "statistic"},
}};

Evaluation from_entropy(const EntropyValue& e) { return {e.value, e.series.tail_bound}; }
Evaluation from_series(const SeriesValue& s) { return {s.value, s.tail_bound}; }

}  // namespace

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (const auto& [q, n] : kQuantityNames) {
    if (n == name) return q;
  }
  return std::nullopt;
}

std::string_view to_string(Quantity q) {
  for (const auto& [k, n] : kQuantityNames) {
    if (k == q) return n;
  }
  return "unknown";
}

bool depends_on_alpha(Quantity q) {
  return q == Quantity::renyi || q == Quantity::psi || q == Quantity::r;
}

std::optional<TableFormat> parse_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "tsv") return TableFormat::tsv;
  return std::nullopt;
}

char delimiter(TableFormat f) { return f == TableFormat::tsv ? '\t' : ','; }

Evaluation evaluate(Quantity q, double alpha, double lambda, double eps, std::size_t window_n) {
  const Intensity lam(lambda);
  switch (q) {
    case Quantity::shannon:
      return from_entropy(shannon_entropy(lam, eps));
    case Quantity::shannon_prime:
      return from_entropy(shannon_prime(lam, eps));
    case Quantity::shannon_second:
      return from_entropy(shannon_second(lam, eps));
    case Quantity::renyi:
      return from_entropy(renyi_entropy(RenyiOrder(alpha), lam, eps));
    case Quantity::psi:
      return from_series(psi(RenyiOrder(alpha), lam, eps));
    case Quantity::r:
      return from_series(r_statistic(RenyiOrder(alpha), lam, eps));
    case Quantity::partial_sum:
      return {partial_sum(lam, window_n), 0.0};
    case Quantity::statistic:
      return from_series(entropy_prime_statistic_series(lam, eps));
  }
  throw DomainError("unknown quantity");
}

void SweepConfig::validate() const {
  if (!(lambda_start > 0.0) || !(lambda_stop > lambda_start)) {
    throw DomainError("sweep needs 0 < lambda_start < lambda_stop");
  }
  if (!(lambda_step > 0.0)) throw DomainError("sweep needs lambda_step > 0");
  if (!(eps > 0.0)) throw DomainError("sweep needs eps > 0");
  if (alpha_list.empty()) throw DomainError("sweep needs at least one alpha");
  for (double a : alpha_list) RenyiOrder{a};
}

std::vector<double> SweepConfig::lambdas() const {
  return linear_grid(lambda_start, lambda_stop, lambda_step);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<double> alphas = config.alpha_list;
  std::sort(alphas.begin(), alphas.end());
  const std::vector<double> lambdas = config.lambdas();

  std::vector<SweepRow> rows;
  rows.reserve(alphas.size() * lambdas.size());
  for (double a : alphas) {
    for (double l : lambdas) {
      SweepRow row;
      row.alpha = a;
      row.lambda = l;
      rows.push_back(std::move(row));
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& row = rows[i];
      try {
        const Evaluation e = evaluate(config.quantity, row.alpha, row.lambda, config.eps,
                                      config.window_n);
        row.value = e.value;
        row.tail_bound = e.tail_bound;
      } catch (const NumericalError& ex) {
        row.error = ex.what();
        row.numerical_failure = true;
      } catch (const DomainError& ex) {
        row.error = ex.what();
      }
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  return rows;
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, TableFormat format,
                 bool with_tail_bound) {
  const char d = delimiter(format);
  out << "alpha" << d << "lambda" << d << "value" << d;
  if (with_tail_bound) out << "tail_bound" << d;
  out << "status\n";
  for (const SweepRow& row : rows) {
    out << format_coordinate(row.alpha) << d << format_coordinate(row.lambda) << d;
    out << (row.ok() ? format_value(row.value) : std::string("nan")) << d;
    if (with_tail_bound) out << (row.ok() ? format_value(row.tail_bound) : "nan") << d;
    if (row.ok()) {
      out << "ok";
    } else {
      // Delimiters inside messages would break the table.
      std::string msg = row.error;
      std::replace(msg.begin(), msg.end(), d, ';');
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      out << (row.numerical_failure ? "numerical_error: " : "domain_error: ") << msg;
    }
    out << '\n';
  }
}

}  // namespace entropykit
