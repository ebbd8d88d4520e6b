// entropykit: evaluate Poisson entropies, run sweeps, verify the
// monotonicity results and emit figure data.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure (truncation cap hit or overflow).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "entropykit/errors.hpp"
#include "entropykit/figures.hpp"
#include "entropykit/grid.hpp"
#include "entropykit/sweep.hpp"
#include "entropykit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

using namespace entropykit;

std::vector<double> default_alphas(Quantity q) {
  if (!depends_on_alpha(q)) return {1.0};
  std::vector<double> out = alpha_grid_below_one();
  for (double a : alpha_grid_above_one()) out.push_back(a);
  return out;
}

int run_eval(const std::string& quantity, double alpha, double lambda, double eps,
             std::size_t window_n) {
  const auto q = parse_quantity(quantity);
  if (!q) {
    std::cerr << "unknown quantity: " << quantity << '\n';
    return kExitUsage;
  }
  const Evaluation e = evaluate(*q, alpha, lambda, eps, window_n);
  std::cout << "quantity,alpha,lambda,value,tail_bound\n"
            << quantity << ',' << format_coordinate(alpha) << ',' << format_coordinate(lambda)
            << ',' << format_value(e.value) << ',' << format_value(e.tail_bound) << '\n';
  return kExitOk;
}

int run_sweep_cmd(SweepConfig cfg, const std::string& quantity, const std::string& format,
                  const std::string& output, bool with_tail_bound) {
  const auto q = parse_quantity(quantity);
  const auto f = parse_format(format);
  if (!q || !f) {
    std::cerr << "unknown " << (q ? "format: " + format : "quantity: " + quantity) << '\n';
    return kExitUsage;
  }
  cfg.quantity = *q;
  if (cfg.alpha_list.empty()) cfg.alpha_list = default_alphas(*q);
  const std::vector<SweepRow> rows = run_sweep(cfg);

  std::ostringstream buf;
  write_sweep(buf, rows, *f, with_tail_bound);
  if (output.empty() || output == "-") {
    std::cout << buf.str();
  } else {
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out || !(out << buf.str())) throw IoError("cannot write " + output);
  }

  bool numerical = false;
  for (const SweepRow& r : rows) {
    if (r.ok()) continue;
    std::cerr << "alpha=" << format_coordinate(r.alpha) << " lambda=" << format_coordinate(r.lambda)
              << ": " << r.error << '\n';
    numerical = numerical || r.numerical_failure;
  }
  return numerical ? kExitNumerical : kExitOk;
}

int run_verify(const std::string& claim, std::size_t max_listed) {
  std::vector<ClaimId> claims;
  if (claim == "all") {
    claims.assign(all_claims().begin(), all_claims().end());
  } else if (const auto id = parse_claim(claim)) {
    claims.push_back(*id);
  } else {
    std::cerr << "unknown claim: " << claim << '\n';
    return kExitUsage;
  }

  bool all_passed = true;
  for (ClaimId id : claims) {
    const VerificationReport rep = verify(id);
    all_passed = all_passed && rep.passed();
    std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.claim_id << "  checks=" << rep.checks
              << " violations=" << rep.violations.size() << "  [" << rep.grid << "]\n";
    for (std::size_t i = 0; i < rep.violations.size() && i < max_listed; ++i) {
      std::cout << "    " << rep.violations[i].parameters << ": " << rep.violations[i].observed
                << '\n';
    }
    for (const std::string& note : rep.notes) std::cout << "    note: " << note << '\n';
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int run_figure(const std::string& id, const std::string& output, const std::string& format,
               bool with_tail_bound) {
  const auto fig = parse_figure(id);
  const auto f = parse_format(format);
  if (!fig || !f) {
    std::cerr << "unknown " << (fig ? "format: " + format : "figure id: " + id) << '\n';
    return kExitUsage;
  }
  if (output.empty() || output == "-") {
    emit_figure(*fig, std::cout, *f, with_tail_bound);
  } else {
    emit_figure(*fig, std::filesystem::path(output), *f, with_tail_bound);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shannon and Renyi entropies of the Poisson distribution"};
  app.require_subcommand(1);

  std::string quantity = "shannon";
  double alpha = 1.0;
  double lambda = 1.0;
  double eps = kDefaultEps;
  std::size_t window_n = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate one quantity at (alpha, lambda)");
  eval->add_option("--quantity", quantity,
                   "shannon|shannon_prime|shannon_second|renyi|psi|r|partial_sum|statistic")
      ->capture_default_str();
  eval->add_option("--alpha", alpha, "Renyi order")->capture_default_str();
  eval->add_option("--lambda", lambda, "Poisson intensity")->required();
  eval->add_option("--eps", eps, "Certified truncation tolerance")->capture_default_str();
  eval->add_option("--n", window_n, "Window length parameter for partial_sum")
      ->capture_default_str();

  SweepConfig sweep_cfg;
  std::string sweep_quantity = "psi";
  std::string sweep_format = "csv";
  std::string sweep_output;
  bool sweep_tail = false;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a quantity over an (alpha, lambda) grid");
  sweep->add_option("--quantity", sweep_quantity)->capture_default_str();
  sweep->add_option("--alpha-list", sweep_cfg.alpha_list, "Comma-separated Renyi orders")
      ->delimiter(',');
  sweep->add_option("--lambda-start", sweep_cfg.lambda_start)->capture_default_str();
  sweep->add_option("--lambda-stop", sweep_cfg.lambda_stop)->capture_default_str();
  sweep->add_option("--lambda-step", sweep_cfg.lambda_step)->capture_default_str();
  sweep->add_option("--eps", sweep_cfg.eps)->capture_default_str();
  sweep->add_option("--n", sweep_cfg.window_n, "Window length parameter for partial_sum");
  sweep->add_option("--output", sweep_output, "Output file (default stdout)");
  sweep->add_option("--format", sweep_format, "csv|tsv")->capture_default_str();
  sweep->add_flag("--tail-bound", sweep_tail, "Add the certified tail bound column");

  std::string claim = "all";
  std::size_t max_listed = 10;
  auto* verify_cmd = app.add_subcommand("verify", "Check the monotonicity claims on their grids");
  verify_cmd->add_option("--claim", claim, "Claim id or 'all'")->capture_default_str();
  verify_cmd->add_option("--max-listed", max_listed, "Violations printed per claim")
      ->capture_default_str();

  std::string fig_id;
  std::string fig_output;
  std::string fig_format = "csv";
  bool fig_tail = false;
  auto* figure = app.add_subcommand("figure", "Write the data behind one figure");
  figure->add_option("--id", fig_id, "fig1..fig8")->required();
  figure->add_option("--output", fig_output, "Output file (default stdout)");
  figure->add_option("--format", fig_format, "csv|tsv")->capture_default_str();
  figure->add_flag("--tail-bound", fig_tail, "Add certified tail bound columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return run_eval(quantity, alpha, lambda, eps, window_n);
    if (*sweep) return run_sweep_cmd(sweep_cfg, sweep_quantity, sweep_format, sweep_output, sweep_tail);
    if (*verify_cmd) return run_verify(claim, max_listed);
    if (*figure) return run_figure(fig_id, fig_output, fig_format, fig_tail);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
