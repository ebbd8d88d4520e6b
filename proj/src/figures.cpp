#include "entropykit/figures.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "entropykit/errors.hpp"
#include "entropykit/grid.hpp"

namespace entropykit {

namespace {

constexpr std::array<FigureId, 8> kFigures = {FigureId::fig1, FigureId::fig2, FigureId::fig3,
                                              FigureId::fig4, FigureId::fig5, FigureId::fig6,
                                              FigureId::fig7, FigureId::fig8};
constexpr std::array<std::string_view, 8> kFigureNames = {"fig1", "fig2", "fig3", "fig4",
                                                          "fig5", "fig6", "fig7", "fig8"};

std::vector<SweepRow> evaluate_figure(const FigureLayout& layout, double eps) {
  SweepConfig cfg;
  cfg.quantity = layout.quantity;
  cfg.alpha_list = layout.alphas;
  cfg.lambda_start = layout.lambdas.front();
  cfg.lambda_stop = layout.lambdas.back();
  cfg.eps = eps;
  std::vector<SweepRow> rows = run_sweep(cfg);
  for (const SweepRow& r : rows) {
    if (!r.ok()) {
      throw NumericalError("figure value failed at alpha=" + format_coordinate(r.alpha) +
                           " lambda=" + format_coordinate(r.lambda) + ": " + r.error);
    }
    if (r.tail_bound > eps) throw NumericalError("figure value exceeds the requested eps");
  }
  return rows;
}

}  // namespace

std::span<const FigureId> all_figures() { return kFigures; }

std::optional<FigureId> parse_figure(std::string_view name) {
  for (std::size_t i = 0; i < kFigureNames.size(); ++i) {
    if (kFigureNames[i] == name) return kFigures[i];
  }
  return std::nullopt;
}

std::string_view to_string(FigureId id) { return kFigureNames[static_cast<std::size_t>(id)]; }

FigureLayout figure_layout(FigureId id) {
  const auto idx = static_cast<int>(id);
  FigureLayout layout;
  layout.quantity = idx < 4 ? Quantity::psi : Quantity::r;
  layout.alphas = (idx / 2) % 2 == 0 ? alpha_grid_below_one() : alpha_grid_above_one();
  layout.lambdas = default_lambda_grid();
  layout.wide = idx % 2 == 0;
  return layout;
}

void emit_figure(FigureId id, std::ostream& out, TableFormat format, bool with_tail_bound,
                 double eps) {
  const FigureLayout layout = figure_layout(id);
  const std::vector<SweepRow> rows = evaluate_figure(layout, eps);
  const char d = delimiter(format);

  if (!layout.wide) {
    out << "alpha" << d << "lambda" << d << "value";
    if (with_tail_bound) out << d << "tail_bound";
    out << '\n';
    for (const SweepRow& r : rows) {
      out << format_coordinate(r.alpha) << d << format_coordinate(r.lambda) << d
          << format_value(r.value);
      if (with_tail_bound) out << d << format_value(r.tail_bound);
      out << '\n';
    }
    return;
  }

  // rows are alpha-major; rows[a * L + l].
  const std::size_t L = layout.lambdas.size();
  out << "lambda";
  for (double a : layout.alphas) out << d << "alpha_" << format_coordinate(a);
  if (with_tail_bound) {
    for (double a : layout.alphas) out << d << "tail_bound_alpha_" << format_coordinate(a);
  }
  out << '\n';
  for (std::size_t l = 0; l < L; ++l) {
    out << format_coordinate(layout.lambdas[l]);
    for (std::size_t a = 0; a < layout.alphas.size(); ++a) out << d << format_value(rows[a * L + l].value);
    if (with_tail_bound) {
      for (std::size_t a = 0; a < layout.alphas.size(); ++a) {
        out << d << format_value(rows[a * L + l].tail_bound);
      }
    }
    out << '\n';
  }
}

void emit_figure(FigureId id, const std::filesystem::path& path, TableFormat format,
                 bool with_tail_bound, double eps) {
  // Render fully before touching the file so a numerical failure leaves
  // no partial output behind.
  std::ostringstream buf;
  emit_figure(id, buf, format, with_tail_bound, eps);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << buf.str();
  f.flush();
  if (!f) throw IoError("failed writing " + path.string());
}

}  // namespace entropykit
