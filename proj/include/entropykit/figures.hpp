#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "entropykit/sweep.hpp"

namespace entropykit {

/// Data behind the eight published plots:
///   fig1/fig2  psi, alpha in {0.1..0.9}   (increasing in lambda)
///   fig3/fig4  psi, alpha in {1.1..2.0}   (decreasing in lambda)
///   fig5/fig6  R,   alpha in {0.1..0.9}   (positive)
///   fig7/fig8  R,   alpha in {1.1..2.0}   (negative)
/// Odd figures are wide tables (lambda, one column per alpha); even figures
/// are long tables (alpha, lambda, value) for surface plots.
enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6, fig7, fig8 };

std::span<const FigureId> all_figures();
std::optional<FigureId> parse_figure(std::string_view name);
std::string_view to_string(FigureId id);

struct FigureLayout {
  Quantity quantity = Quantity::psi;
  std::vector<double> alphas;
  std::vector<double> lambdas;
  bool wide = true;
};

FigureLayout figure_layout(FigureId id);

/// Writes the figure table. Throws NumericalError if any value fails or
/// its tail bound exceeds eps.
void emit_figure(FigureId id, std::ostream& out, TableFormat format = TableFormat::csv,
                 bool with_tail_bound = false, double eps = kDefaultEps);

/// As above, into a file. Throws IoError when the path cannot be written.
void emit_figure(FigureId id, const std::filesystem::path& path,
                 TableFormat format = TableFormat::csv, bool with_tail_bound = false,
                 double eps = kDefaultEps);

}  // namespace entropykit
