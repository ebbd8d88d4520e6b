#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "entropykit/errors.hpp"
#include "entropykit/figures.hpp"
#include "entropykit/grid.hpp"
#include "entropykit/sweep.hpp"
#include "entropykit/verify.hpp"
#include "oracle.hpp"

namespace ek = entropykit;
namespace orc = entropykit::oracle;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line, char d) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, d);) out.push_back(cell);
  return out;
}

std::string figure_text(ek::FigureId id, ek::TableFormat f = ek::TableFormat::csv,
                        bool tail = false) {
  std::ostringstream out;
  ek::emit_figure(id, out, f, tail);
  return out.str();
}

}  // namespace

TEST(Grid, LinearAndAlphaGrids) {
  const auto g = ek::default_lambda_grid();
  ASSERT_EQ(g.size(), 500u);
  EXPECT_EQ(g.front(), 0.1);
  EXPECT_EQ(g[2], 0.3);
  EXPECT_EQ(g.back(), 50.0);
  EXPECT_EQ(ek::alpha_grid_below_one().size(), 9u);
  EXPECT_EQ(ek::alpha_grid_above_one().size(), 10u);
  EXPECT_EQ(ek::alpha_grid_above_one().front(), 1.1);
  EXPECT_THROW(ek::linear_grid(1.0, 0.5, 0.1), ek::DomainError);
  const auto lg = ek::log_grid(1.5, 1000.0, 30);
  ASSERT_EQ(lg.size(), 30u);
  EXPECT_DOUBLE_EQ(lg.front(), 1.5);
  EXPECT_DOUBLE_EQ(lg.back(), 1000.0);
}

TEST(Grid, Formatting) {
  EXPECT_EQ(ek::format_coordinate(0.3), "0.3");
  EXPECT_EQ(ek::format_coordinate(50.0), "50");
  EXPECT_EQ(ek::format_value(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(ek::format_value(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Names, RoundTrip) {
  for (auto q : {ek::Quantity::shannon, ek::Quantity::shannon_prime, ek::Quantity::shannon_second,
                 ek::Quantity::renyi, ek::Quantity::psi, ek::Quantity::r, ek::Quantity::partial_sum,
                 ek::Quantity::statistic}) {
    EXPECT_EQ(ek::parse_quantity(ek::to_string(q)), q);
  }
  EXPECT_FALSE(ek::parse_quantity("entropy").has_value());
  for (auto c : ek::all_claims()) EXPECT_EQ(ek::parse_claim(ek::to_string(c)), c);
  EXPECT_EQ(ek::all_claims().size(), 8u);
  EXPECT_FALSE(ek::parse_claim("theorem-3").has_value());
  for (auto f : ek::all_figures()) EXPECT_EQ(ek::parse_figure(ek::to_string(f)), f);
  EXPECT_FALSE(ek::parse_figure("fig0").has_value());
  EXPECT_EQ(ek::parse_format("tsv"), ek::TableFormat::tsv);
  EXPECT_FALSE(ek::parse_format("json").has_value());
}

TEST(Sweep, CardinalityAndOrder) {
  ek::SweepConfig cfg;
  cfg.quantity = ek::Quantity::psi;
  cfg.lambda_start = 0.1;
  cfg.lambda_stop = 10.0;
  cfg.lambda_step = 0.1;
  cfg.alpha_list = ek::alpha_grid_below_one();
  const auto rows = ek::run_sweep(cfg);
  ASSERT_EQ(rows.size(), 900u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].alpha, cfg.alpha_list[i / 100]);
    EXPECT_EQ(rows[i].lambda, ek::linear_grid(0.1, 10.0, 0.1)[i % 100]);
    EXPECT_TRUE(rows[i].ok());
    EXPECT_LE(rows[i].tail_bound, cfg.eps);
  }
}

TEST(Sweep, PsiAtOrderOneIsUnity) {
  ek::SweepConfig cfg;
  cfg.quantity = ek::Quantity::psi;
  cfg.lambda_start = 0.5;
  cfg.lambda_stop = 50.0;
  cfg.lambda_step = 0.5;
  cfg.alpha_list = {1.0};
  for (const auto& row : ek::run_sweep(cfg)) EXPECT_NEAR(row.value, 1.0, 1e-12) << row.lambda;
}

TEST(Sweep, RenyiMatchesBesselForm) {
  ek::SweepConfig cfg;
  cfg.quantity = ek::Quantity::renyi;
  cfg.lambda_start = 1.0;
  cfg.lambda_stop = 3.0;
  cfg.lambda_step = 1.0;
  cfg.alpha_list = {2.0};
  const auto rows = ek::run_sweep(cfg);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    const orc::Real want = 2 * orc::Real(row.lambda) - log(orc::bessel_i0(2 * row.lambda));
    EXPECT_NEAR(row.value, orc::to_double(want), 1e-11) << row.lambda;
  }
}

TEST(Sweep, RowFailuresAreRecorded) {
  ek::SweepConfig cfg;
  cfg.quantity = ek::Quantity::statistic;
  cfg.lambda_start = 0.5;
  cfg.lambda_stop = 2.0;
  cfg.lambda_step = 0.5;
  cfg.alpha_list = {1.0};
  const auto rows = ek::run_sweep(cfg);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_FALSE(rows[0].ok());
  EXPECT_FALSE(rows[1].ok());
  EXPECT_FALSE(rows[0].numerical_failure);
  EXPECT_TRUE(rows[2].ok());
  std::ostringstream out;
  ek::write_sweep(out, rows, ek::TableFormat::csv, false);
  const auto text = lines(out.str());
  ASSERT_EQ(text.size(), 5u);
  EXPECT_EQ(text[0], "alpha,lambda,value,status");
  EXPECT_EQ(text[1].rfind("1,0.5,nan,domain_error", 0), 0u) << text[1];
  EXPECT_EQ(text[3].substr(text[3].size() - 3), ",ok");
}

TEST(Sweep, ConfigValidation) {
  ek::SweepConfig cfg;
  cfg.alpha_list = {};
  EXPECT_THROW(ek::run_sweep(cfg), ek::DomainError);
  cfg.alpha_list = {0.5};
  cfg.lambda_step = 0.0;
  EXPECT_THROW(ek::run_sweep(cfg), ek::DomainError);
  cfg.lambda_step = 0.1;
  cfg.lambda_start = 0.0;
  EXPECT_THROW(ek::run_sweep(cfg), ek::DomainError);
}

TEST(Sweep, TsvWithTailBound) {
  ek::SweepConfig cfg;
  cfg.quantity = ek::Quantity::shannon;
  cfg.lambda_start = 1.0;
  cfg.lambda_stop = 2.0;
  cfg.lambda_step = 1.0;
  cfg.alpha_list = {1.0};
  std::ostringstream out;
  ek::write_sweep(out, ek::run_sweep(cfg), ek::TableFormat::tsv, true);
  const auto text = lines(out.str());
  ASSERT_EQ(text.size(), 3u);
  EXPECT_EQ(text[0], "alpha\tlambda\tvalue\ttail_bound\tstatus");
  const auto cells = split(text[1], '\t');
  ASSERT_EQ(cells.size(), 5u);
  EXPECT_NEAR(std::stod(cells[2]), 1.3048422422562515, 1e-12);
  EXPECT_LE(std::stod(cells[3]), 1e-12);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(Evaluate, PartialSumUsesWindowLength) {
  EXPECT_NEAR(ek::evaluate(ek::Quantity::partial_sum, 1.0, 0.5, 1e-12, 0).value, std::exp(-0.5),
              1e-16);
  EXPECT_GT(ek::evaluate(ek::Quantity::partial_sum, 1.0, 0.5, 1e-12, 3).value,
            ek::evaluate(ek::Quantity::partial_sum, 1.0, 0.5, 1e-12, 2).value);
  EXPECT_THROW(ek::evaluate(ek::Quantity::renyi, -1.0, 1.0), ek::DomainError);
}

TEST(MonotoneRule, StrictnessAndNoise) {
  using ek::Sample;
  const std::vector<Sample> up = {{0, 1.0, 0}, {1, 2.0, 0}, {2, 3.0, 0}};
  EXPECT_TRUE(ek::strict_monotone_breaks(up, ek::Direction::increasing).empty());
  EXPECT_EQ(ek::strict_monotone_breaks(up, ek::Direction::decreasing).size(), 2u);
  const std::vector<Sample> flat = {{0, 1.0, 0}, {1, 1.0, 0}};
  EXPECT_EQ(ek::strict_monotone_breaks(flat, ek::Direction::increasing).size(), 1u);
  const std::vector<Sample> noisy = {{0, 1.0, 1e-12}, {1, 1.0 - 1e-12, 1e-12}};
  EXPECT_TRUE(ek::strict_monotone_breaks(noisy, ek::Direction::increasing).empty());
  const std::vector<Sample> real_drop = {{0, 1.0, 1e-12}, {1, 1.0 - 1e-9, 1e-12}};
  EXPECT_EQ(ek::strict_monotone_breaks(real_drop, ek::Direction::increasing).size(), 1u);
  EXPECT_FALSE(ek::sign_violated(1e-20, 0.0, ek::Sign::positive));
  EXPECT_TRUE(ek::sign_violated(0.0, 0.0, ek::Sign::positive));
  EXPECT_TRUE(ek::sign_violated(-1e-3, 1e-12, ek::Sign::positive));
  EXPECT_FALSE(ek::sign_violated(-1e-13, 1e-12, ek::Sign::positive));
  EXPECT_FALSE(ek::sign_violated(-2.0, 0.0, ek::Sign::negative));
}

class ClaimTest : public ::testing::TestWithParam<ek::ClaimId> {};

TEST_P(ClaimTest, PassesWithLibraryEvaluators) {
  const auto rep = ek::verify(GetParam());
  EXPECT_EQ(rep.claim_id, ek::to_string(GetParam()));
  EXPECT_GT(rep.checks, 0u);
  EXPECT_FALSE(rep.grid.empty());
  EXPECT_TRUE(rep.passed()) << rep.violations.front().parameters << " "
                            << rep.violations.front().observed;
}

INSTANTIATE_TEST_SUITE_P(AllClaims, ClaimTest, ::testing::ValuesIn(ek::all_claims().begin(),
                                                                   ek::all_claims().end()),
                         [](const auto& info) {
                           std::string name(ek::to_string(info.param));
                           std::replace(name.begin(), name.end(), '-', '_');
                           return name;
                         });

TEST(Verify, FlippedRFailsSignClaim) {
  ek::Evaluators ev;
  ev.r = [](const ek::RenyiOrder& a, const ek::Intensity& l, double eps) {
    auto v = ek::r_statistic(a, l, eps);
    v.value = -v.value;
    return v;
  };
  const auto rep = ek::verify(ek::ClaimId::lemma_2_sign, ev);
  EXPECT_FALSE(rep.passed());
  EXPECT_GT(rep.violations.size(), 100u);
}

TEST(Verify, DecreasingEntropyFailsMonotoneClaim) {
  ek::Evaluators ev;
  ev.shannon = [](const ek::Intensity& l, double eps) {
    auto v = ek::shannon_entropy(l, eps);
    v.value = -v.value;
    return v;
  };
  EXPECT_FALSE(ek::verify(ek::ClaimId::theorem_1_increasing, ev).passed());
  EXPECT_FALSE(ek::verify(ek::ClaimId::theorem_1_concave, ev).passed());
}

TEST(Verify, PerturbedPsiFailsDirectionClaims) {
  ek::Evaluators ev;
  ev.psi = [](const ek::RenyiOrder& a, const ek::Intensity& l, double eps) {
    auto v = ek::psi(a, l, eps);
    if (std::abs(l.value() - 25.0) < 1e-9) v.value = 2.0 - v.value;
    return v;
  };
  const auto below = ek::verify(ek::ClaimId::theorem_2_alpha_lt_1, ev);
  const auto above = ek::verify(ek::ClaimId::theorem_2_alpha_gt_1, ev);
  EXPECT_FALSE(below.passed());
  EXPECT_FALSE(above.passed());
}

TEST(Verify, IncreasingPartialSumFailsClaim) {
  ek::Evaluators ev;
  ev.partial_sum_complement = [](const ek::Intensity& l, std::size_t) { return -l.value(); };
  EXPECT_FALSE(ek::verify(ek::ClaimId::lemma_1_partial_sums, ev).passed());
}

TEST(Verify, FlatStatisticFailsClaim) {
  ek::Evaluators ev;
  ev.statistic = [](const ek::Intensity&, double) { return 1.0; };
  EXPECT_FALSE(ek::verify(ek::ClaimId::lemma_a1_statistic, ev).passed());
}

TEST(Verify, SwappedPsiFailsKaramataAgreement) {
  ek::Evaluators ev;
  ev.psi = [](const ek::RenyiOrder& a, const ek::Intensity& l, double eps) {
    auto v = ek::psi(a, l, eps);
    v.value = -v.value;
    return v;
  };
  EXPECT_FALSE(ek::verify(ek::ClaimId::lemma_a2_karamata, ev).passed());
}

TEST(Figures, LayoutAndShape) {
  for (auto id : ek::all_figures()) {
    const auto layout = ek::figure_layout(id);
    const auto text = lines(figure_text(id));
    const std::size_t rows = layout.wide ? layout.lambdas.size()
                                         : layout.lambdas.size() * layout.alphas.size();
    ASSERT_EQ(text.size(), rows + 1) << ek::to_string(id);
    const std::size_t cols = layout.wide ? layout.alphas.size() + 1 : 3;
    EXPECT_EQ(split(text[0], ',').size(), cols);
    EXPECT_EQ(split(text[1], ',').size(), cols);
  }
  EXPECT_EQ(lines(figure_text(ek::FigureId::fig2)).size(), 9u * 500u + 1u);
  EXPECT_EQ(lines(figure_text(ek::FigureId::fig1))[0].rfind("lambda,alpha_0.1,alpha_0.2", 0), 0u);
}

TEST(Figures, QualitativeShape) {
  for (auto id : ek::all_figures()) {
    const auto layout = ek::figure_layout(id);
    const auto text = lines(figure_text(id, ek::TableFormat::csv));
    const std::size_t na = layout.alphas.size();
    const std::size_t nl = layout.lambdas.size();
    // values[a][l]
    std::vector<std::vector<double>> values(na, std::vector<double>(nl));
    for (std::size_t r = 1; r < text.size(); ++r) {
      const auto cells = split(text[r], ',');
      if (layout.wide) {
        for (std::size_t a = 0; a < na; ++a) values[a][r - 1] = std::stod(cells[a + 1]);
      } else {
        values[(r - 1) / nl][(r - 1) % nl] = std::stod(cells[2]);
      }
    }
    const int n = static_cast<int>(id) + 1;
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t l = 0; l < nl; ++l) {
        const double v = values[a][l];
        if (n >= 5) {
          ASSERT_TRUE(n <= 6 ? v > 0 : v < 0) << "fig" << n << " " << a << " " << l;
        } else if (l > 0) {
          const double d = v - values[a][l - 1];
          ASSERT_TRUE(n <= 2 ? d > 0 : d < 0) << "fig" << n << " " << a << " " << l;
        }
      }
    }
  }
}

TEST(Figures, DeterministicAndFormats) {
  const auto once = figure_text(ek::FigureId::fig3, ek::TableFormat::tsv, true);
  EXPECT_EQ(once, figure_text(ek::FigureId::fig3, ek::TableFormat::tsv, true));
  const auto text = lines(once);
  EXPECT_EQ(split(text[0], '\t').size(), 21u);
  EXPECT_NE(text[0].find("tail_bound_alpha_2"), std::string::npos);
  for (std::size_t r = 1; r < text.size(); ++r) {
    const auto cells = split(text[r], '\t');
    for (std::size_t c = 11; c < cells.size(); ++c) ASSERT_LE(std::stod(cells[c]), 1e-12);
  }
}

TEST(Figures, FileOutput) {
  const auto dir = std::filesystem::temp_directory_path() / "entropykit_fig_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "fig6.csv";
  ek::emit_figure(ek::FigureId::fig6, path);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), figure_text(ek::FigureId::fig6));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(ek::emit_figure(ek::FigureId::fig6, dir / "missing" / "fig6.csv"), ek::IoError);
}
