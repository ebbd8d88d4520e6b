#include "entropykit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "entropykit/asymptotics.hpp"
#include "entropykit/errors.hpp"
#include "entropykit/grid.hpp"
#include "entropykit/majorization.hpp"
#include "entropykit/summation.hpp"

namespace entropykit {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 8> kClaimNames = {{
    {ClaimId::theorem_1_increasing, "theorem-1-increasing"},
    {ClaimId::theorem_1_concave, "theorem-1-concave"},
    {ClaimId::theorem_2_alpha_lt_1, "theorem-2-alpha-lt-1"},
    {ClaimId::theorem_2_alpha_gt_1, "theorem-2-alpha-gt-1"},
    {ClaimId::lemma_1_partial_sums, "lemma-1-partial-sums"},
    {ClaimId::lemma_2_sign, "lemma-2-sign"},
    {ClaimId::lemma_a1_statistic, "lemma-a1-statistic"},
    {ClaimId::lemma_a2_karamata, "lemma-a2-karamata"},
}};

constexpr std::array<ClaimId, 8> kAllClaims = {
    ClaimId::theorem_1_increasing, ClaimId::theorem_1_concave,
    ClaimId::theorem_2_alpha_lt_1, ClaimId::theorem_2_alpha_gt_1,
    ClaimId::lemma_1_partial_sums, ClaimId::lemma_2_sign,
    ClaimId::lemma_a1_statistic,   ClaimId::lemma_a2_karamata,
};

// Step and tolerance for the five-point second-difference check.
constexpr double kSecondDiffStep = 1e-3;
constexpr double kSecondDiffTol = 1e-5;
// Step and tolerance for the five-point central-difference check of
// d psi / d lambda.
constexpr double kPsiDiffStep = 1e-4;
constexpr double kPsiDiffTol = 1e-6;
// Sign threshold for R away from alpha = 1, and the zero tolerance at 1.
constexpr double kRSignFloor = 1e-14;
constexpr double kRZeroTol = 1e-12;
// Relative offset used to straddle the window thresholds c_m.
constexpr double kStraddle = 1e-7;
constexpr std::size_t kMaxWindowN = 20;
constexpr std::size_t kMaxStraddledM = 10;
constexpr std::size_t kKaramataPairs = 50;
constexpr std::uint64_t kKaramataSeed = 20240601;

std::string kv(std::string_view key, double v) {
  return std::string(key) + "=" + format_coordinate(v);
}

std::string values(std::initializer_list<std::pair<std::string_view, double>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + "=" + format_value(v);
  }
  return out;
}

template <class F>
std::vector<Sample> sample(const std::vector<double>& grid, F&& f) {
  std::vector<Sample> out;
  out.reserve(grid.size());
  for (double x : grid) {
    const auto [v, tb] = f(x);
    out.push_back({x, v, tb});
  }
  return out;
}

void report_breaks(VerificationReport& rep, const std::vector<Sample>& s, Direction dir,
                   const std::string& what) {
  rep.checks += s.empty() ? 0 : s.size() - 1;
  for (const MonotoneBreak& b : strict_monotone_breaks(s, dir)) {
    rep.violations.push_back(
        {what + " " + kv("lambda_a", s[b.index].x) + " " + kv("lambda_b", s[b.index + 1].x),
         values({{"difference", b.difference},
                 {"tail_a", s[b.index].tail_bound},
                 {"tail_b", s[b.index + 1].tail_bound}})});
  }
}

std::pair<double, double> as_pair(const EntropyValue& e) { return {e.value, e.series.tail_bound}; }
std::pair<double, double> as_pair(const SeriesValue& s) { return {s.value, s.tail_bound}; }

VerificationReport theorem_1_increasing(const Evaluators& ev, double eps) {
  VerificationReport rep;
  rep.grid = "lambda in [0.1, 50] step 0.1";
  const auto grid = default_lambda_grid();
  const auto h = sample(grid, [&](double l) { return as_pair(ev.shannon(Intensity(l), eps)); });
  report_breaks(rep, h, Direction::increasing, "H_S");
  for (double l : grid) {
    const auto [v, tb] = as_pair(ev.shannon_prime(Intensity(l), eps));
    ++rep.checks;
    if (sign_violated(v, tb, Sign::positive)) {
      rep.violations.push_back({"H_S' " + kv("lambda", l), values({{"value", v}, {"tail", tb}})});
    }
  }
  return rep;
}

VerificationReport theorem_1_concave(const Evaluators& ev, double eps) {
  VerificationReport rep;
  rep.grid = "lambda in [0.1, 50] step 0.1; five-point second difference h=1e-3";
  const double h = kSecondDiffStep;
  auto H = [&](double l) { return ev.shannon(Intensity(l), eps).value; };
  for (double l : default_lambda_grid()) {
    const auto [v, tb] = as_pair(ev.shannon_second(Intensity(l), eps));
    rep.checks += 2;
    if (sign_violated(v, tb, Sign::negative)) {
      rep.violations.push_back({"H_S'' " + kv("lambda", l), values({{"value", v}, {"tail", tb}})});
    }
    const double fd = (-H(l + 2 * h) + 16 * H(l + h) - 30 * H(l) + 16 * H(l - h) - H(l - 2 * h)) /
                      (12 * h * h);
    if (!(fd < 0.0) || !(std::abs(fd - v) <= kSecondDiffTol)) {
      rep.violations.push_back({"finite-difference H_S'' " + kv("lambda", l),
                                values({{"difference_quotient", fd}, {"series", v}})});
    }
  }
  return rep;
}

VerificationReport theorem_2(const Evaluators& ev, double eps, bool below_one) {
  VerificationReport rep;
  const auto alphas = below_one ? alpha_grid_below_one() : alpha_grid_above_one();
  rep.grid = std::string("alpha in ") + (below_one ? "{0.1..0.9}" : "{1.1..2.0}") +
             " x lambda in [0.1, 50] step 0.1";
  const auto grid = default_lambda_grid();
  for (double a : alphas) {
    const RenyiOrder alpha(a);
    const auto p = sample(grid, [&](double l) { return as_pair(ev.psi(alpha, Intensity(l), eps)); });
    report_breaks(rep, p, below_one ? Direction::increasing : Direction::decreasing,
                  "psi " + kv("alpha", a));
    const auto r =
        sample(grid, [&](double l) { return as_pair(ev.renyi(alpha, Intensity(l), eps)); });
    report_breaks(rep, r, Direction::increasing, "H_R " + kv("alpha", a));
  }
  return rep;
}

std::vector<double> lemma_1_grid(std::size_t n) {
  std::vector<double> g = default_lambda_grid();
  for (std::size_t m = 0; m <= kMaxStraddledM; ++m) {
    const double c = window_threshold(m, n);
    for (double x : {c * (1 - kStraddle), c, c * (1 + kStraddle)}) {
      if (x > 0.0 && x <= 50.0) g.push_back(x);
    }
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

// Sum of the n+1 largest pmf values found by sorting, independent of the
// window construction.
double top_values_sum(const Intensity& lambda, std::size_t n) {
  const auto K = static_cast<std::size_t>(2 * lambda.value()) + n + 10;
  std::vector<double> p;
  p.reserve(K + 1);
  for (std::size_t k = 0; k <= K; ++k) p.push_back(std::exp(log_pmf(lambda, k)));
  std::partial_sort(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n + 1), p.end(),
                    std::greater<>());
  CompensatedSum s;
  for (std::size_t i = 0; i <= n; ++i) s.add(p[i]);
  return s.value();
}

VerificationReport lemma_1_partial_sums(const Evaluators& ev) {
  VerificationReport rep;
  rep.grid =
      "n in {0..20} x lambda in [0.1, 50] step 0.1 plus c_m(1 +- 1e-7) and c_m for m <= 10";
  for (std::size_t n = 0; n <= kMaxWindowN; ++n) {
    const auto grid = lemma_1_grid(n);
    // S_n decreasing is checked through 1 - S_n increasing: for small lambda
    // and large n, S_n itself rounds to 1.
    const auto c = sample(grid, [&](double l) {
      return std::pair{ev.partial_sum_complement(Intensity(l), n), 0.0};
    });
    report_breaks(rep, c, Direction::increasing, "1 - S_n n=" + std::to_string(n));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const double d = ev.partial_sum(Intensity(grid[i + 1]), n) - ev.partial_sum(Intensity(grid[i]), n);
      ++rep.checks;
      if (d > 0.0) {
        rep.violations.push_back({"S_n n=" + std::to_string(n) + " " + kv("lambda_a", grid[i]) +
                                      " " + kv("lambda_b", grid[i + 1]),
                                  values({{"difference", d}})});
      }
    }
    for (double l : default_lambda_grid()) {
      const Intensity lam(l);
      const double window = ev.partial_sum(lam, n);
      const double top = top_values_sum(lam, n);
      ++rep.checks;
      if (!(std::abs(window - top) <= 1e-14)) {
        rep.violations.push_back({"window n=" + std::to_string(n) + " " + kv("lambda", l),
                                  values({{"window_sum", window}, {"top_values_sum", top}})});
      }
    }
  }
  return rep;
}

VerificationReport lemma_2_sign(const Evaluators& ev, double eps) {
  VerificationReport rep;
  rep.grid = "alpha in {0.1..0.9, 1, 1.1..2.0} x lambda in [0.1, 20] step 0.1";
  const auto grid = linear_grid(0.1, 20.0, 0.1);
  std::vector<double> alphas = alpha_grid_below_one();
  alphas.push_back(1.0);
  for (double a : alpha_grid_above_one()) alphas.push_back(a);

  const double h = kPsiDiffStep;
  for (double a : alphas) {
    const RenyiOrder alpha(a);
    for (double l : grid) {
      const Intensity lam(l);
      const double r = ev.r(alpha, lam, eps).value;
      const std::string where = kv("alpha", a) + " " + kv("lambda", l);
      ++rep.checks;
      if (a == 1.0) {
        if (!(std::abs(r) < kRZeroTol)) rep.violations.push_back({"R " + where, values({{"R", r}})});
      } else if (r == 0.0) {
        rep.notes.push_back("R is exactly zero at " + where);
      } else {
        const bool ok = a < 1.0 ? r > kRSignFloor : r < -kRSignFloor;
        if (!ok) rep.violations.push_back({"R sign " + where, values({{"R", r}})});
      }

      ++rep.checks;
      auto P = [&](double x) { return ev.psi(alpha, Intensity(x), eps).value; };
      const double dpsi = (P(l - 2 * h) - 8 * P(l - h) + 8 * P(l + h) - P(l + 2 * h)) / (12 * h);
      const double scaled = a * std::exp(-a * l) * r;
      if (!(std::abs(dpsi - scaled) <= kPsiDiffTol)) {
        rep.violations.push_back({"dpsi/dlambda " + where,
                                  values({{"central_difference", dpsi}, {"scaled_R", scaled}})});
      }
    }
  }
  return rep;
}

double log_factorial_accumulated(std::uint64_t n) {
  if (n <= 20) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= k;
    return std::log(static_cast<double>(f));
  }
  CompensatedSum s;
  for (std::uint64_t k = 2; k <= n; ++k) s.add(std::log(static_cast<double>(k)));
  return s.value();
}

VerificationReport lemma_a1_statistic(const Evaluators& ev, double eps) {
  VerificationReport rep;
  rep.grid =
      "statistic at 30 log-spaced lambda in [1.5, 1000] and {100, 200, 400, 800}; S_1 bound at "
      "{50, 100, 200, 400}; tail fraction at 100; Stirling n in {2..170}";
  for (double l : log_grid(1.5, 1000.0, 30)) {
    const double s = ev.statistic(Intensity(l), eps);
    ++rep.checks;
    if (!(s > 1.0)) rep.violations.push_back({"statistic " + kv("lambda", l), values({{"statistic", s}})});
  }
  std::vector<Sample> tail;
  for (double l : {100.0, 200.0, 400.0, 800.0}) {
    const double s = ev.statistic(Intensity(l), eps);
    tail.push_back({l, s - 1.0, 0.0});
    ++rep.checks;
    if (!(s > 1.0)) rep.violations.push_back({"statistic " + kv("lambda", l), values({{"statistic", s}})});
  }
  report_breaks(rep, tail, Direction::decreasing, "statistic - 1");

  for (double l : {50.0, 100.0, 200.0, 400.0}) {
    const Intensity lam(l);
    const double bound = s1_upper_bound(lam);
    const double s1 = s1_contribution(lam);
    const double stat = ev.statistic(lam, eps);
    const double lower = statistic_lower_bound(lam);
    const double head = tail_fraction_complement(lam);
    rep.checks += 3;
    if (!(s1 <= bound)) {
      rep.violations.push_back({"S_1 bound " + kv("lambda", l), values({{"s1", s1}, {"bound", bound}})});
    }
    if (!(stat >= lower)) {
      rep.violations.push_back(
          {"statistic lower bound " + kv("lambda", l), values({{"statistic", stat}, {"lower", lower}})});
    }
    // tail_fraction >= 1 - e^{-lambda} - bound, stated on the complement.
    if (!(head <= std::exp(-l) + bound)) {
      rep.violations.push_back({"tail fraction bound " + kv("lambda", l),
                                values({{"one_minus_tail_fraction", head}, {"s1_bound", bound}})});
    }
  }
  const double tf100 = tail_fraction(Intensity(100.0));
  ++rep.checks;
  if (!(tf100 > 0.999)) rep.violations.push_back({"tail fraction lambda=100", values({{"value", tf100}})});

  for (std::uint64_t n = 2; n <= 170; ++n) {
    const StirlingBounds b = stirling_bounds(n);
    const double lf = log_factorial_accumulated(n);
    ++rep.checks;
    if (!(b.log_lower < lf && lf < b.log_upper)) {
      rep.violations.push_back({"Stirling n=" + std::to_string(n),
                                values({{"log_lower", b.log_lower},
                                        {"log_factorial", lf},
                                        {"log_upper", b.log_upper}})});
    }
  }
  return rep;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

VerificationReport lemma_a2_karamata(const Evaluators& ev, double eps) {
  VerificationReport rep;
  rep.grid = "50 seeded pairs lambda_1 < lambda_2 in (0.1, 20), alpha in {0.5, 2}";
  std::mt19937_64 rng(kKaramataSeed);
  for (std::size_t i = 0; i < kKaramataPairs; ++i) {
    double l1 = 0.1 + 19.9 * uniform01(rng);
    double l2 = 0.1 + 19.9 * uniform01(rng);
    if (l1 > l2) std::swap(l1, l2);
    if (l1 == l2) continue;
    const Intensity lam1(l1);
    const Intensity lam2(l2);
    const std::size_t n = certificate_length(lam1, lam2);
    const std::vector<double> a = rearranged_prefix(lam1, n).extended();
    const std::vector<double> b = rearranged_prefix(lam2, n).extended();
    const std::string where = kv("lambda_1", l1) + " " + kv("lambda_2", l2) +
                              " n=" + std::to_string(n);
    ++rep.checks;
    const MajorizationVerdict v = check_majorization(a, b, kCertificateTol);
    if (!v.majorizes) {
      rep.violations.push_back({"majorization " + where,
                                "prefix_dominance_upto=" + std::to_string(v.prefix_dominance_upto) +
                                    " sums_equal=" + std::to_string(v.sums_equal)});
      continue;
    }
    for (double a_exp : {0.5, 2.0}) {
      const double gap = karamata_gap([a_exp](double x) { return std::pow(x, a_exp); }, a, b,
                                      Interval{0.0, 1.0}, kCertificateTol);
      const RenyiOrder alpha(a_exp);
      const double dpsi = ev.psi(alpha, lam1, eps).value - ev.psi(alpha, lam2, eps).value;
      const bool convex = a_exp > 1.0;
      rep.checks += 2;
      if (convex ? gap < 0.0 : gap > 0.0) {
        rep.violations.push_back({"Karamata sign " + where + " " + kv("alpha", a_exp),
                                  values({{"gap", gap}})});
      }
      if ((gap > 0.0 && dpsi < 0.0) || (gap < 0.0 && dpsi > 0.0) || dpsi == 0.0) {
        rep.violations.push_back({"psi sign agreement " + where + " " + kv("alpha", a_exp),
                                  values({{"gap", gap}, {"psi_difference", dpsi}})});
      }
    }
  }
  return rep;
}

}  // namespace

std::span<const ClaimId> all_claims() { return kAllClaims; }

std::string_view to_string(ClaimId id) {
  for (const auto& [k, n] : kClaimNames) {
    if (k == id) return n;
  }
  return "unknown";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& [k, n] : kClaimNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Evaluators Evaluators::standard() { return {}; }

VerificationReport verify(ClaimId id, const Evaluators& ev, double eps) {
  VerificationReport rep;
  switch (id) {
    case ClaimId::theorem_1_increasing: rep = theorem_1_increasing(ev, eps); break;
    case ClaimId::theorem_1_concave: rep = theorem_1_concave(ev, eps); break;
    case ClaimId::theorem_2_alpha_lt_1: rep = theorem_2(ev, eps, true); break;
    case ClaimId::theorem_2_alpha_gt_1: rep = theorem_2(ev, eps, false); break;
    case ClaimId::lemma_1_partial_sums: rep = lemma_1_partial_sums(ev); break;
    case ClaimId::lemma_2_sign: rep = lemma_2_sign(ev, eps); break;
    case ClaimId::lemma_a1_statistic: rep = lemma_a1_statistic(ev, eps); break;
    case ClaimId::lemma_a2_karamata: rep = lemma_a2_karamata(ev, eps); break;
  }
  rep.claim_id = std::string(to_string(id));
  return rep;
}

std::vector<MonotoneBreak> strict_monotone_breaks(std::span<const Sample> samples,
                                                  Direction direction) {
  std::vector<MonotoneBreak> out;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double d = samples[i + 1].value - samples[i].value;
    const double signed_d = direction == Direction::increasing ? d : -d;
    const double noise = 2.0 * (samples[i].tail_bound + samples[i + 1].tail_bound);
    if (!(signed_d > 0.0) && (noise == 0.0 || std::abs(d) > noise || std::isnan(d))) {
      out.push_back({i, d});
    }
  }
  return out;
}

bool sign_violated(double value, double tail_bound, Sign required) {
  const double s = required == Sign::positive ? value : -value;
  if (s > 0.0) return false;
  return tail_bound == 0.0 || std::abs(value) > 2.0 * tail_bound || std::isnan(value);
}

}  // namespace entropykit
