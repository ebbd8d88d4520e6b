#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entropykit/asymptotics.hpp"
#include "entropykit/entropy.hpp"
#include "entropykit/majorization.hpp"
#include "entropykit/poisson.hpp"

namespace entropykit {

enum class ClaimId {
  theorem_1_increasing,
  theorem_1_concave,
  theorem_2_alpha_lt_1,
  theorem_2_alpha_gt_1,
  lemma_1_partial_sums,
  lemma_2_sign,
  lemma_a1_statistic,
  lemma_a2_karamata,
};

std::span<const ClaimId> all_claims();
std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

struct Violation {
  std::string parameters;
  std::string observed;
};

struct VerificationReport {
  std::string claim_id;
  std::string grid;
  std::size_t checks = 0;
  std::vector<Violation> violations;
  /// Observations worth surfacing that are not failures, e.g. a sign
  /// check that landed on an exact zero.
  std::vector<std::string> notes;

  bool passed() const noexcept { return violations.empty(); }
};

/// The evaluators a verification run calls. Tests swap in corrupted ones
/// to confirm the harness actually catches violations.
struct Evaluators {
  std::function<EntropyValue(const Intensity&, double)> shannon = shannon_entropy;
  std::function<EntropyValue(const Intensity&, double)> shannon_prime = entropykit::shannon_prime;
  std::function<EntropyValue(const Intensity&, double)> shannon_second =
      entropykit::shannon_second;
  std::function<SeriesValue(const RenyiOrder&, const Intensity&, double)> psi = entropykit::psi;
  std::function<EntropyValue(const RenyiOrder&, const Intensity&, double)> renyi = renyi_entropy;
  std::function<SeriesValue(const RenyiOrder&, const Intensity&, double)> r = r_statistic;
  std::function<double(const Intensity&, std::size_t)> partial_sum = entropykit::partial_sum;
  std::function<double(const Intensity&, std::size_t)> partial_sum_complement =
      entropykit::partial_sum_complement;
  std::function<double(const Intensity&, double)> statistic = entropy_prime_statistic;

  static Evaluators standard();
};

/// Runs the claim's default grid and collects every violation.
VerificationReport verify(ClaimId id, const Evaluators& ev = Evaluators::standard(),
                          double eps = kDefaultEps);

enum class Direction { increasing, decreasing };

/// A value sampled on a grid together with its certified truncation bound.
struct Sample {
  double x = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
};

struct MonotoneBreak {
  std::size_t index = 0;  ///< between samples[index] and samples[index + 1]
  double difference = 0.0;
};

/// Consecutive differences with the wrong (or zero) sign. A wrong-signed
/// difference smaller than twice the summed tail bounds is truncation noise
/// and is not reported; with zero tail bounds every one counts.
std::vector<MonotoneBreak> strict_monotone_breaks(std::span<const Sample> samples,
                                                  Direction direction);

enum class Sign { positive, negative };

/// True when `value` is certifiably not of the required strict sign, under
/// the same noise rule as strict_monotone_breaks.
bool sign_violated(double value, double tail_bound, Sign required);

}  // namespace entropykit
