#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "majlat/checks.hpp"

namespace majlat {

/// Seeded generator of random ordered PMFs, uniform on the simplex
/// (symmetric Dirichlet with unit concentration). Each draw is a pure
/// function of (seed, index), so sweeps are reproducible for any worker
/// count and samples can be regenerated from a report.
class SimplexSampler {
 public:
  explicit SimplexSampler(std::uint64_t seed) : seed_(seed) {}

  /// Dirichlet(1) draw, sorted nonincreasingly.
  OrderedPmf sample(std::size_t n, std::uint64_t index) const;

  /// Like sample(), but every tenth index draws a boundary case instead:
  /// either one dominant mass >= 0.9 or a near-tied, almost uniform vector.
  /// Violations of order-uniform inequalities, if any, hide near such
  /// corners.
  OrderedPmf sample_mixed(std::size_t n, std::uint64_t index) const;

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

enum class Pred {
  subadd,
  supermod,
  modular,
  corollary1,
  corollary2,
  lemma1,
  lemma2,
};

const char* pred_name(Pred p) noexcept;
Pred parse_pred(std::string_view token);
Family parse_family(std::string_view token);

struct SweepConfig {
  std::size_t n = 4;
  std::vector<AlphaOrder> alpha_grid;
  std::vector<Family> families = {Family::renyi};
  std::vector<Pred> predicates;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t m = 2;        // marginal count for the m-PMF bound
  std::size_t threads = 0;  // 0: MAJLAT_THREADS env var, else hardware
  bool inject_fixtures = true;
  bool mixed_sampling = true;
};

struct Violation {
  std::string predicate;
  Family family = Family::renyi;
  AlphaOrder alpha = AlphaOrder::one();
  double gap = 0.0;
  std::uint64_t sample_index = 0;
  std::vector<std::vector<double>> inputs;
};

/// Per-order tally of supermodularity-gap signs seen during a search.
struct SearchStat {
  AlphaOrder alpha = AlphaOrder::one();
  std::uint64_t positive = 0;  // gap > kEqTol
  std::uint64_t negative = 0;  // gap < -kEqTol
  double max_gap = 0.0;
  double min_gap = 0.0;
  // Earliest sample of each sign (empty when none found).
  std::vector<std::vector<double>> first_positive;
  std::vector<std::vector<double>> first_negative;
};

struct VerificationReport {
  std::uint64_t samples_run = 0;
  std::vector<Violation> violations;
  double worst_gap = 0.0;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
  std::vector<SearchStat> search_stats;  // populated by searches only

  bool ok() const noexcept { return violations.empty(); }
};

/// Fixture pairs with known gap signs for Renyi orders in (0, 1): the first
/// has a positive supermodularity gap, the second a negative one. They are
/// injected as samples 0 and 1 of every sweep whose dimension admits them,
/// so regressions never depend on sampling luck.
std::pair<OrderedPmf, OrderedPmf> gap_positive_pair();
std::pair<OrderedPmf, OrderedPmf> gap_negative_pair();

/// Runs every configured predicate over seeded random inputs and collects
/// violations. Deterministic given (config, seed) for any thread count.
VerificationReport sweep_verify(const SweepConfig& cfg);

/// Samples pairs and tallies both signs of the supermodularity gap for each
/// order in the grid, keeping the earliest witness pair of each sign.
VerificationReport search_counterexamples(const SweepConfig& cfg);

}  // namespace majlat
