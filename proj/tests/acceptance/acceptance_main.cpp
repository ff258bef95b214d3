// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned in code next to its check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "majlat/checks.hpp"
#include "majlat/coupling.hpp"
#include "majlat/econ.hpp"
#include "majlat/entropy.hpp"
#include "majlat/exact.hpp"
#include "majlat/io.hpp"
#include "majlat/lattice.hpp"
#include "majlat/sweep.hpp"

using namespace majlat;

namespace {

struct GapRow {
  const char* alpha;
  double delta;
};

// Published supermodularity-gap tables for the two fixture pairs.
constexpr GapRow kPositiveTable[] = {
    {"0", 0.0},          {"0.2", 0.00580417}, {"0.5", 0.01387056},
    {"0.7", 0.01882329}, {"0.9", 0.02343356}, {"1", 0.02560746},
    {"2", 0.04204643},   {"inf", 0.0},
};
constexpr GapRow kNegativeTable[] = {
    {"0", 0.0},           {"0.2", -0.00090983}, {"0.5", -0.00234206},
    {"0.7", -0.00198286}, {"0.9", -0.00067566}, {"1", 0.00022487},
    {"2", 0.00977669},    {"inf", 0.0},
};

std::vector<AlphaOrder> grid(std::initializer_list<const char*> tokens) {
  std::vector<AlphaOrder> out;
  for (const char* t : tokens) out.push_back(AlphaOrder::parse(t));
  return out;
}

bool check_table(const std::pair<OrderedPmf, OrderedPmf>& pair,
                 const GapRow* rows, std::size_t count, std::string& detail) {
  for (std::size_t i = 0; i < count; ++i) {
    const double d = delta_supermod(pair.first, pair.second,
                                    AlphaOrder::parse(rows[i].alpha),
                                    Family::renyi);
    if (std::abs(d - rows[i].delta) > 1e-6) {
      std::ostringstream msg;
      msg << "alpha=" << rows[i].alpha << " gap=" << d
          << " expected=" << rows[i].delta;
      detail = msg.str();
      return false;
    }
  }
  return true;
}

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

// Non-degenerate draw: all masses at least 0.15 / n, so the second-largest
// mass clears 0.01 for n <= 8 and strict inequalities have numeric room.
OrderedPmf away_from_corners(const SimplexSampler& sampler, std::size_t n,
                             std::uint64_t index) {
  const OrderedPmf raw = sampler.sample(n, index);
  std::vector<double> v(raw.masses());
  for (double& x : v) x = 0.85 * x + 0.15 / static_cast<double>(n);
  return OrderedPmf::from_values(v);
}

bool criterion_gap_table_positive(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  if (!check_table(gap_positive_pair(), kPositiveTable,
                   std::size(kPositiveTable), detail))
    return false;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (secs >= 1.0) {
    detail = "runtime " + std::to_string(secs) + "s exceeds 1s";
    return false;
  }
  return true;
}

bool criterion_gap_table_negative(std::string& detail) {
  return check_table(gap_negative_pair(), kNegativeTable,
                     std::size(kNegativeTable), detail);
}

bool criterion_tsallis_sums(std::string& detail) {
  const auto [p, q] = gap_positive_pair();
  const OrderedPmf w = meet(p, q);
  const OrderedPmf v = join(p, q);

  const struct {
    double alpha, lattice_sum, input_sum;
  } rows[] = {{2.0, 1.190, 1.175}, {0.5, 2.743, 2.719}};
  for (const auto& row : rows) {
    const AlphaOrder a = AlphaOrder::of(row.alpha);
    const double lat = tsallis(w, a) + tsallis(v, a);
    const double inp = tsallis(p, a) + tsallis(q, a);
    if (round3(lat) != row.lattice_sum || round3(inp) != row.input_sum) {
      std::ostringstream msg;
      msg << "alpha=" << row.alpha << " sums " << round3(lat) << "/"
          << round3(inp) << " expected " << row.lattice_sum << "/"
          << row.input_sum;
      detail = msg.str();
      return false;
    }
    if (!(lat > inp)) {
      detail = "lattice sum not larger at alpha=" + std::to_string(row.alpha);
      return false;
    }
  }
  return true;
}

bool run_split_sweep(Pred pred, double budget_seconds, std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t total = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    SweepConfig cfg;
    cfg.n = n;
    cfg.predicates = {pred};
    cfg.samples = 1500;  // 7 dimensions -> 10500 pairs
    cfg.seed = 1000 + n;
    cfg.mixed_sampling = false;  // plain Dirichlet pairs
    cfg.inject_fixtures = false;
    const VerificationReport report = sweep_verify(cfg);
    total += report.samples_run;
    if (!report.ok()) {
      detail = "violations at n=" + std::to_string(n) +
               ", worst gap=" + std::to_string(report.worst_gap);
      return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_seconds > 0.0 && secs >= budget_seconds) {
    detail = "runtime " + std::to_string(secs) + "s exceeds budget";
    return false;
  }
  if (total < 10000) {
    detail = "only " + std::to_string(total) + " pairs";
    return false;
  }
  return true;
}

bool criterion_coupling_majorization(std::string& detail) {
  return run_split_sweep(Pred::lemma2, 10.0, detail);
}

bool criterion_coupling_aggregation(std::string& detail) {
  return run_split_sweep(Pred::lemma1, 0.0, detail);
}

bool criterion_subadditivity(std::string& detail) {
  SweepConfig cfg;
  cfg.n = 6;
  cfg.samples = 10000;
  cfg.seed = 6001;
  cfg.predicates = {Pred::subadd};

  cfg.families = {Family::renyi};
  cfg.alpha_grid = grid({"0", "0.2", "0.5", "1", "2", "5", "inf"});
  if (!sweep_verify(cfg).ok()) {
    detail = "renyi violations";
    return false;
  }

  cfg.families = {Family::tsallis};
  cfg.alpha_grid = grid({"0", "0.2", "0.5", "1", "2", "5"});
  if (!sweep_verify(cfg).ok()) {
    detail = "tsallis violations";
    return false;
  }

  // Equality flag vs the structural deterministic-input predicate on
  // targeted boundary cases.
  const SimplexSampler sampler(6002);
  const auto renyi_grid = grid({"0", "0.2", "0.5", "1", "2", "5", "inf"});
  const auto tsallis_grid = grid({"0", "0.2", "0.5", "1", "2", "5"});
  for (int t = 0; t < 1000; ++t) {
    const bool deterministic_case = t % 2 == 0;
    const OrderedPmf p = deterministic_case
                             ? OrderedPmf::point_mass(6)
                             : away_from_corners(sampler, 6, 2 * t);
    const OrderedPmf q = away_from_corners(sampler, 6, 2 * t + 1);
    const bool structural = check_equality_condition_subadd(p, q);
    if (structural != deterministic_case) {
      detail = "structural predicate misclassified a targeted case";
      return false;
    }
    for (Family f : {Family::renyi, Family::tsallis})
      for (const AlphaOrder& a :
           (f == Family::renyi ? renyi_grid : tsallis_grid)) {
        const CheckResult r = check_subadditivity(p, q, a, f);
        if (r.equality != structural) {
          std::ostringstream msg;
          msg << "equality flag disagrees at t=" << t << " alpha=" << a.str()
              << " family=" << family_name(f) << " gap=" << r.gap;
          detail = msg.str();
          return false;
        }
        if (!structural && a.kind() != AlphaOrder::Kind::zero &&
            r.gap <= 1e-6) {
          detail = "strict gap collapsed on a non-degenerate pair";
          return false;
        }
      }
  }
  return true;
}

bool criterion_supermodularity(std::string& detail) {
  SweepConfig cfg;
  cfg.n = 6;
  cfg.samples = 10000;
  cfg.seed = 7001;
  cfg.predicates = {Pred::supermod};

  cfg.families = {Family::renyi};
  cfg.alpha_grid = grid({"0", "1", "1.5", "2", "5", "inf"});
  if (!sweep_verify(cfg).ok()) {
    detail = "renyi violations";
    return false;
  }

  cfg.families = {Family::tsallis};
  cfg.alpha_grid = grid({"0", "0.2", "0.5", "1", "2", "5"});
  if (!sweep_verify(cfg).ok()) {
    detail = "tsallis violations";
    return false;
  }

  // Modularity: |gap| <= 1e-9 on every sample at the modular orders.
  cfg.predicates = {Pred::modular};
  cfg.families = {Family::renyi};
  cfg.alpha_grid = grid({"0", "inf"});
  VerificationReport mod = sweep_verify(cfg);
  if (!mod.ok() || mod.worst_gap < -1e-9) {
    detail = "renyi modularity worst gap " + std::to_string(mod.worst_gap);
    return false;
  }
  cfg.families = {Family::tsallis};
  cfg.alpha_grid = grid({"0"});
  mod = sweep_verify(cfg);
  if (!mod.ok() || mod.worst_gap < -1e-9) {
    detail = "tsallis modularity worst gap " + std::to_string(mod.worst_gap);
    return false;
  }
  return true;
}

bool criterion_gap_sign_search(std::string& detail) {
  SweepConfig cfg;
  cfg.n = 4;
  cfg.alpha_grid = grid({"0.2", "0.5", "0.9"});
  cfg.families = {Family::renyi};
  cfg.samples = 10000;
  cfg.seed = 8001;
  const VerificationReport report = search_counterexamples(cfg);
  for (const SearchStat& stat : report.search_stats) {
    if (stat.positive == 0 || stat.negative == 0) {
      detail = "missing a gap sign at alpha=" + stat.alpha.str();
      return false;
    }
    if (stat.first_positive.empty() || stat.first_negative.empty()) {
      detail = "missing a witness pair at alpha=" + stat.alpha.str();
      return false;
    }
  }
  return true;
}

bool criterion_sandwich_bounds(std::string& detail) {
  SweepConfig cfg;
  cfg.n = 5;
  cfg.samples = 10000;
  cfg.seed = 9001;
  cfg.alpha_grid = grid({"0", "0.2", "0.5", "1", "2", "5", "inf"});

  cfg.predicates = {Pred::corollary1};
  if (!sweep_verify(cfg).ok()) {
    detail = "two-entropy bound violations";
    return false;
  }

  cfg.predicates = {Pred::corollary2};
  for (std::size_t m : {2u, 3u, 4u}) {
    cfg.m = m;
    if (!sweep_verify(cfg).ok()) {
      detail = "m-PMF bound violations at m=" + std::to_string(m);
      return false;
    }
  }

  // Equality in the two-entropy bound holds exactly for identical inputs.
  const SimplexSampler sampler(9002);
  const auto positive_grid = grid({"0.5", "1", "2"});
  for (int t = 0; t < 500; ++t) {
    const OrderedPmf x = away_from_corners(sampler, 5, 3 * t);
    OrderedPmf y = away_from_corners(sampler, 5, 3 * t + 1);
    double separation = 0.0;
    for (std::size_t k = 0; k < 5; ++k)
      separation = std::max(separation, std::abs(x[k] - y[k]));
    if (separation < 1e-3) continue;
    for (const AlphaOrder& a : positive_grid) {
      if (!check_corollary1(x, x, a).equality) {
        detail = "equality flag missing for identical inputs";
        return false;
      }
      const CheckResult r = check_corollary1(x, y, a);
      if (r.equality || r.gap <= 1e-9) {
        detail = "equality flag set for distinct inputs at alpha=" + a.str();
        return false;
      }
    }
  }
  return true;
}

bool criterion_exact_lattice_oracle(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const struct {
    std::size_t n;
    unsigned max_den;
  } grids[] = {{3, 8}, {4, 6}};
  for (const auto& g : grids) {
    const std::vector<exact::RationalPmf> grid_pmfs =
        exact::enumerate_grid(g.n, g.max_den);
    for (std::size_t i = 0; i < grid_pmfs.size(); ++i)
      for (std::size_t j = i; j < grid_pmfs.size(); ++j) {
        if (!exact::glb_is_universal(grid_pmfs[i], grid_pmfs[j], grid_pmfs)) {
          detail = "glb universality failed on the exact grid";
          return false;
        }
        if (!exact::lub_is_universal(grid_pmfs[i], grid_pmfs[j], grid_pmfs)) {
          detail = "lub universality failed on the exact grid";
          return false;
        }
      }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (secs >= 60.0) {
    detail = "runtime " + std::to_string(secs) + "s exceeds 60s";
    return false;
  }
  return true;
}

bool criterion_metric_axioms(std::string& detail) {
  for (const char* token : {"1", "2"}) {
    const VerificationReport report =
        check_metric_axioms(10000, 5, AlphaOrder::parse(token), 11001);
    if (!report.ok()) {
      detail = std::string("axiom violations at alpha=") + token;
      return false;
    }
  }

  const SimplexSampler sampler(11002);
  const OrderedPmf u = OrderedPmf::uniform(5);
  for (int t = 0; t < 1000; ++t) {
    const OrderedPmf x = sampler.sample(5, t);
    const double lhs = entropy_distance(x, u, AlphaOrder::one());
    const double rhs = std::log(5.0) - shannon(x);
    if (std::abs(lhs - rhs) > 1e-12) {
      detail = "distance-to-uniform identity off by " +
               std::to_string(lhs - rhs);
      return false;
    }
  }
  return true;
}

bool criterion_product_additivity(std::string& detail) {
  const SimplexSampler sampler(12001);
  const auto renyi_grid = grid({"0", "0.5", "1", "2", "inf"});
  const auto tsallis_grid = grid({"0.2", "0.5", "2", "5"});
  for (int t = 0; t < 1000; ++t) {
    const OrderedPmf p = sampler.sample(6, 2 * t);
    const OrderedPmf q = sampler.sample(5, 2 * t + 1);

    const OrderedPmf joint =
        sorted_mass_vector(independent_coupling(p, q));
    for (const AlphaOrder& a : renyi_grid) {
      const double residual =
          std::abs(renyi(joint, a) - renyi(p, a) - renyi(q, a));
      if (residual > 1e-9) {
        detail = "additivity residual " + std::to_string(residual) +
                 " at alpha=" + a.str();
        return false;
      }
    }
    for (const AlphaOrder& a : tsallis_grid) {
      const double residual = pseudo_additivity_residual(p, q, a);
      if (residual > 1e-9) {
        detail = "pseudo-additivity residual " + std::to_string(residual) +
                 " at alpha=" + a.str();
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<bool(std::string&)> run;
  } criteria[] = {
      {"renyi gap table, 3-point fixture pair (<1s)",
       criterion_gap_table_positive},
      {"renyi gap table, 4-point fixture pair", criterion_gap_table_negative},
      {"tsallis lattice sums at orders 2 and 1/2", criterion_tsallis_sums},
      {"sorted comonotone majorizes sorted independent, 10^4 pairs (<10s)",
       criterion_coupling_majorization},
      {"extremum aggregations equal meet/join, 10^4 pairs",
       criterion_coupling_aggregation},
      {"subadditivity sweeps + equality-flag agreement",
       criterion_subadditivity},
      {"supermodularity sweeps + modularity at edge orders",
       criterion_supermodularity},
      {"both gap signs found for orders in (0,1)", criterion_gap_sign_search},
      {"two-entropy and m-PMF sandwich bounds", criterion_sandwich_bounds},
      {"exact-rational glb/lub universality grids (<60s)",
       criterion_exact_lattice_oracle},
      {"metric axioms and distance-to-uniform identity",
       criterion_metric_axioms},
      {"product additivity and pseudo-additivity residuals",
       criterion_product_additivity},
  };

  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %02d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                criterion.name, secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
