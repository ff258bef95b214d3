#include "majlat/econ.hpp"

#include <chrono>
#include <cmath>

#include "majlat/lattice.hpp"

namespace majlat {

namespace {

void require_metric_order(const AlphaOrder& alpha) {
  const bool ok = alpha.kind() == AlphaOrder::Kind::one ||
                  alpha.kind() == AlphaOrder::Kind::infinity ||
                  (alpha.is_finite() && alpha.value() > 1.0);
  if (!ok)
    raise(errc::unsupported_order,
          "entropy distance is a metric only for alpha >= 1");
}

}  // namespace

double entropy_distance(const OrderedPmf& x, const OrderedPmf& y,
                        const AlphaOrder& alpha, LogBase base) {
  require_metric_order(alpha);
  return renyi(x, alpha, base) + renyi(y, alpha, base) -
         2.0 * renyi(join(x, y), alpha, base);
}

double theil(const OrderedPmf& x, LogBase base) {
  return (std::log(static_cast<double>(x.size())) - shannon(x)) /
         log_of_base(base);
}

double renyi_theil(const OrderedPmf& x, const AlphaOrder& alpha,
                   LogBase base) {
  require_metric_order(alpha);
  return std::log(static_cast<double>(x.size())) / log_of_base(base) -
         renyi(x, alpha, base);
}

VerificationReport check_metric_axioms(std::uint64_t samples, std::size_t n,
                                       const AlphaOrder& alpha,
                                       std::uint64_t seed) {
  require_metric_order(alpha);
  const auto start = std::chrono::steady_clock::now();
  const SimplexSampler sampler(seed);

  VerificationReport report;
  report.samples_run = samples;
  report.seed = seed;
  report.worst_gap = std::numeric_limits<double>::infinity();

  auto note = [&report](const char* axiom, double gap, const AlphaOrder& a,
                        std::uint64_t index,
                        std::vector<std::vector<double>> inputs) {
    report.worst_gap = std::min(report.worst_gap, gap);
    if (gap < -kEqTol)
      report.violations.push_back(
          Violation{axiom, Family::renyi, a, gap, index, std::move(inputs)});
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    const OrderedPmf x = sampler.sample(n, 3 * i);
    const OrderedPmf y = sampler.sample(n, 3 * i + 1);
    const OrderedPmf z = sampler.sample(n, 3 * i + 2);

    const double dxy = entropy_distance(x, y, alpha);
    const double dyz = entropy_distance(y, z, alpha);
    const double dxz = entropy_distance(x, z, alpha);

    note("nonnegativity", std::min({dxy, dyz, dxz}), alpha, i,
         {x.masses(), y.masses(), z.masses()});
    note("triangle", dxy + dyz - dxz, alpha, i,
         {x.masses(), y.masses(), z.masses()});

    // The distance expression is symmetric term by term, so symmetry must
    // hold bit for bit.
    const double dyx = entropy_distance(y, x, alpha);
    note("symmetry", dxy == dyx ? 0.0 : -1.0, alpha, i,
         {x.masses(), y.masses()});

    // Identity of indiscernibles, tested in both directions.
    const double dxx = entropy_distance(x, x, alpha);
    note("identity", -std::abs(dxx), alpha, i, {x.masses()});
    if (std::abs(dxy) <= kEqTol)
      note("indiscernible", equal_up_to_padding(x, y, kCmpTol) ? 0.0 : -1.0,
           alpha, i, {x.masses(), y.masses()});
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace majlat
