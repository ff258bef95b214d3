#include "majlat/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "majlat/coupling.hpp"

namespace majlat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index)));
}

std::vector<double> dirichlet(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (double& x : v) total += (x = exp1(rng));
  for (double& x : v) x /= total;
  return v;
}

}  // namespace

OrderedPmf SimplexSampler::sample(std::size_t n, std::uint64_t index) const {
  std::mt19937_64 rng = engine_for(seed_, index);
  return OrderedPmf::from_values(dirichlet(rng, n));
}

OrderedPmf SimplexSampler::sample_mixed(std::size_t n,
                                        std::uint64_t index) const {
  if (index % 10 != 9 || n < 2) return sample(n, index);
  std::mt19937_64 rng = engine_for(seed_ ^ 0x5eedc0de5eedc0deULL, index);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v;
  if (index % 20 == 9) {
    // One dominant mass in [0.9, 1), remainder spread by a Dirichlet draw.
    const double head = 0.9 + 0.1 * unit(rng);
    v = dirichlet(rng, n - 1);
    for (double& x : v) x *= 1.0 - head;
    v.insert(v.begin(), head);
  } else {
    // Near-ties around uniform.
    v.assign(n, 1.0 / static_cast<double>(n));
    for (double& x : v) x += 1e-6 * (unit(rng) - 0.5) / static_cast<double>(n);
  }
  // Drive the total to 1 up to one rounding, not merely within kNormTol:
  // cross-structure identities are tested at kCmpTol and would otherwise
  // inherit the slack of the boundary draws.
  double total = 0.0;
  for (double x : v) total += x;
  for (double& x : v) x /= total;
  return OrderedPmf::from_values(v);
}

const char* pred_name(Pred p) noexcept {
  switch (p) {
    case Pred::subadd: return "subadd";
    case Pred::supermod: return "supermod";
    case Pred::modular: return "modular";
    case Pred::corollary1: return "corollary1";
    case Pred::corollary2: return "corollary2";
    case Pred::lemma1: return "lemma1";
    case Pred::lemma2: return "lemma2";
  }
  return "unknown";
}

Pred parse_pred(std::string_view token) {
  for (Pred p : {Pred::subadd, Pred::supermod, Pred::modular,
                 Pred::corollary1, Pred::corollary2, Pred::lemma1,
                 Pred::lemma2})
    if (token == pred_name(p)) return p;
  raise(errc::parse_error, "unknown predicate '" + std::string(token) + "'");
}

Family parse_family(std::string_view token) {
  if (token == "renyi") return Family::renyi;
  if (token == "tsallis") return Family::tsallis;
  raise(errc::parse_error, "unknown family '" + std::string(token) + "'");
}

std::pair<OrderedPmf, OrderedPmf> gap_positive_pair() {
  return {OrderedPmf::from_values({0.6, 0.2, 0.2}),
          OrderedPmf::from_values({0.45, 0.4, 0.15})};
}

std::pair<OrderedPmf, OrderedPmf> gap_negative_pair() {
  return {OrderedPmf::from_values(
              {0.398886918, 0.370328848, 0.228811150, 0.001973084}),
          OrderedPmf::from_values(
              {0.539996140, 0.229554617, 0.116684354, 0.113764889})};
}

namespace {

std::size_t resolve_threads(std::size_t requested, std::uint64_t samples) {
  std::size_t t = requested;
  if (t == 0) {
    if (const char* env = std::getenv("MAJLAT_THREADS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) t = static_cast<std::size_t>(parsed);
    }
    if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  }
  return std::max<std::size_t>(
      1, std::min<std::size_t>(t, static_cast<std::size_t>(samples)));
}

bool fixture_fits(const std::pair<OrderedPmf, OrderedPmf>& pair,
                  std::size_t n) {
  return pair.first.size() <= n && pair.second.size() <= n;
}

std::pair<OrderedPmf, OrderedPmf> sample_pair(const SweepConfig& cfg,
                                              const SimplexSampler& sampler,
                                              std::uint64_t index) {
  if (cfg.inject_fixtures) {
    if (index == 0 && fixture_fits(gap_positive_pair(), cfg.n)) {
      auto [a, b] = gap_positive_pair();
      return {a.padded(cfg.n), b.padded(cfg.n)};
    }
    if (index == 1 && fixture_fits(gap_negative_pair(), cfg.n)) {
      auto [a, b] = gap_negative_pair();
      return {a.padded(cfg.n), b.padded(cfg.n)};
    }
  }
  const std::uint64_t base = 2 * index;
  if (cfg.mixed_sampling)
    return {sampler.sample_mixed(cfg.n, base),
            sampler.sample_mixed(cfg.n, base + 1)};
  return {sampler.sample(cfg.n, base), sampler.sample(cfg.n, base + 1)};
}

std::vector<std::vector<double>> as_inputs(
    std::initializer_list<const OrderedPmf*> ps) {
  std::vector<std::vector<double>> out;
  out.reserve(ps.size());
  for (const OrderedPmf* p : ps) out.push_back(p->masses());
  return out;
}

struct Accumulator {
  std::vector<Violation> violations;
  double worst_gap = std::numeric_limits<double>::infinity();

  void record(double gap, double tol, std::string predicate, Family family,
              const AlphaOrder& alpha, std::uint64_t index,
              std::vector<std::vector<double>> inputs) {
    worst_gap = std::min(worst_gap, gap);
    if (gap < -tol)
      violations.push_back(Violation{std::move(predicate), family, alpha, gap,
                                     index, std::move(inputs)});
  }
};

bool is_modular_combo(Family f, const AlphaOrder& a) {
  if (f == Family::renyi)
    return a.kind() == AlphaOrder::Kind::zero ||
           a.kind() == AlphaOrder::Kind::infinity;
  return a.kind() == AlphaOrder::Kind::zero;
}

bool needs_alpha(Pred p) { return p != Pred::lemma1 && p != Pred::lemma2; }

void validate(const SweepConfig& cfg) {
  if (cfg.samples < 1) raise(errc::empty_input, "sweep needs samples >= 1");
  if (cfg.n < 2) raise(errc::empty_input, "sweep needs n >= 2");
  if (cfg.m < 1) raise(errc::empty_input, "sweep needs m >= 1");
  const bool any_alpha_pred =
      std::any_of(cfg.predicates.begin(), cfg.predicates.end(), needs_alpha);
  if (any_alpha_pred && cfg.alpha_grid.empty())
    raise(errc::empty_list, "alpha grid must not be empty");
  if (any_alpha_pred && cfg.families.empty())
    raise(errc::empty_list, "family list must not be empty");
  for (Family f : cfg.families)
    if (f == Family::tsallis)
      for (const AlphaOrder& a : cfg.alpha_grid)
        if (a.kind() == AlphaOrder::Kind::infinity)
          raise(errc::unsupported_order,
                "Tsallis sweeps exclude alpha = inf");
  for (Pred pred : cfg.predicates)
    if (pred == Pred::modular)
      for (Family f : cfg.families)
        for (const AlphaOrder& a : cfg.alpha_grid)
          if (!is_modular_combo(f, a))
            raise(errc::unsupported_order,
                  "modularity holds only for Renyi at {0, inf} and Tsallis "
                  "at 0");
}

void run_sample(const SweepConfig& cfg, const SimplexSampler& sampler,
                std::uint64_t index, Accumulator& acc) {
  const bool needs_pair =
      std::any_of(cfg.predicates.begin(), cfg.predicates.end(),
                  [](Pred p) { return p != Pred::corollary2; });
  std::pair<OrderedPmf, OrderedPmf> pq =
      needs_pair ? sample_pair(cfg, sampler, index)
                 : std::make_pair(OrderedPmf::point_mass(1),
                                  OrderedPmf::point_mass(1));
  const OrderedPmf& p = pq.first;
  const OrderedPmf& q = pq.second;

  for (Pred pred : cfg.predicates) {
    switch (pred) {
      case Pred::subadd:
        for (Family f : cfg.families)
          for (const AlphaOrder& a : cfg.alpha_grid) {
            const CheckResult r = check_subadditivity(p, q, a, f);
            acc.record(r.gap, kEqTol, "subadd", f, a, index,
                       as_inputs({&p, &q}));
          }
        break;
      case Pred::supermod:
        for (Family f : cfg.families)
          for (const AlphaOrder& a : cfg.alpha_grid) {
            const double d = delta_supermod(p, q, a, f);
            acc.record(d, kEqTol, "supermod", f, a, index,
                       as_inputs({&p, &q}));
          }
        break;
      case Pred::modular:
        for (Family f : cfg.families)
          for (const AlphaOrder& a : cfg.alpha_grid) {
            const double d = delta_supermod(p, q, a, f);
            acc.record(-std::abs(d), kEqTol, "modular", f, a, index,
                       as_inputs({&p, &q}));
          }
        break;
      case Pred::corollary1:
        for (const AlphaOrder& a : cfg.alpha_grid) {
          const CheckResult r = check_corollary1(p, q, a);
          acc.record(r.gap, kEqTol, "corollary1", Family::renyi, a, index,
                     as_inputs({&p, &q}));
        }
        break;
      case Pred::corollary2: {
        std::vector<OrderedPmf> ps;
        ps.reserve(cfg.m);
        for (std::size_t i = 0; i < cfg.m; ++i) {
          const std::uint64_t sub = cfg.m * index + i;
          ps.push_back(cfg.mixed_sampling ? sampler.sample_mixed(cfg.n, sub)
                                          : sampler.sample(cfg.n, sub));
        }
        std::vector<std::vector<double>> inputs;
        for (const auto& x : ps) inputs.push_back(x.masses());
        for (const AlphaOrder& a : cfg.alpha_grid) {
          const SandwichResult r = check_corollary2(ps, a);
          acc.record(std::min(r.lower.gap, r.upper.gap), kEqTol,
                     "corollary2", Family::renyi, a, index, inputs);
        }
        break;
      }
      case Pred::lemma1: {
        const Coupling pc = comonotone_coupling(p, q);
        const OrderedPmf w = meet(p, q);
        const OrderedPmf v = join(p, q);
        const RawVector via_max = aggregate_by_extremum(pc, Extremum::max);
        const RawVector via_min = aggregate_by_extremum(pc, Extremum::min);
        const OrderedPmf v2 = concavify(via_min);
        double err = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k)
          err = std::max(err, std::abs(w[k] - via_max.values[k]));
        for (std::size_t k = 0; k < v.size(); ++k)
          err = std::max(err, std::abs(v[k] - v2[k]));
        acc.record(-err, kCmpTol, "lemma1", Family::renyi, AlphaOrder::one(),
                   index, as_inputs({&p, &q}));
        break;
      }
      case Pred::lemma2: {
        const OrderedPmf sorted_ind =
            sorted_mass_vector(independent_coupling(p, q));
        const OrderedPmf sorted_com =
            sorted_mass_vector(comonotone_coupling(p, q));
        const double margin = majorization_margin(sorted_ind, sorted_com);
        acc.record(margin, kCmpTol, "lemma2", Family::renyi,
                   AlphaOrder::one(), index, as_inputs({&p, &q}));
        break;
      }
    }
  }
}

VerificationReport run_parallel(
    const SweepConfig& cfg,
    const std::function<void(std::uint64_t, Accumulator&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers = resolve_threads(cfg.threads, cfg.samples);
  std::vector<Accumulator> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (cfg.samples + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, cfg.samples);
    pool.emplace_back([&body, &parts, &errors, w, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) body(i, parts[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  VerificationReport report;
  report.samples_run = cfg.samples;
  report.seed = cfg.seed;
  report.worst_gap = std::numeric_limits<double>::infinity();
  for (Accumulator& part : parts) {
    report.worst_gap = std::min(report.worst_gap, part.worst_gap);
    std::move(part.violations.begin(), part.violations.end(),
              std::back_inserter(report.violations));
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace

VerificationReport sweep_verify(const SweepConfig& cfg) {
  validate(cfg);
  const SimplexSampler sampler(cfg.seed);
  return run_parallel(cfg, [&cfg, &sampler](std::uint64_t i,
                                            Accumulator& acc) {
    run_sample(cfg, sampler, i, acc);
  });
}

VerificationReport search_counterexamples(const SweepConfig& cfg) {
  validate(cfg);
  const SimplexSampler sampler(cfg.seed);

  struct SignTally {
    std::uint64_t positive = 0, negative = 0;
    double max_gap = 0.0, min_gap = 0.0;
    std::uint64_t first_positive_at = 0, first_negative_at = 0;
    std::vector<std::vector<double>> first_positive, first_negative;
  };

  if (cfg.alpha_grid.empty())
    raise(errc::empty_list, "search needs an alpha grid");
  if (cfg.families.empty())
    raise(errc::empty_list, "search needs a family");
  const Family family = cfg.families.front();
  if (family == Family::tsallis)
    for (const AlphaOrder& a : cfg.alpha_grid)
      if (a.kind() == AlphaOrder::Kind::infinity)
        raise(errc::unsupported_order, "Tsallis searches exclude alpha = inf");

  const std::size_t n_alpha = cfg.alpha_grid.size();
  const std::size_t workers = resolve_threads(cfg.threads, cfg.samples);
  std::vector<std::vector<SignTally>> parts(
      workers, std::vector<SignTally>(n_alpha));
  std::vector<std::exception_ptr> errors(workers);

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (cfg.samples + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, cfg.samples);
    pool.emplace_back([&, w, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) {
          const auto [p, q] = sample_pair(cfg, sampler, i);
          for (std::size_t a = 0; a < n_alpha; ++a) {
            const double d = delta_supermod(p, q, cfg.alpha_grid[a], family);
            SignTally& tall = parts[w][a];
            tall.max_gap = std::max(tall.max_gap, d);
            tall.min_gap = std::min(tall.min_gap, d);
            if (d > kEqTol) {
              if (tall.positive++ == 0) {
                tall.first_positive_at = i;
                tall.first_positive = {p.masses(), q.masses()};
              }
            } else if (d < -kEqTol) {
              if (tall.negative++ == 0) {
                tall.first_negative_at = i;
                tall.first_negative = {p.masses(), q.masses()};
              }
            }
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  VerificationReport report;
  report.samples_run = cfg.samples;
  report.seed = cfg.seed;
  report.worst_gap = 0.0;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (std::size_t a = 0; a < n_alpha; ++a) {
    SearchStat stat;
    stat.alpha = cfg.alpha_grid[a];
    bool have_pos = false, have_neg = false;
    std::uint64_t pos_at = 0, neg_at = 0;
    for (std::size_t w = 0; w < workers; ++w) {
      const SignTally& tall = parts[w][a];
      stat.positive += tall.positive;
      stat.negative += tall.negative;
      stat.max_gap = std::max(stat.max_gap, tall.max_gap);
      stat.min_gap = std::min(stat.min_gap, tall.min_gap);
      if (tall.positive > 0 && (!have_pos || tall.first_positive_at < pos_at)) {
        have_pos = true;
        pos_at = tall.first_positive_at;
        stat.first_positive = tall.first_positive;
      }
      if (tall.negative > 0 && (!have_neg || tall.first_negative_at < neg_at)) {
        have_neg = true;
        neg_at = tall.first_negative_at;
        stat.first_negative = tall.first_negative;
      }
    }
    report.worst_gap = std::min(report.worst_gap, stat.min_gap);
    report.search_stats.push_back(std::move(stat));
  }
  return report;
}

}  // namespace majlat
