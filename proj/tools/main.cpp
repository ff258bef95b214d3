// majlat: majorization-lattice toolbox. Subcommands cover lattice
// operations, couplings, entropies, gap tables, seeded verification sweeps,
// counterexample searches, and the entropy metric.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "majlat/checks.hpp"
#include "majlat/coupling.hpp"
#include "majlat/econ.hpp"
#include "majlat/entropy.hpp"
#include "majlat/io.hpp"
#include "majlat/lattice.hpp"
#include "majlat/sweep.hpp"

namespace {

using majlat::AlphaOrder;
using majlat::OrderedPmf;
using nlohmann::json;

constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

std::vector<AlphaOrder> parse_alpha_list(const std::string& csv) {
  std::vector<AlphaOrder> out;
  std::size_t from = 0;
  while (from <= csv.size()) {
    const std::size_t comma = csv.find(',', from);
    const std::string token =
        csv.substr(from, comma == std::string::npos ? comma : comma - from);
    if (!token.empty()) out.push_back(AlphaOrder::parse(token));
    if (comma == std::string::npos) break;
    from = comma + 1;
  }
  if (out.empty())
    majlat::raise(majlat::errc::parse_error, "empty alpha list");
  return out;
}

json alpha_json(const AlphaOrder& alpha) {
  if (alpha.kind() == AlphaOrder::Kind::infinity) return json("inf");
  return json(alpha.value());
}

struct Options {
  std::string a_path, b_path, pmf_path;
  std::string family = "renyi";
  std::string alphas = "1";
  std::string alpha = "1";
  std::string base = "e";
  std::string kind = "independent";
  std::string predicate = "subadd";
  std::string out_path, report_path;
  bool csv = false, json_out = false, sorted = false, trim_zeros = false;
  int precision = 9;
  std::uint64_t samples = 10000, seed = 0;
  std::size_t n = 4, m = 2;
};

majlat::LogBase parse_base(const std::string& token) {
  if (token == "e") return majlat::LogBase::e;
  if (token == "2") return majlat::LogBase::two;
  majlat::raise(majlat::errc::parse_error, "base must be 'e' or '2'");
}

void add_precision(CLI::App* cmd, Options& opt) {
  cmd->add_option("--precision", opt.precision, "Output decimal digits")
      ->check(CLI::Range(1, 17));
}

int run_entropy(const Options& opt) {
  const OrderedPmf p = majlat::read_pmf_file(opt.pmf_path);
  const AlphaOrder alpha = AlphaOrder::parse(opt.alpha);
  const majlat::Family family = majlat::parse_family(opt.family);
  const double value = family == majlat::Family::renyi
                           ? majlat::renyi(p, alpha, parse_base(opt.base))
                           : majlat::tsallis(p, alpha);
  json out;
  out["alpha"] = alpha_json(alpha);
  out["family"] = opt.family;
  out["base"] = opt.base;
  out["value"] = majlat::round_to_digits(value, opt.precision);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_lattice_op(const Options& opt, bool join_op) {
  const OrderedPmf a = majlat::read_pmf_file(opt.a_path);
  const OrderedPmf b = majlat::read_pmf_file(opt.b_path);
  const OrderedPmf result =
      join_op ? majlat::join(a, b) : majlat::meet(a, b);
  if (opt.csv)
    std::cout << majlat::pmf_to_csv(result, opt.precision);
  else
    std::cout << majlat::pmf_to_json(result, opt.precision,
                                     /*with_prefix_sums=*/true)
              << "\n";
  return 0;
}

int run_coupling(const Options& opt) {
  const OrderedPmf a = majlat::read_pmf_file(opt.a_path);
  const OrderedPmf b = majlat::read_pmf_file(opt.b_path);
  majlat::Coupling coupling = [&] {
    if (opt.kind == "independent") return majlat::independent_coupling(a, b);
    if (opt.kind == "comonotone") return majlat::comonotone_coupling(a, b);
    majlat::raise(majlat::errc::parse_error,
                  "kind must be independent or comonotone");
  }();
  if (opt.sorted)
    std::cout << majlat::pmf_to_json(majlat::sorted_mass_vector(coupling),
                                     opt.precision)
              << "\n";
  else
    std::cout << majlat::coupling_to_csv(coupling, opt.precision);
  return 0;
}

int run_lorenz(const Options& opt) {
  const OrderedPmf p = majlat::read_pmf_file(opt.pmf_path);
  const std::string csv = majlat::lorenz_to_csv(p, opt.precision);
  if (opt.out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
      majlat::raise(majlat::errc::io_error,
                    "cannot write '" + opt.out_path + "'");
    out << csv;
  }
  return 0;
}

int run_delta(const Options& opt) {
  const OrderedPmf a = majlat::read_pmf_file(opt.a_path);
  const OrderedPmf b = majlat::read_pmf_file(opt.b_path);
  const majlat::Family family = majlat::parse_family(opt.family);
  json rows = json::array();
  for (const AlphaOrder& alpha : parse_alpha_list(opt.alphas)) {
    json row;
    row["alpha"] = alpha_json(alpha);
    row["delta"] = majlat::round_to_digits(
        majlat::delta_supermod(a, b, alpha, family), opt.precision);
    rows.push_back(row);
  }
  json out;
  out["family"] = opt.family;
  out["deltas"] = rows;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_verify(const Options& opt) {
  majlat::SweepConfig cfg;
  cfg.n = opt.n;
  cfg.m = opt.m;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.predicates = {majlat::parse_pred(opt.predicate)};
  cfg.families = {majlat::parse_family(opt.family)};
  cfg.alpha_grid = parse_alpha_list(opt.alphas);

  const majlat::VerificationReport report = majlat::sweep_verify(cfg);
  const std::string text = majlat::report_to_json(report, cfg, opt.precision);
  std::cout << text << "\n";
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path, std::ios::binary);
    if (!out)
      majlat::raise(majlat::errc::io_error,
                    "cannot write '" + opt.report_path + "'");
    out << text << "\n";
  }
  return report.ok() ? 0 : kExitViolations;
}

int run_search(const Options& opt) {
  majlat::SweepConfig cfg;
  cfg.n = opt.n;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.families = {majlat::parse_family(opt.family)};
  cfg.alpha_grid = parse_alpha_list(opt.alpha);

  const majlat::VerificationReport report =
      majlat::search_counterexamples(cfg);
  std::cout << majlat::report_to_json(report, cfg, opt.precision) << "\n";
  return 0;
}

int run_metric(const Options& opt) {
  const OrderedPmf a = majlat::read_pmf_file(opt.a_path);
  const OrderedPmf b = majlat::read_pmf_file(opt.b_path);
  const AlphaOrder alpha = AlphaOrder::parse(opt.alpha);
  json out;
  out["value"] = majlat::round_to_digits(
      majlat::entropy_distance(a, b, alpha, parse_base(opt.base)),
      opt.precision);
  out["alpha"] = alpha_json(alpha);
  out["base"] = opt.base;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_theil(const Options& opt) {
  OrderedPmf p = majlat::read_pmf_file(opt.pmf_path);
  if (opt.trim_zeros) {
    std::vector<double> positive;
    for (double m : p)
      if (m > majlat::kSuppTol) positive.push_back(m);
    p = OrderedPmf::from_values(positive);
  }
  const AlphaOrder alpha = AlphaOrder::parse(opt.alpha);
  const majlat::LogBase base = parse_base(opt.base);
  const double value = alpha.kind() == AlphaOrder::Kind::one
                           ? majlat::theil(p, base)
                           : majlat::renyi_theil(p, alpha, base);
  json out;
  out["value"] = majlat::round_to_digits(value, opt.precision);
  out["alpha"] = alpha_json(alpha);
  out["base"] = opt.base;
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization-lattice toolbox"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* entropy = app.add_subcommand("entropy", "Entropy of a PMF");
  entropy->add_option("--pmf", opt.pmf_path, "PMF file (JSON or CSV)")
      ->required();
  entropy->add_option("--alpha", opt.alpha, "Order (nonnegative or 'inf')");
  entropy->add_option("--family", opt.family, "renyi or tsallis");
  entropy->add_option("--base", opt.base, "Log base: e or 2");
  add_precision(entropy, opt);

  CLI::App* meet_cmd = app.add_subcommand("meet", "Greatest lower bound");
  CLI::App* join_cmd = app.add_subcommand("join", "Least upper bound");
  for (CLI::App* cmd : {meet_cmd, join_cmd}) {
    cmd->add_option("--a", opt.a_path, "First PMF file")->required();
    cmd->add_option("--b", opt.b_path, "Second PMF file")->required();
    auto* json_flag = cmd->add_flag("--json", opt.json_out, "JSON output");
    cmd->add_flag("--csv", opt.csv, "CSV output")->excludes(json_flag);
    add_precision(cmd, opt);
  }

  CLI::App* coupling = app.add_subcommand("coupling", "Build a coupling");
  coupling->add_option("--a", opt.a_path, "Row-marginal PMF file")->required();
  coupling->add_option("--b", opt.b_path, "Column-marginal PMF file")
      ->required();
  coupling->add_option("--kind", opt.kind, "independent or comonotone");
  coupling->add_flag("--sorted", opt.sorted,
                     "Emit the sorted mass vector as JSON");
  add_precision(coupling, opt);

  CLI::App* lorenz = app.add_subcommand("lorenz", "Lorenz curve breakpoints");
  lorenz->add_option("--pmf", opt.pmf_path, "PMF file")->required();
  lorenz->add_option("--out", opt.out_path, "Write CSV here instead");
  add_precision(lorenz, opt);

  CLI::App* delta = app.add_subcommand(
      "delta", "Supermodularity gaps over an order grid");
  delta->add_option("--a", opt.a_path, "First PMF file")->required();
  delta->add_option("--b", opt.b_path, "Second PMF file")->required();
  delta->add_option("--family", opt.family, "renyi or tsallis");
  delta->add_option("--alphas", opt.alphas, "Comma-separated orders");
  add_precision(delta, opt);

  CLI::App* verify =
      app.add_subcommand("verify", "Seeded verification sweep");
  verify->add_option("--predicate", opt.predicate,
                     "subadd|supermod|modular|corollary1|corollary2|"
                     "lemma1|lemma2");
  verify->add_option("--family", opt.family, "renyi or tsallis");
  verify->add_option("--alphas", opt.alphas, "Comma-separated orders");
  verify->add_option("--n", opt.n, "PMF length");
  verify->add_option("--m", opt.m, "Marginal count for corollary2");
  verify->add_option("--samples", opt.samples, "Sample count");
  verify->add_option("--seed", opt.seed, "RNG seed");
  verify->add_option("--report", opt.report_path, "Also write the JSON here");
  add_precision(verify, opt);

  CLI::App* search =
      app.add_subcommand("search", "Search both supermodularity-gap signs");
  search->add_option("--alpha", opt.alpha, "Order, or comma-separated list");
  search->add_option("--family", opt.family, "renyi or tsallis");
  search->add_option("--n", opt.n, "PMF length");
  search->add_option("--samples", opt.samples, "Sample count");
  search->add_option("--seed", opt.seed, "RNG seed");
  add_precision(search, opt);

  CLI::App* metric = app.add_subcommand("metric", "Entropy distance");
  metric->add_option("--a", opt.a_path, "First PMF file")->required();
  metric->add_option("--b", opt.b_path, "Second PMF file")->required();
  metric->add_option("--alpha", opt.alpha, "Order >= 1");
  metric->add_option("--base", opt.base, "Log base: e or 2");
  add_precision(metric, opt);

  CLI::App* theil_cmd = app.add_subcommand("theil", "Theil index");
  theil_cmd->add_option("--pmf", opt.pmf_path, "PMF file")->required();
  theil_cmd->add_option("--alpha", opt.alpha, "Order >= 1");
  theil_cmd->add_flag("--trim-zeros", opt.trim_zeros,
                      "Count only the support toward log n");
  theil_cmd->add_option("--base", opt.base, "Log base: e or 2");
  add_precision(theil_cmd, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (entropy->parsed()) return run_entropy(opt);
    if (meet_cmd->parsed()) return run_lattice_op(opt, /*join_op=*/false);
    if (join_cmd->parsed()) return run_lattice_op(opt, /*join_op=*/true);
    if (coupling->parsed()) return run_coupling(opt);
    if (lorenz->parsed()) return run_lorenz(opt);
    if (delta->parsed()) return run_delta(opt);
    if (verify->parsed()) return run_verify(opt);
    if (search->parsed()) return run_search(opt);
    if (metric->parsed()) return run_metric(opt);
    if (theil_cmd->parsed()) return run_theil(opt);
  } catch (const majlat::Error& e) {
    std::cerr << "majlat: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "majlat: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
