#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "majlat/coupling.hpp"
#include "majlat/pmf.hpp"
#include "majlat/sweep.hpp"

namespace majlat {

/// Reads a PMF from a JSON file {"pmf": [...]} or a single-column CSV of
/// masses (an optional non-numeric header line is skipped). The vector is
/// rescaled when its total is off by more than kNormTol unless strict.
/// Raises io_error for unreadable paths and parse_error for malformed data.
OrderedPmf read_pmf_file(const std::filesystem::path& path,
                         bool strict = false);

/// Parses the JSON or CSV text content directly.
OrderedPmf parse_pmf_text(const std::string& text, bool strict = false);

/// Rounds to `digits` significant decimal digits (1..17), so printed values
/// re-parse within 10^-digits.
double round_to_digits(double value, int digits);

/// JSON {"pmf": [...], "prefix_sums": [...]} at the given precision.
std::string pmf_to_json(const OrderedPmf& p, int digits,
                        bool with_prefix_sums = false);

/// CSV "mass,prefix_sum" rows.
std::string pmf_to_csv(const OrderedPmf& p, int digits);

/// CSV "t,L" rows over all breakpoints, starting at (0, 0).
std::string lorenz_to_csv(const OrderedPmf& p, int digits);

/// CSV "i,j,mass" rows with one-based indices, row-major.
std::string coupling_to_csv(const Coupling& c, int digits);

/// Report JSON: {config, samples_run, violations: [{p, q, alpha, gap}],
/// worst_gap} plus wall-time and, for searches, per-order sign tallies.
std::string report_to_json(const VerificationReport& report,
                           const SweepConfig& cfg, int digits);

}  // namespace majlat
