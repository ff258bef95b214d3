#include "majlat/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace majlat {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::negative_mass: return "NegativeMass";
    case errc::not_normalized: return "NotNormalized";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::unsupported_order: return "UnsupportedOrder";
    case errc::empty_list: return "EmptyList";
    case errc::not_comonotone: return "NotComonotone";
    case errc::not_rational: return "NotRational";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

namespace {

constexpr double kNegClampTol = 1e-12;

std::vector<double> checked_masses(std::span<const double> values,
                                   bool strict) {
  if (values.empty()) raise(errc::empty_input, "PMF needs at least one mass");

  std::vector<double> masses(values.begin(), values.end());
  for (double& m : masses) {
    if (!std::isfinite(m))
      raise(errc::not_normalized, "non-finite mass");
    if (m < -kNegClampTol)
      raise(errc::negative_mass, "mass " + std::to_string(m) + " below -1e-12");
    if (m < 0.0) m = 0.0;
  }

  const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (std::abs(total - 1.0) > kNormTol) {
    if (strict)
      raise(errc::not_normalized,
            "masses sum to " + std::to_string(total) + " in strict mode");
    if (total <= 0.0)
      raise(errc::not_normalized, "cannot rescale an all-zero vector");
    for (double& m : masses) m /= total;
  }

  std::stable_sort(masses.begin(), masses.end(), std::greater<double>());
  return masses;
}

}  // namespace

OrderedPmf OrderedPmf::from_values(std::span<const double> values,
                                   bool strict) {
  return OrderedPmf(checked_masses(values, strict));
}

OrderedPmf OrderedPmf::from_values(std::initializer_list<double> values,
                                   bool strict) {
  return from_values(std::span<const double>(values.begin(), values.size()),
                     strict);
}

OrderedPmf OrderedPmf::uniform(std::size_t n) {
  if (n == 0) raise(errc::empty_input, "uniform PMF needs n >= 1");
  return OrderedPmf(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

OrderedPmf OrderedPmf::point_mass(std::size_t n) {
  if (n == 0) raise(errc::empty_input, "point mass needs n >= 1");
  std::vector<double> masses(n, 0.0);
  masses[0] = 1.0;
  return OrderedPmf(std::move(masses));
}

OrderedPmf OrderedPmf::padded(std::size_t n) const {
  if (n <= size()) return *this;
  std::vector<double> masses = masses_;
  masses.resize(n, 0.0);
  return OrderedPmf(std::move(masses));
}

LorenzCurve::LorenzCurve(const OrderedPmf& pmf) {
  breakpoints_.reserve(pmf.size());
  double acc = 0.0;
  for (double m : pmf) breakpoints_.push_back(acc += m);
}

double LorenzCurve::value_at(std::size_t k) const {
  if (k == 0) return 0.0;
  if (k > breakpoints_.size())
    raise(errc::out_of_domain, "breakpoint index past n");
  return breakpoints_[k - 1];
}

double LorenzCurve::eval(double t) const {
  const double n = static_cast<double>(breakpoints_.size());
  if (!(t >= 0.0) || t > n)
    raise(errc::out_of_domain, "Lorenz curve argument outside [0, n]");
  if (t == 0.0) return 0.0;
  // t lies in segment (k-1, k]; interpolate from P_{k-1} with slope p_k.
  const std::size_t k = static_cast<std::size_t>(std::ceil(t));
  const double lo = value_at(k - 1);
  const double hi = breakpoints_[k - 1];
  const double frac = t - static_cast<double>(k - 1);
  return lo + frac * (hi - lo);
}

RawVector RawVector::from_values(std::vector<double> values) {
  if (values.empty()) raise(errc::empty_input, "raw vector needs entries");
  double total = 0.0;
  for (double& v : values) {
    if (v < -kNegClampTol)
      raise(errc::negative_mass, "raw vector entry below -1e-12");
    if (v < 0.0) v = 0.0;
    total += v;
  }
  if (std::abs(total - 1.0) > kNormTol)
    raise(errc::not_normalized, "raw vector total " + std::to_string(total));
  return RawVector{std::move(values)};
}

Partition::Partition(std::vector<std::vector<std::size_t>> blocks,
                     std::size_t n)
    : blocks_(std::move(blocks)), n_(n) {
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) raise(errc::invalid_partition, "empty block");
    for (std::size_t idx : block) {
      if (idx >= n) raise(errc::invalid_partition, "index past ground set");
      if (seen[idx]) raise(errc::invalid_partition, "overlapping blocks");
      seen[idx] = 1;
      ++covered;
    }
  }
  if (covered != n)
    raise(errc::invalid_partition, "blocks do not cover the ground set");
}

LorenzCurve prefix_sums(const OrderedPmf& p) { return LorenzCurve(p); }

double majorization_margin(const OrderedPmf& p, const OrderedPmf& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double acc_p = 0.0, acc_q = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    if (k < p.size()) acc_p += p[k];
    if (k < q.size()) acc_q += q[k];
    margin = std::min(margin, acc_q - acc_p);
  }
  return margin;
}

bool is_majorized_by(const OrderedPmf& p, const OrderedPmf& q) {
  return majorization_margin(p, q) >= -kCmpTol;
}

double lorenz_eval(const OrderedPmf& p, double t) {
  return LorenzCurve(p).eval(t);
}

OrderedPmf aggregate(const OrderedPmf& p, const Partition& parts) {
  if (parts.ground_size() != p.size())
    raise(errc::invalid_partition, "partition ground set does not match PMF");
  std::vector<double> sums;
  sums.reserve(parts.blocks().size());
  for (const auto& block : parts.blocks()) {
    double s = 0.0;
    for (std::size_t idx : block) s += p[idx];
    sums.push_back(s);
  }
  return OrderedPmf::from_values(sums, /*strict=*/true);
}

std::size_t support_size(const OrderedPmf& p) {
  std::size_t count = 0;
  for (double m : p) count += (m > kSuppTol) ? 1 : 0;
  return count;
}

bool equal_up_to_padding(const OrderedPmf& a, const OrderedPmf& b,
                         double tol) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    if (std::abs(x - y) > tol) return false;
  }
  return true;
}

}  // namespace majlat
