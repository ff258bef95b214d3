#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "majlat/errors.hpp"

namespace majlat {

/// Normalization slack: a mass vector is accepted as a PMF when its total is
/// within kNormTol of 1. Dominates accumulated rounding for n up to 10^4.
inline constexpr double kNormTol = 1e-9;
/// Slack for prefix-sum (majorization) comparisons.
inline constexpr double kCmpTol = 1e-12;
/// A mass below kSuppTol does not count toward the support.
inline constexpr double kSuppTol = 1e-12;

/// A probability mass function stored with masses in nonincreasing order.
///
/// Invariants: masses[i] >= masses[i+1], all masses >= 0, the total is within
/// kNormTol of 1, and size() >= 1. Values are immutable after construction.
class OrderedPmf {
 public:
  /// Builds an ordered PMF from arbitrary nonnegative values.
  ///
  /// Entries in [-1e-12, 0) are clamped to zero. In strict mode the total
  /// must already be within kNormTol of 1; otherwise an off-total vector is
  /// rescaled (near-normalized input is kept bit-exact in both modes).
  /// Sorting is stable, so ties keep their input order.
  static OrderedPmf from_values(std::span<const double> values,
                                bool strict = false);
  static OrderedPmf from_values(std::initializer_list<double> values,
                                bool strict = false);

  /// The uniform PMF (1/n, ..., 1/n).
  static OrderedPmf uniform(std::size_t n);
  /// The deterministic PMF (1, 0, ..., 0) of length n.
  static OrderedPmf point_mass(std::size_t n);

  std::size_t size() const noexcept { return masses_.size(); }
  double operator[](std::size_t i) const { return masses_[i]; }
  const std::vector<double>& masses() const noexcept { return masses_; }

  auto begin() const noexcept { return masses_.begin(); }
  auto end() const noexcept { return masses_.end(); }

  /// Same distribution zero-padded to length n (n >= size()).
  OrderedPmf padded(std::size_t n) const;

  friend bool operator==(const OrderedPmf& a, const OrderedPmf& b) {
    return a.masses_ == b.masses_;
  }

 private:
  explicit OrderedPmf(std::vector<double> masses)
      : masses_(std::move(masses)) {}

  std::vector<double> masses_;
};

/// Cumulative masses of an OrderedPmf: breakpoints()[k-1] = p_1 + ... + p_k,
/// with the implicit convention that the sum of zero terms is 0. The linear
/// interpolation of (k, P_k) is a piecewise-linear concave curve on [0, n].
class LorenzCurve {
 public:
  explicit LorenzCurve(const OrderedPmf& pmf);

  std::size_t size() const noexcept { return breakpoints_.size(); }
  const std::vector<double>& breakpoints() const noexcept {
    return breakpoints_;
  }

  /// P_k for k in [0, n]; value_at(0) == 0.
  double value_at(std::size_t k) const;

  /// Piecewise-linear interpolation at t in [0, n]. Throws out_of_domain
  /// outside that interval.
  double eval(double t) const;

 private:
  std::vector<double> breakpoints_;
};

/// A nonnegative mass vector summing to 1 that is not necessarily ordered.
/// Intermediate lattice objects (the max-of-prefix-sums vector and extremum
/// aggregations of couplings) live here until concavified or sorted.
struct RawVector {
  std::vector<double> values;

  static RawVector from_values(std::vector<double> values);

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

/// A partition of the index set {0, ..., n-1} into disjoint nonempty blocks.
class Partition {
 public:
  Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n);

  const std::vector<std::vector<std::size_t>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t ground_size() const noexcept { return n_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t n_;
};

/// Cumulative masses of p.
LorenzCurve prefix_sums(const OrderedPmf& p);

/// True iff q majorizes p: every prefix sum of q dominates the corresponding
/// prefix sum of p within kCmpTol. The shorter PMF is zero-padded.
bool is_majorized_by(const OrderedPmf& p, const OrderedPmf& q);

/// min_k (Q_k - P_k) over the common padded length. Nonnegative (up to
/// rounding) exactly when q majorizes p; more informative than the boolean
/// when locating near-violations.
double majorization_margin(const OrderedPmf& p, const OrderedPmf& q);

/// Lorenz curve of p evaluated at t in [0, n].
double lorenz_eval(const OrderedPmf& p, double t);

/// Sums the masses of p over each block of the partition and reorders the
/// block totals nonincreasingly. The result always majorizes p.
OrderedPmf aggregate(const OrderedPmf& p, const Partition& parts);

/// Number of masses above kSuppTol.
std::size_t support_size(const OrderedPmf& p);

/// True iff a and b are elementwise equal after zero-padding to a common
/// length, with tolerance tol per entry.
bool equal_up_to_padding(const OrderedPmf& a, const OrderedPmf& b,
                         double tol = 0.0);

}  // namespace majlat
