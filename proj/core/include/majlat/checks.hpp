#pragma once

#include <span>
#include <vector>

#include "majlat/entropy.hpp"
#include "majlat/lattice.hpp"
#include "majlat/pmf.hpp"

namespace majlat {

/// Slack allowed before an inequality counts as violated, and half-width of
/// the band treated as numeric equality.
inline constexpr double kEqTol = 1e-9;

enum class Family { renyi, tsallis };

const char* family_name(Family f) noexcept;

/// Renyi or Tsallis entropy of p at the given order, in nats.
double entropy_of(const OrderedPmf& p, const AlphaOrder& alpha, Family f);

/// Outcome of one two-sided inequality check: lhs <= rhs expected.
struct CheckResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs - lhs
  bool holds = false;     // gap >= -kEqTol
  bool equality = false;  // |gap| <= kEqTol
  AlphaOrder alpha = AlphaOrder::one();
  Family family = Family::renyi;
  std::vector<OrderedPmf> inputs;
};

/// Supermodularity gap: entropy(meet) + entropy(join) - entropy(p)
/// - entropy(q). Nonnegative on the supermodular (family, order) regimes.
double delta_supermod(const OrderedPmf& p, const OrderedPmf& q,
                      const AlphaOrder& alpha, Family family);

/// entropy(meet(p, q)) <= entropy(p) + entropy(q).
CheckResult check_subadditivity(const OrderedPmf& p, const OrderedPmf& q,
                                const AlphaOrder& alpha, Family family);

/// Structural equality condition of subadditivity: at least one input is a
/// deterministic PMF. Insensitive to zero padding.
bool check_equality_condition_subadd(const OrderedPmf& p,
                                     const OrderedPmf& q);

/// entropy(p) + entropy(q) <= 2 entropy(meet(p, q)), Renyi only.
CheckResult check_corollary1(const OrderedPmf& p, const OrderedPmf& q,
                             const AlphaOrder& alpha);

/// Two-sided bound through the m-fold meet, Renyi only:
/// lower:  entropy(meet of all) <= sum of entropies
/// upper:  sum of entropies <= m * entropy(meet of all)
struct SandwichResult {
  CheckResult lower;
  CheckResult upper;
};

SandwichResult check_corollary2(std::span<const OrderedPmf> ps,
                                const AlphaOrder& alpha);

/// entropy(p) + entropy(q) <= entropy(meet) + entropy(join). Valid for
/// Renyi at orders {0} union [1, inf] and Tsallis on [0, inf); other
/// combinations raise unsupported_order. The equality flag is guaranteed on
/// the modular regimes (Renyi at 0 and inf, Tsallis at 0).
CheckResult check_supermodularity(const OrderedPmf& p, const OrderedPmf& q,
                                  const AlphaOrder& alpha, Family family);

}  // namespace majlat
