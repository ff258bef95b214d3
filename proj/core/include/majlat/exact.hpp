#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "majlat/entropy.hpp"
#include "majlat/pmf.hpp"

namespace majlat::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Ordered PMF with exact rational masses, for re-evaluating flagged or
/// near-boundary cases without rounding. Masses must be nonnegative and sum
/// to exactly 1 (raises not_rational otherwise). Prefix sums are cached.
class RationalPmf {
 public:
  static RationalPmf from_values(std::vector<Rational> values);
  static RationalPmf from_fractions(
      std::span<const std::pair<std::int64_t, std::int64_t>> fractions);

  std::size_t size() const noexcept { return masses_.size(); }
  const Rational& operator[](std::size_t i) const { return masses_[i]; }
  const std::vector<Rational>& masses() const noexcept { return masses_; }
  const std::vector<Rational>& prefix() const noexcept { return prefix_; }

  friend bool operator==(const RationalPmf& a, const RationalPmf& b) {
    return a.masses_ == b.masses_;
  }

 private:
  explicit RationalPmf(std::vector<Rational> masses);

  std::vector<Rational> masses_;
  std::vector<Rational> prefix_;
};

/// Nearest-double image of the exact masses.
OrderedPmf to_double(const RationalPmf& p);

bool is_majorized_by(const RationalPmf& p, const RationalPmf& q);
bool equal_up_to_padding(const RationalPmf& a, const RationalPmf& b);

RationalPmf meet(const RationalPmf& p, const RationalPmf& q);
/// Exact least concave majorant of the max-prefix vector.
RationalPmf join(const RationalPmf& p, const RationalPmf& q);

std::size_t support_size(const RationalPmf& p);
/// S_2(p) = sum of squared masses, exact.
Rational power_sum2(const RationalPmf& p);

/// Sorted mass vectors of the two canonical couplings, exact.
std::vector<Rational> sorted_independent(const RationalPmf& p,
                                         const RationalPmf& q);
std::vector<Rational> sorted_comonotone(const RationalPmf& p,
                                        const RationalPmf& q);

enum class ExactPredicate {
  lemma2,               // sorted comonotone majorizes sorted independent
  subadd,               // entropy(meet) <= entropy(p) + entropy(q)
  supermod,             // entropy sums vs meet/join sums
  corollary1_equality,  // numeric equality in the 2*meet bound iff p == q
};

/// Re-evaluates a predicate without floating-point error. Supported orders
/// are 0 and 2 (fully exact: support counts and S_2 comparisons) and 1
/// (long-double evaluation with a rigorous rounding-error interval; the
/// predicate is confirmed when it holds beyond the interval width).
/// lemma2 ignores alpha; corollary1_equality needs an order in (0, inf),
/// so 1 or 2 here. Other combinations raise unsupported_order.
bool oracle_exact_check(const RationalPmf& p, const RationalPmf& q,
                        ExactPredicate pred, const AlphaOrder& alpha);

/// All distinct ordered PMFs of length n whose masses have denominator at
/// most max_denominator, zero-padded to length n.
std::vector<RationalPmf> enumerate_grid(std::size_t n,
                                        unsigned max_denominator);

/// Universal glb property of meet(p, q) against a candidate set: it is a
/// lower bound of both inputs and dominates every common lower bound in the
/// grid. All comparisons exact.
bool glb_is_universal(const RationalPmf& p, const RationalPmf& q,
                      std::span<const RationalPmf> grid);

/// Universal lub property of join(p, q): an upper bound of both inputs that
/// is majorized by every common upper bound in the grid.
bool lub_is_universal(const RationalPmf& p, const RationalPmf& q,
                      std::span<const RationalPmf> grid);

}  // namespace majlat::exact
