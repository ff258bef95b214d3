#pragma once

#include <span>

#include "majlat/pmf.hpp"

namespace majlat {

/// Greatest lower bound under majorization: the unique ordered PMF whose
/// prefix sums are the pointwise minimum of the two inputs' prefix sums.
/// Inputs are zero-padded to a common length, which the output keeps.
OrderedPmf meet(const OrderedPmf& p, const OrderedPmf& q);

/// The vector whose prefix sums are the pointwise maximum of the two inputs'
/// prefix sums. May violate the nonincreasing order; the join concavifies it.
RawVector beta_vector(const OrderedPmf& p, const OrderedPmf& q);

/// Least concave majorant of a mass vector's cumulative curve, computed as
/// the upper convex hull of the points (k, v_1 + ... + v_k). Equivalent to
/// repeatedly averaging each maximal order-violating block. The result is the
/// least ordered PMF whose prefix sums dominate the input's cumulative sums.
OrderedPmf concavify(const RawVector& v);

/// Least upper bound under majorization: concavify(beta_vector(p, q)).
OrderedPmf join(const OrderedPmf& p, const OrderedPmf& q);

/// Meet of a nonempty family: pointwise minimum over all prefix-sum curves.
/// Agrees with a left fold of the binary meet.
OrderedPmf meet_many(std::span<const OrderedPmf> ps);

/// Join of a nonempty family: one concavification of the pooled pointwise
/// maximum of all prefix-sum curves, avoiding fold error accumulation.
/// Agrees with a left fold of the binary join.
OrderedPmf join_many(std::span<const OrderedPmf> ps);

/// Meet, join, and the intermediate max-prefix vector of one pair.
/// lcm_applied is false exactly when beta was already nonincreasing, in which
/// case join's prefix sums equal the pointwise maximum.
struct LatticePair {
  OrderedPmf meet;
  OrderedPmf join;
  RawVector beta;
  bool lcm_applied;
};

LatticePair lattice_pair(const OrderedPmf& p, const OrderedPmf& q);

}  // namespace majlat
