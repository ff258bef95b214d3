#pragma once

#include <cstdint>

#include "majlat/entropy.hpp"
#include "majlat/pmf.hpp"
#include "majlat/sweep.hpp"

namespace majlat {

/// Entropy distance d_alpha(x, y) = H(x) + H(y) - 2 H(join(x, y)) for Renyi
/// orders alpha >= 1 (a metric there; smaller orders raise
/// unsupported_order). Symmetric by construction and zero on the diagonal.
double entropy_distance(const OrderedPmf& x, const OrderedPmf& y,
                        const AlphaOrder& alpha, LogBase base = LogBase::e);

/// Theil index: log n - Shannon(x), with n the supplied length (zero masses
/// count toward log n).
double theil(const OrderedPmf& x, LogBase base = LogBase::e);

/// Order-parametrized Theil analogue: log n - H_alpha(x) for alpha >= 1.
/// Coincides with the distance to the uniform PMF of the same length.
double renyi_theil(const OrderedPmf& x, const AlphaOrder& alpha,
                   LogBase base = LogBase::e);

/// Sweeps random triples and checks the four metric axioms of the entropy
/// distance: nonnegativity, identity of indiscernibles, exact symmetry, and
/// the triangle inequality up to kEqTol.
VerificationReport check_metric_axioms(std::uint64_t samples, std::size_t n,
                                       const AlphaOrder& alpha,
                                       std::uint64_t seed);

}  // namespace majlat
