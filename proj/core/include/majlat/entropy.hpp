#pragma once

#include <string>
#include <string_view>

#include "majlat/pmf.hpp"

namespace majlat {

/// Finite orders closer to 1 than this evaluate through the Shannon branch,
/// avoiding catastrophic cancellation in 1/(1-alpha).
inline constexpr double kAlphaOneTol = 1e-8;

/// Entropy order alpha in [0, inf], with exact branches at 0, 1 and inf.
class AlphaOrder {
 public:
  enum class Kind { zero, one, infinity, finite };

  /// Classifies a nonnegative value. 0 -> zero, |v-1| < kAlphaOneTol -> one,
  /// +inf -> infinity, anything else positive -> finite. Negative or NaN
  /// input raises unsupported_order.
  static AlphaOrder of(double value);

  static AlphaOrder zero() { return AlphaOrder(Kind::zero, 0.0); }
  static AlphaOrder one() { return AlphaOrder(Kind::one, 1.0); }
  static AlphaOrder infinity();

  /// Accepts a nonnegative decimal or the token "inf".
  static AlphaOrder parse(std::string_view token);

  Kind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }

  /// "inf" or the shortest decimal form, for reports and filenames.
  std::string str() const;

  friend bool operator==(const AlphaOrder& a, const AlphaOrder& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

 private:
  AlphaOrder(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

enum class LogBase { e, two };

/// ln(base): the divisor converting natural-log entropies to the chosen base.
double log_of_base(LogBase base) noexcept;

/// S_alpha(p) = sum of p_i^alpha over the positive masses, with 0^alpha = 0.
/// Defined for kind zero (returns the support size) and finite orders;
/// raises unsupported_order for one and infinity.
double power_sum(const OrderedPmf& p, const AlphaOrder& alpha);

/// Shannon entropy in nats, with the 0 ln 0 = 0 convention.
double shannon(const OrderedPmf& p);

/// Renyi entropy of order alpha. Natural log by default.
///   zero: log support size,  one: Shannon,  infinity: -log(max mass),
///   finite: log(S_alpha) / (1 - alpha).
double renyi(const OrderedPmf& p, const AlphaOrder& alpha,
             LogBase base = LogBase::e);

/// Tsallis entropy of order alpha in [0, inf): (1 - S_alpha) / (alpha - 1),
/// with T_0 = support size - 1 and T_1 = Shannon (nats). Base-free.
/// Raises unsupported_order at infinity.
double tsallis(const OrderedPmf& p, const AlphaOrder& alpha);

/// |T_alpha(product of p and q, sorted) - pseudo-additive combination|,
/// where the combination is T(p) + T(q) + (1-alpha) T(p) T(q).
/// Requires a finite order other than 1.
double pseudo_additivity_residual(const OrderedPmf& p, const OrderedPmf& q,
                                  const AlphaOrder& alpha);

}  // namespace majlat
