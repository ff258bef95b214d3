#include "majlat/exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace majlat::exact {

RationalPmf::RationalPmf(std::vector<Rational> masses)
    : masses_(std::move(masses)) {
  if (masses_.empty())
    raise(errc::empty_input, "rational PMF needs at least one mass");
  Rational total = 0;
  for (const Rational& m : masses_) {
    if (m < 0) raise(errc::not_rational, "rational masses must be >= 0");
    total += m;
  }
  if (total != 1)
    raise(errc::not_rational, "rational masses must sum to exactly 1");
  std::sort(masses_.begin(), masses_.end(), std::greater<Rational>());
  prefix_.reserve(masses_.size());
  Rational acc = 0;
  for (const Rational& m : masses_) prefix_.push_back(acc += m);
}

RationalPmf RationalPmf::from_values(std::vector<Rational> values) {
  return RationalPmf(std::move(values));
}

RationalPmf RationalPmf::from_fractions(
    std::span<const std::pair<std::int64_t, std::int64_t>> fractions) {
  std::vector<Rational> values;
  values.reserve(fractions.size());
  for (const auto& [num, den] : fractions) {
    if (den == 0) raise(errc::not_rational, "zero denominator");
    values.emplace_back(num, den);
  }
  return RationalPmf(std::move(values));
}

OrderedPmf to_double(const RationalPmf& p) {
  std::vector<double> masses;
  masses.reserve(p.size());
  for (const Rational& m : p.masses())
    masses.push_back(m.convert_to<double>());
  return OrderedPmf::from_values(masses);
}

namespace {

Rational prefix_at(const RationalPmf& p, std::size_t k) {
  if (k == 0) return Rational(0);
  if (k > p.size()) return p.prefix().back();
  return p.prefix()[k - 1];
}

}  // namespace

bool is_majorized_by(const RationalPmf& p, const RationalPmf& q) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t k = 1; k <= n; ++k)
    if (prefix_at(p, k) > prefix_at(q, k)) return false;
  return true;
}

bool equal_up_to_padding(const RationalPmf& a, const RationalPmf& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = i < a.size() ? a[i] : Rational(0);
    const Rational y = i < b.size() ? b[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

RationalPmf meet(const RationalPmf& p, const RationalPmf& q) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<Rational> masses;
  masses.reserve(n);
  Rational prev = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational cur = std::min(prefix_at(p, k), prefix_at(q, k));
    masses.push_back(cur - prev);
    prev = cur;
  }
  return RationalPmf::from_values(std::move(masses));
}

RationalPmf join(const RationalPmf& p, const RationalPmf& q) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<Rational> cum(n + 1, Rational(0));
  for (std::size_t k = 1; k <= n; ++k)
    cum[k] = std::max(prefix_at(p, k), prefix_at(q, k));

  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    while (hull.size() >= 2) {
      const std::size_t o = hull[hull.size() - 2];
      const std::size_t a = hull[hull.size() - 1];
      const Rational cross = Rational(a - o) * (cum[k] - cum[o]) -
                             (cum[a] - cum[o]) * Rational(k - o);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }

  std::vector<Rational> masses(n, Rational(0));
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::size_t lo = hull[s];
    const std::size_t hi = hull[s + 1];
    const Rational slope = (cum[hi] - cum[lo]) / Rational(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) masses[k] = slope;
  }
  return RationalPmf::from_values(std::move(masses));
}

std::size_t support_size(const RationalPmf& p) {
  std::size_t count = 0;
  for (const Rational& m : p.masses()) count += (m > 0) ? 1 : 0;
  return count;
}

Rational power_sum2(const RationalPmf& p) {
  Rational s = 0;
  for (const Rational& m : p.masses()) s += m * m;
  return s;
}

std::vector<Rational> sorted_independent(const RationalPmf& p,
                                         const RationalPmf& q) {
  std::vector<Rational> out;
  out.reserve(p.size() * q.size());
  for (const Rational& a : p.masses())
    for (const Rational& b : q.masses())
      if (a > 0 && b > 0) out.push_back(a * b);
  std::sort(out.begin(), out.end(), std::greater<Rational>());
  return out;
}

std::vector<Rational> sorted_comonotone(const RationalPmf& p,
                                        const RationalPmf& q) {
  std::vector<Rational> out;
  std::size_t i = 0, j = 0;
  Rational lo = 0;
  while (i < p.size() && j < q.size()) {
    const Rational pi = p.prefix()[i];
    const Rational qj = q.prefix()[j];
    const Rational hi = std::min(pi, qj);
    if (hi > lo) out.push_back(hi - lo);
    if (pi <= qj) ++i;
    if (qj <= pi) ++j;
    lo = hi;
  }
  std::sort(out.begin(), out.end(), std::greater<Rational>());
  return out;
}

namespace {

// Majorization of plain sorted mass vectors (not necessarily full PMFs of
// equal length); zero-pads the shorter one.
bool vector_majorized_by(const std::vector<Rational>& p,
                         const std::vector<Rational>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  Rational ap = 0, aq = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < p.size()) ap += p[k];
    if (k < q.size()) aq += q[k];
    if (ap > aq) return false;
  }
  return true;
}

// Shannon entropy in nats via long double, with a rigorous bound on the
// accumulated rounding error: per term a few ulps, summed conservatively.
struct IntervalValue {
  long double value;
  long double error;
};

IntervalValue shannon_interval(const RationalPmf& p) {
  long double h = 0.0L;
  long double err = 0.0L;
  for (const Rational& m : p.masses()) {
    if (m == 0) continue;
    const long double x = m.convert_to<long double>();
    const long double term = -x * std::log(x);
    h += term;
    // conversion + log + multiply + add: 4 roundings per term
    err += 4.0L * std::numeric_limits<long double>::epsilon() *
           (std::abs(term) + std::abs(h) + 1.0L);
  }
  return {h, err};
}

bool leq_with_interval(IntervalValue lhs, IntervalValue rhs) {
  return lhs.value <= rhs.value + lhs.error + rhs.error;
}

}  // namespace

bool oracle_exact_check(const RationalPmf& p, const RationalPmf& q,
                        ExactPredicate pred, const AlphaOrder& alpha) {
  if (pred == ExactPredicate::lemma2)
    return vector_majorized_by(sorted_independent(p, q),
                               sorted_comonotone(p, q));

  const bool a0 = alpha.kind() == AlphaOrder::Kind::zero;
  const bool a1 = alpha.kind() == AlphaOrder::Kind::one;
  const bool a2 = alpha.is_finite() && alpha.value() == 2.0;
  if (!a0 && !a1 && !a2)
    raise(errc::unsupported_order,
          "exact oracle supports alpha in {0, 1, 2}");
  // The equality-iff-identical statement only covers orders in (0, inf).
  if (pred == ExactPredicate::corollary1_equality && a0)
    raise(errc::unsupported_order,
          "the equality condition is stated for alpha in (0, inf)");

  const RationalPmf w = meet(p, q);
  switch (pred) {
    case ExactPredicate::subadd: {
      if (a0) {
        // log supp(w) <= log supp(p) + log supp(q)
        return support_size(w) <= support_size(p) * support_size(q);
      }
      if (a2) {
        // -log S2(w) <= -log S2(p) - log S2(q)
        return power_sum2(w) >= power_sum2(p) * power_sum2(q);
      }
      const IntervalValue hw = shannon_interval(w);
      IntervalValue sum = shannon_interval(p);
      const IntervalValue hq = shannon_interval(q);
      sum.value += hq.value;
      sum.error += hq.error;
      return leq_with_interval(hw, sum);
    }
    case ExactPredicate::supermod: {
      const RationalPmf v = join(p, q);
      if (a0) {
        return support_size(p) + support_size(q) ==
               support_size(w) + support_size(v);
      }
      if (a2) {
        // -log S2(p) - log S2(q) <= -log S2(w) - log S2(v)
        return power_sum2(w) * power_sum2(v) <= power_sum2(p) * power_sum2(q);
      }
      IntervalValue lhs = shannon_interval(p);
      const IntervalValue hq = shannon_interval(q);
      lhs.value += hq.value;
      lhs.error += hq.error;
      IntervalValue rhs = shannon_interval(w);
      const IntervalValue hv = shannon_interval(v);
      rhs.value += hv.value;
      rhs.error += hv.error;
      return leq_with_interval(lhs, rhs);
    }
    case ExactPredicate::corollary1_equality: {
      const bool structurally_equal = equal_up_to_padding(p, q);
      bool numerically_equal = false;
      if (a2) {
        numerically_equal =
            power_sum2(p) * power_sum2(q) == power_sum2(w) * power_sum2(w);
      } else {
        IntervalValue lhs = shannon_interval(p);
        const IntervalValue hq = shannon_interval(q);
        lhs.value += hq.value;
        lhs.error += hq.error;
        IntervalValue rhs = shannon_interval(w);
        rhs.value *= 2.0L;
        rhs.error *= 2.0L;
        numerically_equal =
            std::abs(lhs.value - rhs.value) <= lhs.error + rhs.error;
      }
      return structurally_equal == numerically_equal;
    }
    case ExactPredicate::lemma2:
      break;  // handled above
  }
  raise(errc::unsupported_order, "unhandled exact predicate");
}

std::vector<RationalPmf> enumerate_grid(std::size_t n,
                                        unsigned max_denominator) {
  if (n == 0) raise(errc::empty_input, "grid needs n >= 1");
  std::set<std::vector<Rational>> seen;
  std::vector<RationalPmf> grid;

  // Nonincreasing integer compositions of den into at most n parts; PMFs
  // repeated across denominators are deduplicated in reduced form.
  for (unsigned den = 1; den <= max_denominator; ++den) {
    std::vector<unsigned> comp;
    std::function<void(unsigned, unsigned)> build = [&](unsigned remaining,
                                                        unsigned cap) {
      if (comp.size() > n) return;
      if (remaining == 0) {
        std::vector<Rational> masses;
        masses.reserve(n);
        for (unsigned c : comp) masses.emplace_back(c, den);
        masses.resize(n, Rational(0));
        if (seen.insert(masses).second)
          grid.push_back(RationalPmf::from_values(masses));
        return;
      }
      if (comp.size() == n) return;
      for (unsigned next = std::min(cap, remaining); next >= 1; --next) {
        comp.push_back(next);
        build(remaining - next, next);
        comp.pop_back();
      }
    };
    build(den, den);
  }
  return grid;
}

bool glb_is_universal(const RationalPmf& p, const RationalPmf& q,
                      std::span<const RationalPmf> grid) {
  const RationalPmf w = meet(p, q);
  if (!is_majorized_by(w, p) || !is_majorized_by(w, q)) return false;
  for (const RationalPmf& r : grid)
    if (is_majorized_by(r, p) && is_majorized_by(r, q) &&
        !is_majorized_by(r, w))
      return false;
  return true;
}

bool lub_is_universal(const RationalPmf& p, const RationalPmf& q,
                      std::span<const RationalPmf> grid) {
  const RationalPmf v = join(p, q);
  if (!is_majorized_by(p, v) || !is_majorized_by(q, v)) return false;
  for (const RationalPmf& u : grid)
    if (is_majorized_by(p, u) && is_majorized_by(q, u) &&
        !is_majorized_by(v, u))
      return false;
  return true;
}

}  // namespace majlat::exact
