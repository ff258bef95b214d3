#include "majlat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace majlat {

namespace {

std::vector<double> padded_prefix(const OrderedPmf& p, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < p.size()) acc += p[k];
    out.push_back(acc);
  }
  return out;
}

std::vector<double> diffs(const std::vector<double>& cumulative) {
  std::vector<double> out;
  out.reserve(cumulative.size());
  double prev = 0.0;
  for (double c : cumulative) {
    out.push_back(c - prev);
    prev = c;
  }
  return out;
}

bool nonincreasing(const std::vector<double>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

}  // namespace

OrderedPmf meet(const OrderedPmf& p, const OrderedPmf& q) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<double> cp = padded_prefix(p, n);
  std::vector<double> cq = padded_prefix(q, n);
  for (std::size_t k = 0; k < n; ++k) cp[k] = std::min(cp[k], cq[k]);
  // The min of two concave curves is concave, so the diffs are nonincreasing
  // up to rounding; from_values restores the exact order via a stable sort.
  return OrderedPmf::from_values(diffs(cp), /*strict=*/true);
}

RawVector beta_vector(const OrderedPmf& p, const OrderedPmf& q) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<double> cp = padded_prefix(p, n);
  std::vector<double> cq = padded_prefix(q, n);
  for (std::size_t k = 0; k < n; ++k) cp[k] = std::max(cp[k], cq[k]);
  return RawVector{diffs(cp)};
}

OrderedPmf concavify(const RawVector& v) {
  const std::size_t n = v.size();
  if (n == 0) raise(errc::empty_input, "concavify needs a nonempty vector");

  // Cumulative points (0, 0), (1, c_1), ..., (n, c_n).
  std::vector<double> cum(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) cum[k + 1] = cum[k] + v[k];

  // Monotone chain over x = 0..n: keep only concave corners. A middle point
  // at or below the chord of its neighbours is dropped.
  std::vector<std::size_t> hull;
  hull.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    while (hull.size() >= 2) {
      const std::size_t o = hull[hull.size() - 2];
      const std::size_t a = hull[hull.size() - 1];
      const double cross =
          static_cast<double>(a - o) * (cum[k] - cum[o]) -
          (cum[a] - cum[o]) * static_cast<double>(k - o);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }

  // Each hull segment spreads its total mass evenly over its indices.
  std::vector<double> masses(n, 0.0);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::size_t lo = hull[s];
    const std::size_t hi = hull[s + 1];
    const double slope =
        (cum[hi] - cum[lo]) / static_cast<double>(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) masses[k] = slope;
  }
  return OrderedPmf::from_values(masses, /*strict=*/true);
}

OrderedPmf join(const OrderedPmf& p, const OrderedPmf& q) {
  return concavify(beta_vector(p, q));
}

OrderedPmf meet_many(std::span<const OrderedPmf> ps) {
  if (ps.empty()) raise(errc::empty_list, "meet of an empty family");
  std::size_t n = 0;
  for (const auto& p : ps) n = std::max(n, p.size());
  std::vector<double> lo(n, std::numeric_limits<double>::infinity());
  for (const auto& p : ps) {
    const std::vector<double> c = padded_prefix(p, n);
    for (std::size_t k = 0; k < n; ++k) lo[k] = std::min(lo[k], c[k]);
  }
  return OrderedPmf::from_values(diffs(lo), /*strict=*/true);
}

OrderedPmf join_many(std::span<const OrderedPmf> ps) {
  if (ps.empty()) raise(errc::empty_list, "join of an empty family");
  std::size_t n = 0;
  for (const auto& p : ps) n = std::max(n, p.size());
  std::vector<double> hi(n, 0.0);
  for (const auto& p : ps) {
    const std::vector<double> c = padded_prefix(p, n);
    for (std::size_t k = 0; k < n; ++k) hi[k] = std::max(hi[k], c[k]);
  }
  return concavify(RawVector{diffs(hi)});
}

LatticePair lattice_pair(const OrderedPmf& p, const OrderedPmf& q) {
  RawVector beta = beta_vector(p, q);
  const bool ordered = nonincreasing(beta.values);
  OrderedPmf joined = concavify(beta);
  return LatticePair{meet(p, q), std::move(joined), std::move(beta),
                     !ordered};
}

}  // namespace majlat
