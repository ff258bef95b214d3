#include "majlat/checks.hpp"

#include <cmath>

namespace majlat {

const char* family_name(Family f) noexcept {
  return f == Family::renyi ? "renyi" : "tsallis";
}

double entropy_of(const OrderedPmf& p, const AlphaOrder& alpha, Family f) {
  return f == Family::renyi ? renyi(p, alpha) : tsallis(p, alpha);
}

namespace {

CheckResult make_result(double lhs, double rhs, const AlphaOrder& alpha,
                        Family family, std::vector<OrderedPmf> inputs) {
  CheckResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.holds = r.gap >= -kEqTol;
  r.equality = std::abs(r.gap) <= kEqTol;
  r.alpha = alpha;
  r.family = family;
  r.inputs = std::move(inputs);
  return r;
}

}  // namespace

double delta_supermod(const OrderedPmf& p, const OrderedPmf& q,
                      const AlphaOrder& alpha, Family family) {
  const OrderedPmf w = meet(p, q);
  const OrderedPmf v = join(p, q);
  return entropy_of(w, alpha, family) + entropy_of(v, alpha, family) -
         entropy_of(p, alpha, family) - entropy_of(q, alpha, family);
}

CheckResult check_subadditivity(const OrderedPmf& p, const OrderedPmf& q,
                                const AlphaOrder& alpha, Family family) {
  const double lhs = entropy_of(meet(p, q), alpha, family);
  const double rhs =
      entropy_of(p, alpha, family) + entropy_of(q, alpha, family);
  return make_result(lhs, rhs, alpha, family, {p, q});
}

bool check_equality_condition_subadd(const OrderedPmf& p,
                                     const OrderedPmf& q) {
  return support_size(p) == 1 || support_size(q) == 1;
}

CheckResult check_corollary1(const OrderedPmf& p, const OrderedPmf& q,
                             const AlphaOrder& alpha) {
  const double lhs = renyi(p, alpha) + renyi(q, alpha);
  const double rhs = 2.0 * renyi(meet(p, q), alpha);
  return make_result(lhs, rhs, alpha, Family::renyi, {p, q});
}

SandwichResult check_corollary2(std::span<const OrderedPmf> ps,
                                const AlphaOrder& alpha) {
  if (ps.empty()) raise(errc::empty_list, "bound needs at least one PMF");
  const OrderedPmf bottom = meet_many(ps);
  const double h_bottom = renyi(bottom, alpha);
  double h_sum = 0.0;
  for (const auto& p : ps) h_sum += renyi(p, alpha);
  std::vector<OrderedPmf> inputs(ps.begin(), ps.end());

  SandwichResult out{
      make_result(h_bottom, h_sum, alpha, Family::renyi, inputs),
      make_result(h_sum, static_cast<double>(ps.size()) * h_bottom, alpha,
                  Family::renyi, std::move(inputs)),
  };
  return out;
}

CheckResult check_supermodularity(const OrderedPmf& p, const OrderedPmf& q,
                                  const AlphaOrder& alpha, Family family) {
  if (family == Family::renyi) {
    if (alpha.is_finite() && alpha.value() < 1.0)
      raise(errc::unsupported_order,
            "Renyi supermodularity holds only on {0} union [1, inf]");
  } else if (alpha.kind() == AlphaOrder::Kind::infinity) {
    raise(errc::unsupported_order, "Tsallis entropy undefined at inf");
  }
  const double lhs =
      entropy_of(p, alpha, family) + entropy_of(q, alpha, family);
  const double rhs = entropy_of(meet(p, q), alpha, family) +
                     entropy_of(join(p, q), alpha, family);
  return make_result(lhs, rhs, alpha, family, {p, q});
}

}  // namespace majlat
