#include "majlat/entropy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace majlat {

AlphaOrder AlphaOrder::of(double value) {
  if (std::isnan(value) || value < 0.0)
    raise(errc::unsupported_order, "alpha must be a nonnegative real or inf");
  if (value == 0.0) return zero();
  if (std::isinf(value)) return infinity();
  if (std::abs(value - 1.0) < kAlphaOneTol) return one();
  return AlphaOrder(Kind::finite, value);
}

AlphaOrder AlphaOrder::infinity() {
  return AlphaOrder(Kind::infinity,
                    std::numeric_limits<double>::infinity());
}

AlphaOrder AlphaOrder::parse(std::string_view token) {
  if (token == "inf" || token == "Inf" || token == "INF") return infinity();
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    raise(errc::unsupported_order,
          "cannot parse alpha token '" + std::string(token) + "'");
  return of(value);
}

std::string AlphaOrder::str() const {
  if (kind_ == Kind::infinity) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value_);
  return buf;
}

double log_of_base(LogBase base) noexcept {
  return base == LogBase::e ? 1.0 : std::log(2.0);
}

double power_sum(const OrderedPmf& p, const AlphaOrder& alpha) {
  switch (alpha.kind()) {
    case AlphaOrder::Kind::zero:
      return static_cast<double>(support_size(p));
    case AlphaOrder::Kind::finite: {
      double s = 0.0;
      for (double m : p)
        if (m > 0.0) s += std::pow(m, alpha.value());
      return s;
    }
    case AlphaOrder::Kind::one:
    case AlphaOrder::Kind::infinity:
      raise(errc::unsupported_order,
            "power sum undefined at alpha = " + alpha.str());
  }
  return 0.0;  // unreachable
}

double shannon(const OrderedPmf& p) {
  double h = 0.0;
  for (double m : p)
    if (m > 0.0) h -= m * std::log(m);
  return h;
}

double renyi(const OrderedPmf& p, const AlphaOrder& alpha, LogBase base) {
  double nats = 0.0;
  switch (alpha.kind()) {
    case AlphaOrder::Kind::zero:
      nats = std::log(static_cast<double>(support_size(p)));
      break;
    case AlphaOrder::Kind::one:
      nats = shannon(p);
      break;
    case AlphaOrder::Kind::infinity:
      nats = -std::log(p[0]);
      break;
    case AlphaOrder::Kind::finite:
      nats = std::log(power_sum(p, alpha)) / (1.0 - alpha.value());
      break;
  }
  return nats / log_of_base(base);
}

double tsallis(const OrderedPmf& p, const AlphaOrder& alpha) {
  switch (alpha.kind()) {
    case AlphaOrder::Kind::zero:
      return static_cast<double>(support_size(p)) - 1.0;
    case AlphaOrder::Kind::one:
      return shannon(p);
    case AlphaOrder::Kind::finite:
      return (1.0 - power_sum(p, alpha)) / (alpha.value() - 1.0);
    case AlphaOrder::Kind::infinity:
      raise(errc::unsupported_order, "Tsallis entropy undefined at inf");
  }
  return 0.0;  // unreachable
}

double pseudo_additivity_residual(const OrderedPmf& p, const OrderedPmf& q,
                                  const AlphaOrder& alpha) {
  if (!alpha.is_finite())
    raise(errc::unsupported_order,
          "pseudo-additivity needs a finite order other than 1");
  std::vector<double> products;
  products.reserve(p.size() * q.size());
  for (double a : p)
    for (double b : q)
      if (a > 0.0 && b > 0.0) products.push_back(a * b);
  std::sort(products.begin(), products.end(), std::greater<double>());
  const OrderedPmf joint = OrderedPmf::from_values(products, /*strict=*/true);

  const double tp = tsallis(p, alpha);
  const double tq = tsallis(q, alpha);
  const double combined = tp + tq + (1.0 - alpha.value()) * tp * tq;
  return std::abs(tsallis(joint, alpha) - combined);
}

}  // namespace majlat
