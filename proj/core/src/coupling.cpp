#include "majlat/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace majlat {

namespace {

std::vector<double> prefix_of(const OrderedPmf& p) {
  std::vector<double> out;
  out.reserve(p.size());
  double acc = 0.0;
  for (double m : p) out.push_back(acc += m);
  return out;
}

}  // namespace

Coupling::Coupling(std::vector<Cell> cells, OrderedPmf row_marginal,
                   OrderedPmf col_marginal)
    : cells_(std::move(cells)),
      row_marginal_(std::move(row_marginal)),
      col_marginal_(std::move(col_marginal)) {
  std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<double> row_sums(row_marginal_.size(), 0.0);
  std::vector<double> col_sums(col_marginal_.size(), 0.0);
  double total = 0.0;
  for (const Cell& cell : cells_) {
    if (!(cell.mass > 0.0))
      raise(errc::negative_mass, "coupling cells must carry positive mass");
    if (cell.row >= row_marginal_.size() || cell.col >= col_marginal_.size())
      raise(errc::out_of_domain, "coupling cell outside marginal supports");
    row_sums[cell.row] += cell.mass;
    col_sums[cell.col] += cell.mass;
    total += cell.mass;
  }
  if (std::abs(total - 1.0) > kNormTol)
    raise(errc::not_normalized, "coupling mass " + std::to_string(total));
  for (std::size_t i = 0; i < row_sums.size(); ++i)
    if (std::abs(row_sums[i] - row_marginal_[i]) > kNormTol)
      raise(errc::not_normalized, "row sums do not match the row marginal");
  for (std::size_t j = 0; j < col_sums.size(); ++j)
    if (std::abs(col_sums[j] - col_marginal_[j]) > kNormTol)
      raise(errc::not_normalized, "col sums do not match the col marginal");
}

bool Coupling::is_staircase() const {
  // Cells are sorted by (row, col); a row's smallest column may never drop
  // below the largest column seen in any earlier row.
  std::size_t limit = 0;    // max col over rows strictly before current_row
  std::size_t row_max = 0;  // max col within current_row
  std::size_t current_row = 0;
  bool started = false;
  for (const Cell& cell : cells_) {
    if (!started) {
      started = true;
      current_row = cell.row;
      row_max = cell.col;
      continue;
    }
    if (cell.row != current_row) {
      limit = std::max(limit, row_max);
      if (cell.col < limit) return false;
      current_row = cell.row;
      row_max = cell.col;
    } else {
      row_max = std::max(row_max, cell.col);
    }
  }
  return true;
}

RefinementCoupling::RefinementCoupling(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty())
    raise(errc::empty_input, "refinement needs at least one interval");
  const std::size_t m = intervals_.front().labels.size();
  double total = 0.0;
  for (std::size_t t = 0; t < intervals_.size(); ++t) {
    const Interval& iv = intervals_[t];
    if (!(iv.length > 0.0))
      raise(errc::negative_mass, "refinement intervals must be positive");
    if (iv.labels.size() != m)
      raise(errc::invalid_partition, "inconsistent label arity");
    if (t > 0)
      for (std::size_t i = 0; i < m; ++i)
        if (iv.labels[i] < intervals_[t - 1].labels[i])
          raise(errc::not_comonotone, "labels must be nondecreasing");
    total += iv.length;
  }
  if (std::abs(total - 1.0) > kNormTol)
    raise(errc::not_normalized, "refinement lengths sum to " +
                                    std::to_string(total));
}

Coupling independent_coupling(const OrderedPmf& p, const OrderedPmf& q) {
  std::vector<Coupling::Cell> cells;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= kSuppTol) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] <= kSuppTol) continue;
      cells.push_back({i, j, p[i] * q[j]});
    }
  }
  return Coupling(std::move(cells), p, q);
}

Coupling comonotone_coupling(const OrderedPmf& p, const OrderedPmf& q) {
  const std::vector<double> cp = prefix_of(p);
  const std::vector<double> cq = prefix_of(q);
  std::vector<Coupling::Cell> cells;
  std::size_t i = 0, j = 0;
  while (i < cp.size() && j < cq.size()) {
    const double lo = std::max(i > 0 ? cp[i - 1] : 0.0,
                               j > 0 ? cq[j - 1] : 0.0);
    const double hi = std::min(cp[i], cq[j]);
    if (hi - lo > 0.0) cells.push_back({i, j, hi - lo});
    // Advance whichever interval ends first; both on a shared breakpoint.
    const bool step_i = cp[i] <= cq[j];
    const bool step_j = cq[j] <= cp[i];
    if (step_i) ++i;
    if (step_j) ++j;
  }
  return Coupling(std::move(cells), p, q);
}

RefinementCoupling comonotone_many(std::span<const OrderedPmf> ps) {
  if (ps.empty()) raise(errc::empty_list, "refinement of an empty family");

  std::vector<std::vector<double>> prefixes;
  prefixes.reserve(ps.size());
  double top = 0.0;
  for (const auto& p : ps) {
    prefixes.push_back(prefix_of(p));
    top = std::max(top, prefixes.back().back());
  }

  std::vector<double> cuts;
  for (const auto& cp : prefixes)
    for (double c : cp)
      if (c < top - kCmpTol) cuts.push_back(c);
  cuts.push_back(top);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a <= kCmpTol; }),
             cuts.end());

  std::vector<RefinementCoupling::Interval> intervals;
  intervals.reserve(cuts.size());
  std::vector<std::size_t> ptr(ps.size(), 0);
  double lo = 0.0;
  for (double hi : cuts) {
    std::vector<std::size_t> labels(ps.size());
    for (std::size_t m = 0; m < ps.size(); ++m) {
      // Quantile map: the least index whose prefix covers this interval.
      while (ptr[m] + 1 < prefixes[m].size() &&
             prefixes[m][ptr[m]] < hi - kCmpTol)
        ++ptr[m];
      labels[m] = ptr[m];
    }
    if (hi - lo > 0.0) intervals.push_back({hi - lo, std::move(labels)});
    lo = hi;
  }
  return RefinementCoupling(std::move(intervals));
}

namespace {

OrderedPmf sorted_masses(std::vector<double> masses, std::size_t pad_to) {
  std::sort(masses.begin(), masses.end(), std::greater<double>());
  if (masses.size() < pad_to) masses.resize(pad_to, 0.0);
  return OrderedPmf::from_values(masses, /*strict=*/true);
}

}  // namespace

OrderedPmf sorted_mass_vector(const Coupling& c, std::size_t pad_to) {
  std::vector<double> masses;
  masses.reserve(c.cells().size());
  for (const auto& cell : c.cells()) masses.push_back(cell.mass);
  return sorted_masses(std::move(masses), pad_to);
}

OrderedPmf sorted_mass_vector(const RefinementCoupling& c,
                              std::size_t pad_to) {
  std::vector<double> masses;
  masses.reserve(c.intervals().size());
  for (const auto& iv : c.intervals()) masses.push_back(iv.length);
  return sorted_masses(std::move(masses), pad_to);
}

RawVector aggregate_by_extremum(const Coupling& c, Extremum which) {
  if (!c.is_staircase())
    raise(errc::not_comonotone,
          "extremum aggregation needs a comonotone coupling");
  const std::size_t n =
      std::max(c.row_marginal().size(), c.col_marginal().size());
  std::vector<double> out(n, 0.0);
  for (const auto& cell : c.cells()) {
    const std::size_t level = which == Extremum::max
                                  ? std::max(cell.row, cell.col)
                                  : std::min(cell.row, cell.col);
    out[level] += cell.mass;
  }
  return RawVector{std::move(out)};
}

OrderedPmf marginal(const Coupling& c, Axis axis) {
  const OrderedPmf& target =
      axis == Axis::row ? c.row_marginal() : c.col_marginal();
  std::vector<double> sums(target.size(), 0.0);
  for (const auto& cell : c.cells())
    sums[axis == Axis::row ? cell.row : cell.col] += cell.mass;
  return OrderedPmf::from_values(sums, /*strict=*/true);
}

}  // namespace majlat
