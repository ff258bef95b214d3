#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "majlat/pmf.hpp"

namespace majlat {

/// A joint mass on [n] x [m] with fixed ordered marginals, stored as a sparse
/// list of positive cells in row-major order. Row and column indices are
/// zero-based.
class Coupling {
 public:
  struct Cell {
    std::size_t row;
    std::size_t col;
    double mass;
  };

  /// Validates positivity, total mass and marginal consistency (kNormTol).
  Coupling(std::vector<Cell> cells, OrderedPmf row_marginal,
           OrderedPmf col_marginal);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const OrderedPmf& row_marginal() const noexcept { return row_marginal_; }
  const OrderedPmf& col_marginal() const noexcept { return col_marginal_; }

  /// True iff the support is a monotone staircase: no pair of cells with
  /// i < i' and j > j'. Holds for every comonotone coupling.
  bool is_staircase() const;

 private:
  std::vector<Cell> cells_;
  OrderedPmf row_marginal_;
  OrderedPmf col_marginal_;
};

/// Common refinement of several breakpoint partitions of (0, 1]: a list of
/// interval lengths, each labelled with the zero-based quantile index of
/// every marginal on that interval. Labels are componentwise nondecreasing.
class RefinementCoupling {
 public:
  struct Interval {
    double length;
    std::vector<std::size_t> labels;
  };

  explicit RefinementCoupling(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const noexcept {
    return intervals_;
  }
  std::size_t marginal_count() const noexcept {
    return intervals_.empty() ? 0 : intervals_.front().labels.size();
  }

 private:
  std::vector<Interval> intervals_;
};

/// Product coupling: cell (i, j) carries p_i * q_j over the two supports.
Coupling independent_coupling(const OrderedPmf& p, const OrderedPmf& q);

/// Comonotone (north-west) coupling: cell (i, j) is the overlap length of the
/// intervals (P_{i-1}, P_i] and (Q_{j-1}, Q_j]. Zero-overlap cells are
/// dropped, so coincident breakpoints produce a diagonal staircase step.
/// Has at most len(p) + len(q) - 1 cells.
Coupling comonotone_coupling(const OrderedPmf& p, const OrderedPmf& q);

/// Quantile coupling of a nonempty family through one shared uniform
/// variable: intervals of the common breakpoint refinement, labelled with
/// each marginal's quantile index. Breakpoints closer than kCmpTol merge.
RefinementCoupling comonotone_many(std::span<const OrderedPmf> ps);

/// Cell masses sorted nonincreasingly, zero-padded to pad_to when requested.
OrderedPmf sorted_mass_vector(const Coupling& c, std::size_t pad_to = 0);
OrderedPmf sorted_mass_vector(const RefinementCoupling& c,
                              std::size_t pad_to = 0);

enum class Extremum { max, min };

/// Sums the cells of a comonotone coupling over levels of max(i, j) or
/// min(i, j). The max aggregation is the meet of the marginals; the min
/// aggregation is the max-prefix vector whose concavification is the join.
/// Raises not_comonotone when the staircase invariant fails.
RawVector aggregate_by_extremum(const Coupling& c, Extremum which);

enum class Axis { row, col };

/// Recomputes one marginal by summing cells along the other axis.
OrderedPmf marginal(const Coupling& c, Axis axis);

}  // namespace majlat
