#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "majlat/coupling.hpp"
#include "majlat/lattice.hpp"
#include "majlat/sweep.hpp"
#include "support/helpers.hpp"

using namespace majlat;
using majlat::testing::code_of;

namespace {

std::map<std::pair<std::size_t, std::size_t>, double> cell_map(
    const Coupling& c) {
  std::map<std::pair<std::size_t, std::size_t>, double> out;
  for (const auto& cell : c.cells()) out[{cell.row, cell.col}] = cell.mass;
  return out;
}

}  // namespace

TEST_CASE("independent coupling") {
  const Coupling half = independent_coupling(
      OrderedPmf::from_values({0.5, 0.5}), OrderedPmf::from_values({0.5, 0.5}));
  REQUIRE(half.cells().size() == 4);
  for (const auto& cell : half.cells()) CHECK(cell.mass == 0.25);

  const OrderedPmf q = OrderedPmf::from_values({0.45, 0.4, 0.15});
  const Coupling row = independent_coupling(OrderedPmf::from_values({1.0}), q);
  REQUIRE(row.cells().size() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(row.cells()[j].row == 0);
    CHECK(row.cells()[j].col == j);
    CHECK(row.cells()[j].mass == q[j]);
  }

  const auto cells = cell_map(independent_coupling(
      OrderedPmf::from_values({0.6, 0.4}), OrderedPmf::from_values({0.75, 0.25})));
  CHECK(cells.at({0, 0}) == doctest::Approx(0.45).epsilon(1e-14));
  CHECK(cells.at({0, 1}) == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(cells.at({1, 0}) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(cells.at({1, 1}) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("comonotone coupling") {
  const auto cells = cell_map(comonotone_coupling(
      OrderedPmf::from_values({0.5, 0.5}), OrderedPmf::from_values({0.75, 0.25})));
  REQUIRE(cells.size() == 3);
  CHECK(cells.at({0, 0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cells.at({1, 0}) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(cells.at({1, 1}) == doctest::Approx(0.25).epsilon(1e-14));

  const OrderedPmf p = OrderedPmf::from_values({0.6, 0.2, 0.2});
  const Coupling diag = comonotone_coupling(p, p);
  REQUIRE(diag.cells().size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(diag.cells()[k].row == k);
    CHECK(diag.cells()[k].col == k);
    CHECK(diag.cells()[k].mass == doctest::Approx(p[k]).epsilon(1e-14));
  }

  const OrderedPmf q = OrderedPmf::from_values({0.45, 0.4, 0.15});
  const Coupling row = comonotone_coupling(OrderedPmf::from_values({1.0}), q);
  REQUIRE(row.cells().size() == 3);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(row.cells()[j].mass == doctest::Approx(q[j]).epsilon(1e-14));
}

TEST_CASE("comonotone support is a short staircase") {
  const SimplexSampler sampler(61);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const OrderedPmf p = sampler.sample_mixed(n, 2 * t);
    const OrderedPmf q = sampler.sample_mixed(n, 2 * t + 1);
    const Coupling c = comonotone_coupling(p, q);
    CHECK(c.is_staircase());
    CHECK(c.cells().size() <= p.size() + q.size() - 1);
  }
}

TEST_CASE("refinement of several marginals") {
  const OrderedPmf p = OrderedPmf::from_values({0.5, 0.5});
  const OrderedPmf q = OrderedPmf::from_values({0.75, 0.25});

  const RefinementCoupling single = comonotone_many(std::vector{p});
  REQUIRE(single.intervals().size() == 2);
  CHECK(single.intervals()[0].length == doctest::Approx(0.5));
  CHECK(single.intervals()[1].length == doctest::Approx(0.5));

  const RefinementCoupling pair = comonotone_many(std::vector{p, q});
  REQUIRE(pair.intervals().size() == 3);
  CHECK(pair.intervals()[0].length == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pair.intervals()[1].length == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(pair.intervals()[2].length == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(pair.intervals()[0].labels == std::vector<std::size_t>{0, 0});
  CHECK(pair.intervals()[1].labels == std::vector<std::size_t>{1, 0});
  CHECK(pair.intervals()[2].labels == std::vector<std::size_t>{1, 1});

  const RefinementCoupling triple =
      comonotone_many(std::vector{p, p, p});
  REQUIRE(triple.intervals().size() == 2);
  CHECK(triple.intervals()[0].labels == std::vector<std::size_t>{0, 0, 0});
  CHECK(triple.intervals()[1].labels == std::vector<std::size_t>{1, 1, 1});

  CHECK(code_of([] { comonotone_many({}); }) == errc::empty_list);
}

TEST_CASE("pairwise refinement matches the comonotone coupling") {
  const SimplexSampler sampler(71);
  for (int t = 0; t < 300; ++t) {
    const OrderedPmf p = sampler.sample(5, 2 * t);
    const OrderedPmf q = sampler.sample(5, 2 * t + 1);
    const Coupling c = comonotone_coupling(p, q);
    const RefinementCoupling r = comonotone_many(std::vector{p, q});
    REQUIRE(r.intervals().size() == c.cells().size());
    for (std::size_t k = 0; k < c.cells().size(); ++k) {
      CHECK(r.intervals()[k].labels[0] == c.cells()[k].row);
      CHECK(r.intervals()[k].labels[1] == c.cells()[k].col);
      CHECK(std::abs(r.intervals()[k].length - c.cells()[k].mass) <= 1e-12);
    }
  }
}

TEST_CASE("refinement aggregates back to every marginal") {
  const SimplexSampler sampler(83);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + rng() % 3;
    const std::size_t n = 2 + rng() % 5;
    std::vector<OrderedPmf> ps;
    for (std::size_t i = 0; i < m; ++i)
      ps.push_back(sampler.sample(n, m * t + i));
    const RefinementCoupling r = comonotone_many(ps);

    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> sums(ps[i].size(), 0.0);
      for (const auto& iv : r.intervals()) sums[iv.labels[i]] += iv.length;
      for (std::size_t k = 0; k < sums.size(); ++k)
        CHECK(std::abs(sums[k] - ps[i][k]) <= 1e-11);
      // Aggregating to a marginal means the refinement sits below it.
      CHECK(is_majorized_by(sorted_mass_vector(r), ps[i]));
    }
  }
}

TEST_CASE("sorted mass vectors") {
  const OrderedPmf si = sorted_mass_vector(independent_coupling(
      OrderedPmf::from_values({0.6, 0.4}), OrderedPmf::from_values({0.75, 0.25})));
  REQUIRE(si.size() == 4);
  CHECK(si[0] == doctest::Approx(0.45).epsilon(1e-14));
  CHECK(si[1] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(si[2] == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(si[3] == doctest::Approx(0.1).epsilon(1e-14));

  const OrderedPmf sc = sorted_mass_vector(comonotone_coupling(
      OrderedPmf::from_values({0.5, 0.5}), OrderedPmf::from_values({0.75, 0.25})));
  REQUIRE(sc.size() == 3);
  CHECK(sc[0] == doctest::Approx(0.5));
  CHECK(sc[1] == doctest::Approx(0.25));
  CHECK(sc[2] == doctest::Approx(0.25));

  const OrderedPmf q = OrderedPmf::from_values({0.45, 0.4, 0.15});
  CHECK(equal_up_to_padding(
      sorted_mass_vector(comonotone_coupling(OrderedPmf::from_values({1.0}), q)),
      q, 1e-14));

  CHECK(sorted_mass_vector(comonotone_coupling(q, q), 8).size() == 8);
}

TEST_CASE("extremum aggregation recovers meet and join") {
  const auto [p, q] = gap_positive_pair();
  const Coupling c = comonotone_coupling(p, q);

  const RawVector via_max = aggregate_by_extremum(c, Extremum::max);
  const std::vector<double> want_meet{0.45, 0.35, 0.2};
  REQUIRE(via_max.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(std::abs(via_max[k] - want_meet[k]) <= 1e-12);

  const RawVector via_min = aggregate_by_extremum(c, Extremum::min);
  const std::vector<double> want_beta{0.6, 0.25, 0.15};
  REQUIRE(via_min.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(std::abs(via_min[k] - want_beta[k]) <= 1e-12);

  const Coupling diag = comonotone_coupling(p, p);
  const RawVector self_max = aggregate_by_extremum(diag, Extremum::max);
  const RawVector self_min = aggregate_by_extremum(diag, Extremum::min);
  for (std::size_t k = 0; k < p.size(); ++k) {
    CHECK(std::abs(self_max[k] - p[k]) <= 1e-14);
    CHECK(std::abs(self_min[k] - p[k]) <= 1e-14);
  }
}

TEST_CASE("extremum aggregation rejects non-staircase couplings") {
  const OrderedPmf half = OrderedPmf::from_values({0.5, 0.5});
  const Coupling crossed({{0, 1, 0.5}, {1, 0, 0.5}}, half, half);
  CHECK_FALSE(crossed.is_staircase());
  CHECK(code_of([&] { aggregate_by_extremum(crossed, Extremum::max); }) ==
        errc::not_comonotone);
}

TEST_CASE("marginals recompute from cells") {
  const SimplexSampler sampler(91);
  for (int t = 0; t < 100; ++t) {
    const OrderedPmf p = sampler.sample(4, 2 * t);
    const OrderedPmf q = sampler.sample(6, 2 * t + 1);
    for (const Coupling& c :
         {independent_coupling(p, q), comonotone_coupling(p, q)}) {
      CHECK(equal_up_to_padding(marginal(c, Axis::row), p, 1e-11));
      CHECK(equal_up_to_padding(marginal(c, Axis::col), q, 1e-11));
    }
  }
}

TEST_CASE("sorted comonotone vector majorizes sorted independent vector") {
  const SimplexSampler sampler(101);
  std::mt19937_64 rng(37);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const OrderedPmf p = sampler.sample_mixed(n, 2 * t);
    const OrderedPmf q = sampler.sample_mixed(n, 2 * t + 1);
    const OrderedPmf si = sorted_mass_vector(independent_coupling(p, q));
    const OrderedPmf sc = sorted_mass_vector(comonotone_coupling(p, q));
    CHECK(majorization_margin(si, sc) >= -kCmpTol);
  }
}

TEST_CASE("extremum aggregations match lattice operations") {
  const SimplexSampler sampler(103);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const OrderedPmf p = sampler.sample_mixed(n, 2 * t);
    const OrderedPmf q = sampler.sample_mixed(n, 2 * t + 1);
    const Coupling c = comonotone_coupling(p, q);

    const RawVector via_max = aggregate_by_extremum(c, Extremum::max);
    const OrderedPmf w = meet(p, q);
    for (std::size_t k = 0; k < w.size(); ++k)
      CHECK(std::abs(w[k] - via_max[k]) <= 1e-12);

    const OrderedPmf v2 = concavify(aggregate_by_extremum(c, Extremum::min));
    CHECK(equal_up_to_padding(v2, join(p, q), 1e-12));
  }
}
