#include <doctest.h>

#include <utility>
#include <vector>

#include "majlat/exact.hpp"
#include "majlat/lattice.hpp"
#include "support/helpers.hpp"

using namespace majlat;
using majlat::exact::ExactPredicate;
using majlat::exact::Rational;
using majlat::exact::RationalPmf;
using majlat::testing::code_of;

namespace {

using Frac = std::pair<std::int64_t, std::int64_t>;

RationalPmf make(std::initializer_list<Frac> fracs) {
  std::vector<Frac> v(fracs);
  return RationalPmf::from_fractions(v);
}

// Fixture pairs as exact fractions over 10^9 (their decimal precision).
RationalPmf fixture_p2() {
  return make({{398886918, 1000000000},
               {370328848, 1000000000},
               {228811150, 1000000000},
               {1973084, 1000000000}});
}
RationalPmf fixture_q2() {
  return make({{539996140, 1000000000},
               {229554617, 1000000000},
               {116684354, 1000000000},
               {113764889, 1000000000}});
}

}  // namespace

TEST_CASE("rational PMFs validate exactly") {
  const RationalPmf half = make({{1, 2}, {1, 2}});
  CHECK(half.size() == 2);
  CHECK(half[0] == Rational(1, 2));

  CHECK(code_of([] { make({{1, 2}, {1, 3}}); }) == errc::not_rational);
  CHECK(code_of([] { make({{3, 2}, {-1, 2}}); }) == errc::not_rational);
  CHECK(code_of([] { make({{1, 0}}); }) == errc::not_rational);
  CHECK(code_of([] {
          RationalPmf::from_values({});
        }) == errc::empty_input);

  // Sorting happens on construction.
  const RationalPmf sorted = make({{1, 4}, {3, 4}});
  CHECK(sorted[0] == Rational(3, 4));
}

TEST_CASE("exact lattice operations match the floating implementation") {
  const RationalPmf p = fixture_p2();
  const RationalPmf q = fixture_q2();

  const RationalPmf w = exact::meet(p, q);
  CHECK(w[0] == Rational(398886918, 1000000000));
  CHECK(w[2] == Rational(117019345, 1000000000));

  const RationalPmf v = exact::join(p, q);
  CHECK(v[0] == Rational(539996140, 1000000000));
  CHECK(v[2] == Rational(228476159, 1000000000));

  const OrderedPmf dw = meet(exact::to_double(p), exact::to_double(q));
  const OrderedPmf dv = join(exact::to_double(p), exact::to_double(q));
  CHECK(equal_up_to_padding(exact::to_double(w), dw, 1e-12));
  CHECK(equal_up_to_padding(exact::to_double(v), dv, 1e-12));
}

TEST_CASE("exact majorization and support") {
  const RationalPmf u3 = make({{1, 3}, {1, 3}, {1, 3}});
  const RationalPmf p = make({{1, 2}, {3, 10}, {1, 5}});
  CHECK(exact::is_majorized_by(u3, p));
  CHECK_FALSE(exact::is_majorized_by(p, u3));
  CHECK(exact::support_size(make({{1, 2}, {1, 2}, {0, 1}})) == 2);
  CHECK(exact::power_sum2(u3) == Rational(1, 3));
}

TEST_CASE("exact coupling comparison") {
  const RationalPmf p = make({{1, 2}, {1, 2}});
  const RationalPmf q = make({{3, 4}, {1, 4}});

  const std::vector<Rational> com = exact::sorted_comonotone(p, q);
  REQUIRE(com.size() == 3);
  CHECK(com[0] == Rational(1, 2));
  CHECK(com[1] == Rational(1, 4));
  CHECK(com[2] == Rational(1, 4));

  const std::vector<Rational> ind = exact::sorted_independent(p, q);
  REQUIRE(ind.size() == 4);
  CHECK(ind[0] == Rational(3, 8));

  CHECK(exact::oracle_exact_check(p, q, ExactPredicate::lemma2,
                                  AlphaOrder::one()));
}

TEST_CASE("exact oracle predicates") {
  const RationalPmf p = make({{3, 5}, {1, 5}, {1, 5}});
  const RationalPmf q = make({{9, 20}, {2, 5}, {3, 20}});

  for (const AlphaOrder& a :
       {AlphaOrder::zero(), AlphaOrder::one(), AlphaOrder::of(2.0)}) {
    CHECK(exact::oracle_exact_check(p, q, ExactPredicate::subadd, a));
    CHECK(exact::oracle_exact_check(p, q, ExactPredicate::supermod, a));
  }
  for (const AlphaOrder& a : {AlphaOrder::one(), AlphaOrder::of(2.0)}) {
    CHECK(exact::oracle_exact_check(p, q, ExactPredicate::corollary1_equality,
                                    a));
    CHECK(exact::oracle_exact_check(p, p, ExactPredicate::corollary1_equality,
                                    a));
  }
  // The equality-iff statement does not cover order zero.
  CHECK(code_of([&] {
          exact::oracle_exact_check(p, q, ExactPredicate::corollary1_equality,
                                    AlphaOrder::zero());
        }) == errc::unsupported_order);

  CHECK(exact::oracle_exact_check(fixture_p2(), fixture_q2(),
                                  ExactPredicate::subadd, AlphaOrder::of(2.0)));
  CHECK(exact::oracle_exact_check(fixture_p2(), fixture_q2(),
                                  ExactPredicate::supermod,
                                  AlphaOrder::of(2.0)));

  CHECK(code_of([&] {
          exact::oracle_exact_check(p, q, ExactPredicate::subadd,
                                    AlphaOrder::of(0.5));
        }) == errc::unsupported_order);
}

TEST_CASE("exhaustive exact subadditivity on a small grid") {
  // Distinct reduced PMFs of length 3 with denominator at most 6.
  const std::vector<RationalPmf> grid = exact::enumerate_grid(3, 6);
  CHECK(grid.size() == 13);
  for (const RationalPmf& p : grid)
    for (const RationalPmf& q : grid)
      CHECK(exact::oracle_exact_check(p, q, ExactPredicate::subadd,
                                      AlphaOrder::of(2.0)));
}

TEST_CASE("grid meets and joins are universal bounds") {
  const std::vector<RationalPmf> grid = exact::enumerate_grid(3, 5);
  for (const RationalPmf& p : grid)
    for (const RationalPmf& q : grid) {
      CHECK(exact::glb_is_universal(p, q, grid));
      CHECK(exact::lub_is_universal(p, q, grid));
    }
}
